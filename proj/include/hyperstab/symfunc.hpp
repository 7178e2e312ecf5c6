#pragma once

// Partitions, symmetric-group characters and Hall inner products.
// Characters are class functions keyed by cycle type; the Schur side is
// reached only through inner products with irreducible characters.

#include "core.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace hyperstab {

// Weakly decreasing positive parts. The same type serves as a cycle type.
using Partition = std::vector<int>;
using CycleType = Partition;

inline int weight(const Partition& p)
{
    int s = 0;
    for (int x : p) s += x;
    return s;
}

inline bool is_partition(const Partition& p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline std::string to_string(const Partition& p) { return "[" + join(p) + "]"; }

namespace detail {

inline void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

// All partitions of n in reverse lexicographic order: [n], [n-1,1], ..., [1^n].
inline const std::vector<Partition>& partitions(int n)
{
    if (n < 0) throw UsageError("partitions: n must be nonnegative");
    static std::shared_mutex mtx;
    static std::map<int, std::vector<Partition>> cache;
    {
        std::shared_lock lk(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<Partition> out;
    Partition cur;
    detail::partitions_rec(n, n, cur, out);
    std::unique_lock lk(mtx);
    return cache.emplace(n, std::move(out)).first->second;
}

// Multiplicities c_d of each part d.
inline std::map<int, int> part_multiplicities(const Partition& mu)
{
    std::map<int, int> c;
    for (int d : mu) ++c[d];
    return c;
}

// Order of the centralizer of a permutation of cycle type mu: prod d^{c_d} c_d!.
inline Int z_order(const CycleType& mu)
{
    Int z = 1;
    for (auto [d, c] : part_multiplicities(mu)) {
        for (int i = 1; i <= c; ++i) z *= Int(d) * i;
    }
    return z;
}

inline int sign(const CycleType& mu)
{
    int odd = 0;
    for (int d : mu) odd += (d - 1);
    return (odd % 2) ? -1 : 1;
}

inline Int factorial(int n)
{
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Partition merge_parts(const Partition& a, const Partition& b)
{
    Partition r;
    r.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r), std::greater<int>());
    return r;
}

namespace detail {

// Removes every rim hook of length r from lambda; returns (shape, sign of leg length).
inline std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lambda, int r)
{
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
    std::vector<std::pair<Partition, int>> out;
    for (int i = 0; i < len; ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        Partition shape;
        for (int k = 0; k < len; ++k) {
            int part = nb[k] - (len - 1 - k);
            if (part > 0) shape.push_back(part);
        }
        out.emplace_back(std::move(shape), (between % 2) ? -1 : 1);
    }
    return out;
}

inline long long mn_rec(const Partition& lambda, const CycleType& mu, std::size_t pos,
                        std::map<std::pair<Partition, Partition>, long long>& memo)
{
    if (pos == mu.size()) return lambda.empty() ? 1 : 0;
    Partition rest(mu.begin() + static_cast<long>(pos), mu.end());
    auto key = std::make_pair(lambda, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long long total = 0;
    for (auto& [shape, sgn] : remove_rim_hooks(lambda, mu[pos])) total += sgn * mn_rec(shape, mu, pos + 1, memo);
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace detail

// chi^lambda(mu) by Murnaghan-Nakayama. The memo table is shared and locked.
inline long long irreducible_character(const Partition& lambda, const CycleType& mu)
{
    if (weight(lambda) != weight(mu)) throw UsageError("irreducible_character: |lambda| != |mu|");
    static std::mutex mtx;
    static std::map<std::pair<Partition, Partition>, long long> memo;
    std::lock_guard lk(mtx);
    return detail::mn_rec(lambda, mu, 0, memo);
}

// Class function on S_n, one integer per cycle type.
struct CharacterVector {
    int degree = 0;
    std::map<CycleType, Int> values;

    const Int& at(const CycleType& mu) const
    {
        auto it = values.find(mu);
        if (it == values.end()) throw UsageError("CharacterVector: missing cycle type " + to_string(mu));
        return it->second;
    }
    bool operator==(const CharacterVector&) const = default;
};

inline CharacterVector trivial_character(int n)
{
    CharacterVector c{n, {}};
    for (const auto& mu : partitions(n)) c.values[mu] = 1;
    return c;
}

inline CharacterVector irreducible(const Partition& lambda)
{
    CharacterVector c{weight(lambda), {}};
    for (const auto& mu : partitions(c.degree)) c.values[mu] = irreducible_character(lambda, mu);
    return c;
}

inline CharacterVector regular_character(int n)
{
    CharacterVector c{n, {}};
    for (const auto& mu : partitions(n)) c.values[mu] = (mu == Partition(n, 1)) ? factorial(n) : Int(0);
    return c;
}

// <chi, psi> = sum_mu chi(mu) psi(mu) / z(mu).
inline Rational inner_product(const CharacterVector& a, const CharacterVector& b)
{
    if (a.degree != b.degree) throw UsageError("inner_product: degree mismatch");
    Rational s = 0;
    for (const auto& mu : partitions(a.degree)) s += Rational(a.at(mu) * b.at(mu), z_order(mu));
    return s;
}

// <chi, e_{k1} e_{k2} h_h>, i.e. the multiplicity of chi in the induction of
// sign x sign x trivial from S_{k1} x S_{k2} x S_h.
inline Int hall_inner_product_induced(const CharacterVector& chi, int k1, int k2, int h)
{
    if (k1 < 0 || k2 < 0 || h < 0) throw UsageError("hall_inner_product_induced: negative block");
    if (chi.degree != k1 + k2 + h) throw UsageError("hall_inner_product_induced: degree mismatch");
    Rational s = 0;
    for (const auto& m1 : partitions(k1)) {
        const Int z1 = z_order(m1);
        const int s1 = sign(m1);
        for (const auto& m2 : partitions(k2)) {
            const Int z12 = z1 * z_order(m2);
            const int s12 = s1 * sign(m2);
            const Partition m12 = merge_parts(m1, m2);
            for (const auto& m3 : partitions(h)) {
                const Int& val = chi.at(merge_parts(m12, m3));
                if (val == 0) continue;
                s += Rational(s12 * val, z12 * z_order(m3));
            }
        }
    }
    if (!is_integer(s)) throw InternalError("hall_inner_product_induced: non-integral result " + to_string(s));
    return numerator(s);
}

// Multiplicities of each irreducible in chi.
inline std::map<Partition, Int> schur_expand(const CharacterVector& chi)
{
    std::map<Partition, Int> out;
    for (const auto& lambda : partitions(chi.degree)) {
        Rational m = 0;
        for (const auto& mu : partitions(chi.degree))
            m += Rational(chi.at(mu) * irreducible_character(lambda, mu), z_order(mu));
        if (!is_integer(m)) throw InternalError("schur_expand: non-integral multiplicity for " + to_string(lambda));
        if (m != 0) out[lambda] = numerator(m);
    }
    return out;
}

} // namespace hyperstab
