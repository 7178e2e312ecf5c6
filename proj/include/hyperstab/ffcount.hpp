#pragma once

// Point counts of the moduli of hyperelliptic curves on F_n over F_q, with
// n = g+1-l. A curve is a triple (alpha, beta, gamma) of binary forms of
// degrees (l, g+1, 2g+2-l) with square-free discriminant
// delta = beta^2 - 4 alpha gamma, taken modulo the group G_n.

#include "linalg.hpp"
#include "poly.hpp"
#include "series.hpp"
#include "symfunc.hpp"

#include <atomic>
#include <thread>

namespace hyperstab {

// ---------------------------------------------------------------------------
// Polynomials over F_q (q an odd prime), coefficient i of x^i.

namespace fq {

using Poly = std::vector<int>;

inline int md(long long a, int q)
{
    a %= q;
    return static_cast<int>(a < 0 ? a + q : a);
}

inline int inv(int a, int q) { return static_cast<int>(mod_inverse(a, q)); }

inline void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int deg(const Poly& f)
{
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && f[d] == 0) --d;
    return d;  // -1 for the zero polynomial
}

inline Poly mul(const Poly& a, const Poly& b, int q)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
    }
    return r;
}

// {quotient, remainder}; b must be nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, int q)
{
    const int db = deg(b);
    if (db < 0) throw UsageError("fq::divmod: division by zero");
    trim(a);
    const int da = deg(a);
    if (da < db) return {Poly{}, a};
    Poly quo(static_cast<std::size_t>(da - db) + 1, 0);
    const int il = inv(b[db], q);
    for (int i = da; i >= db; --i) {
        const int c = a[i] * il % q;
        if (!c) continue;
        quo[i - db] = c;
        for (int k = 0; k <= db; ++k) a[i - db + k] = md(a[i - db + k] - c * b[k], q);
    }
    trim(a);
    trim(quo);
    return {quo, a};
}

inline Poly monic(Poly f, int q)
{
    trim(f);
    if (f.empty()) return f;
    const int il = inv(f.back(), q);
    for (auto& c : f) c = c * il % q;
    return f;
}

inline Poly gcd(Poly a, Poly b, int q)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b, q).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, q);
}

inline Poly derivative(const Poly& f, int q)
{
    Poly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(static_cast<int>(i % q) * f[i] % q);
    trim(d);
    return d;
}

// f(x) = g(x^q) -> g (Frobenius is the identity on F_q).
inline Poly pth_root(const Poly& f, int q)
{
    Poly r;
    for (std::size_t i = 0; i < f.size(); i += static_cast<std::size_t>(q)) r.push_back(f[i]);
    trim(r);
    return r;
}

// Square-free factorization of a monic f of positive degree:
// list of (factor, multiplicity) with pairwise coprime square-free factors.
inline std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& f, int q)
{
    std::vector<std::pair<Poly, int>> out;
    if (deg(f) <= 0) return out;
    const Poly fp = derivative(f, q);
    if (fp.empty()) {
        for (auto& [g, m] : squarefree_factorization(pth_root(f, q), q)) out.emplace_back(g, m * q);
        return out;
    }
    Poly c = gcd(f, fp, q);
    Poly w = divmod(f, c, q).first;
    int i = 1;
    while (deg(w) > 0) {
        Poly y = gcd(w, c, q);
        Poly z = divmod(w, y, q).first;
        if (deg(z) > 0) out.emplace_back(monic(z, q), i);
        ++i;
        w = std::move(y);
        c = divmod(c, w, q).first;
    }
    if (deg(c) > 0)
        for (auto& [g, m] : squarefree_factorization(monic(pth_root(c, q), q), q)) out.emplace_back(g, m * q);
    return out;
}

} // namespace fq

// ---------------------------------------------------------------------------

// Binary form of a given degree; c[i] is the coefficient of x^i y^{deg-i}.
// Leading zeros are allowed (roots at infinity).
struct BinaryForm {
    int degree = 0;
    std::vector<int> c;

    BinaryForm() = default;
    BinaryForm(int deg, std::vector<int> coeffs) : degree(deg), c(std::move(coeffs))
    {
        if (static_cast<int>(c.size()) != degree + 1) throw UsageError("BinaryForm: coefficient count != degree+1");
    }
    static BinaryForm zero(int deg) { return BinaryForm(deg, std::vector<int>(static_cast<std::size_t>(deg) + 1, 0)); }

    bool is_zero() const
    {
        for (int x : c)
            if (x) return false;
        return true;
    }
    fq::Poly affine() const
    {
        fq::Poly p(c);
        fq::trim(p);
        return p;
    }
    // Multiplicity of the root [1:0]; the whole degree for the zero form.
    int infinity_multiplicity() const { return degree - fq::deg(affine()); }
    bool operator==(const BinaryForm&) const = default;
};

inline BinaryForm form_mul(const BinaryForm& a, const BinaryForm& b, int q)
{
    BinaryForm r = BinaryForm::zero(a.degree + b.degree);
    for (int i = 0; i <= a.degree; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; j <= b.degree; ++j) r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % q;
    }
    return r;
}

inline void require_odd_prime(int q)
{
    if (q == 2) throw UsageError("characteristic 2 is not supported");
    if (q < 3 || q > 46000 || !is_prime(q)) throw UsageError("q must be an odd prime below 46000");
}

// No repeated root on P^1: f(x,1) coprime to its derivative, and [1:0] a root
// of multiplicity at most one. The zero form is not square-free.
inline bool is_squarefree(const BinaryForm& f, int q)
{
    require_odd_prime(q);
    const fq::Poly a = f.affine();
    if (a.empty()) return false;
    if (f.degree - fq::deg(a) >= 2) return false;
    if (fq::deg(a) <= 0) return true;
    return fq::deg(fq::gcd(a, fq::derivative(a, q), q)) == 0;
}

// gcd of binary forms, normalized monic in the affine chart.
inline BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b, int q)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    fq::Poly g = fq::gcd(a.affine(), b.affine(), q);
    const int inf = std::min(a.infinity_multiplicity(), b.infinity_multiplicity());
    const int degree = fq::deg(g) + inf;
    g.resize(static_cast<std::size_t>(degree) + 1, 0);
    return BinaryForm(degree, g);
}

// a / b for binary forms with b | a.
inline BinaryForm form_exact_div(const BinaryForm& a, const BinaryForm& b, int q)
{
    auto [quo, rem] = fq::divmod(a.affine(), b.affine(), q);
    if (!rem.empty() || a.infinity_multiplicity() < b.infinity_multiplicity())
        throw InternalError("form_exact_div: divisor does not divide");
    const int degree = a.degree - b.degree;
    quo.resize(static_cast<std::size_t>(degree) + 1, 0);
    return BinaryForm(degree, quo);
}

// Root multiplicity type over the algebraic closure: a partition with one
// part i for each distinct root of multiplicity i.
inline Partition multiplicity_type(const BinaryForm& f, int q)
{
    if (f.is_zero()) throw UsageError("multiplicity_type: zero form");
    Partition parts;
    const fq::Poly a = fq::monic(f.affine(), q);
    for (const auto& [g, m] : fq::squarefree_factorization(a, q))
        for (int i = 0; i < fq::deg(g); ++i) parts.push_back(m);
    if (const int inf = f.infinity_multiplicity(); inf > 0) parts.push_back(inf);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return parts;
}

// ---------------------------------------------------------------------------
// Groups.

enum class GroupVariant { Full, G0, G0Prime };

inline const char* to_string(GroupVariant v)
{
    switch (v) {
    case GroupVariant::Full: return "full";
    case GroupVariant::G0: return "g0";
    default: return "g0prime";
    }
}

inline Int gl2_order(int q)
{
    const Int Q = q;
    return (Q * Q - 1) * (Q * Q - Q);
}

// |G_n(F_q)| for the full group; G0 and G0' only at n = 0.
inline Int group_order(int n, int q, GroupVariant variant)
{
    if (n < 0) throw UsageError("group_order: n must be nonnegative");
    const Int Q = q;
    const Int gl = gl2_order(q);
    switch (variant) {
    case GroupVariant::Full: return gl * (Q - 1) * ipow(Q, static_cast<unsigned>(n + 1));
    case GroupVariant::G0:
        if (n != 0) throw UsageError("group_order: variant g0 requires n = 0");
        return gl * gl / (Q - 1);
    case GroupVariant::G0Prime:
        if (n != 0) throw UsageError("group_order: variant g0prime requires n = 0");
        return Q * (Q - 1) * gl;
    }
    throw UsageError("group_order: unknown variant");
}

// ---------------------------------------------------------------------------
// Enumeration.

struct SectionTriple {
    BinaryForm alpha, beta, gamma;
};

inline BinaryForm discriminant(const SectionTriple& s, int q)
{
    BinaryForm d = form_mul(s.beta, s.beta, q);
    const BinaryForm ag = form_mul(s.alpha, s.gamma, q);
    for (std::size_t i = 0; i < d.c.size(); ++i) d.c[i] = fq::md(d.c[i] - 4LL * ag.c[i], q);
    return d;
}

// Psi inverse: gamma = (beta^2 - delta) / (4 alpha).
inline BinaryForm psi_inverse_gamma(const BinaryForm& alpha, const BinaryForm& beta, const BinaryForm& delta, int q)
{
    BinaryForm num = form_mul(beta, beta, q);
    for (std::size_t i = 0; i < num.c.size(); ++i) num.c[i] = fq::md(num.c[i] - delta.c[i], q);
    BinaryForm a4 = alpha;
    for (auto& x : a4.c) x = 4 * x % q;
    if (num.is_zero()) return BinaryForm::zero(num.degree - alpha.degree);
    return form_exact_div(num, a4, q);
}

struct StratumKey {
    int m = 0;
    Partition lambda;
    auto operator<=>(const StratumKey&) const = default;
    std::string str() const { return "m=" + std::to_string(m) + " lambda=" + to_string(lambda); }
};

// (m, lambda) of a triple: alpha' = gcd(alpha, delta) has degree m and must be
// square-free; lambda is the multiplicity type of alpha / alpha'.
inline StratumKey classify_stratum(const BinaryForm& alpha, const BinaryForm& delta_or_beta2, int q)
{
    const BinaryForm a1 = form_gcd(alpha, delta_or_beta2, q);
    if (!is_squarefree(a1, q) && a1.degree > 0)
        throw InternalError("stratified_count: gcd(alpha, delta) is not square-free");
    const BinaryForm rest = form_exact_div(alpha, a1, q);
    return {a1.degree, rest.degree > 0 ? multiplicity_type(rest, q) : Partition{}};
}

struct CountRecord {
    int g = 0, l = 0, q = 0;
    GroupVariant variant = GroupVariant::Full;
    Int raw = 0;
    Int group = 0;
    Rational stack = 0;
    bool field_assumption_met = true;  // q = 1 mod n when n >= 3
};

struct StratifiedCount {
    CountRecord record;
    std::map<StratumKey, Int> strata;
};

// Work budgets in units of discriminant evaluations.
inline long long parse_budget(const std::string& s)
{
    if (s == "small") return 400'000'000LL;
    if (s == "medium") return 8'000'000'000LL;
    if (s == "full") return 200'000'000'000LL;
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos == s.size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("budget must be small|medium|full or a positive integer");
}

inline void check_count_domain(int g, int l, int q, GroupVariant variant)
{
    require_odd_prime(q);
    if (g < 2) throw UsageError("count: g >= 2 required");
    if (l < 0 || l > g + 1) throw UsageError("count: need 0 <= l <= g+1");
    if (l == g + 1 && variant == GroupVariant::Full)
        throw UsageError("count: l = g+1 needs variant g0 or g0prime");
    if (l <= g && variant != GroupVariant::Full) throw UsageError("count: variants g0/g0prime require l = g+1");
}

inline long long enumeration_work(int g, int l, int q)
{
    const double table = std::pow(q, 2 * g + 3);
    const double proj_alpha = (std::pow(q, l + 1) - 1) / (q - 1);
    const double w = table * (proj_alpha + 1) + proj_alpha * std::pow(q, g + 2) * (2 * g + 3);
    return w > 9e18 ? std::numeric_limits<long long>::max() : static_cast<long long>(w);
}

inline std::string feasible_grid_hint(long long budget)
{
    std::string s;
    for (int q : {3, 5, 7, 11})
        for (int g = 2; g <= 12; ++g)
            if (enumeration_work(g, g + 1, q) > budget) {
                if (g > 2) s += " q=" + std::to_string(q) + ": g<=" + std::to_string(g - 1) + ";";
                break;
            }
    return s.empty() ? " none" : s;
}

namespace detail {

inline long long pack_digits(const std::vector<int>& d, int q)
{
    long long r = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) r = r * q + *it;
    return r;
}

inline void unpack_digits(long long idx, int q, std::vector<int>& d)
{
    for (auto& x : d) {
        x = static_cast<int>(idx % q);
        idx /= q;
    }
}

// One bit per form of degree D: square-free or not.
inline std::vector<std::uint8_t> squarefree_table(int D, int q)
{
    const long long size = ipow_ll(q, static_cast<unsigned>(D + 1));
    std::vector<std::uint8_t> tab(static_cast<std::size_t>(size));
    BinaryForm f = BinaryForm::zero(D);
    for (long long idx = 0; idx < size; ++idx) {
        unpack_digits(idx, q, f.c);
        tab[idx] = is_squarefree(f, q);
    }
    return tab;
}

// Linear map F_q^{D+1} -> F_q^l sending delta to its class modulo
// alpha * V_{D-l}; column i is the image of the i-th unit vector.
inline std::vector<std::vector<int>> coset_label_map(const std::vector<int>& alpha, int D, int q)
{
    const int l = static_cast<int>(alpha.size()) - 1;
    int nu = 0;
    while (alpha[nu] == 0) ++nu;
    const int inv_lead = fq::inv(alpha[nu], q);
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(D + 1));
    for (int i = 0; i <= D; ++i) {
        std::vector<int> v(static_cast<std::size_t>(D + 1), 0);
        v[i] = 1;
        for (int j = 0; j <= D - l; ++j) {
            const int c = v[nu + j] * inv_lead % q;
            if (!c) continue;
            for (int k = 0; k <= l; ++k) v[k + j] = fq::md(v[k + j] - c * alpha[k], q);
        }
        std::vector<int> lab;
        for (int k = 0; k < nu; ++k) lab.push_back(v[k]);
        for (int k = nu + D - l + 1; k <= D; ++k) lab.push_back(v[k]);
        cols[i] = std::move(lab);
    }
    return cols;
}

} // namespace detail

// Exhaustive count of D_{g,l}(F_q), optionally split into strata.
// For each alpha up to scalars, square-free delta are bucketed by their class
// modulo alpha * V_{2g+2-l}; beta^2 then selects its bucket. Since
// delta - beta^2 is a multiple of alpha, gcd(alpha, delta) = gcd(alpha, beta^2)
// and the stratum of every triple in a bucket is read off beta^2.
inline StratifiedCount enumerate_strata(int g, int l, int q, GroupVariant variant, bool want_strata, int jobs = 1,
                                        long long budget = parse_budget("small"))
{
    check_count_domain(g, l, q, variant);
    const long long work = enumeration_work(g, l, q);
    if (work > budget)
        throw DomainError("count: (g,l,q)=(" + std::to_string(g) + "," + std::to_string(l) + "," +
                          std::to_string(q) + ") needs ~" + std::to_string(work) +
                          " operations, over the budget; feasible at this budget (l=g+1 worst case):" +
                          feasible_grid_hint(budget));
    const int D = 2 * g + 2;
    const auto table = detail::squarefree_table(D, q);

    // alpha = 0 leaves delta = beta^2, never square-free.
    {
        BinaryForm beta = BinaryForm::zero(g + 1);
        const long long nb = ipow_ll(q, static_cast<unsigned>(g + 2));
        for (long long ib = 0; ib < nb; ++ib) {
            detail::unpack_digits(ib, q, beta.c);
            if (is_squarefree(form_mul(beta, beta, q), q))
                throw InternalError("count: beta^2 square-free, alpha = 0 would contribute");
        }
    }

    // Projective representatives: lowest nonzero coefficient equal to 1.
    std::vector<std::vector<int>> alphas;
    {
        std::vector<int> a(static_cast<std::size_t>(l + 1));
        const long long na = ipow_ll(q, static_cast<unsigned>(l + 1));
        for (long long ia = 1; ia < na; ++ia) {
            detail::unpack_digits(ia, q, a);
            int nu = 0;
            while (a[nu] == 0) ++nu;
            if (a[nu] == 1) alphas.push_back(a);
        }
    }

    const long long nlabels = ipow_ll(q, static_cast<unsigned>(l));
    const long long ndelta = static_cast<long long>(table.size());
    const long long nbeta = ipow_ll(q, static_cast<unsigned>(g + 2));

    struct Partial {
        Int raw = 0;
        std::map<StratumKey, Int> strata;
    };
    const std::size_t nw = static_cast<std::size_t>(std::max(1, jobs));
    std::vector<Partial> partial(nw);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mtx;

    auto worker = [&](std::size_t w) {
        try {
            std::vector<long long> bucket(static_cast<std::size_t>(nlabels));
            std::vector<int> delta(static_cast<std::size_t>(D + 1)), lab(static_cast<std::size_t>(l));
            BinaryForm beta = BinaryForm::zero(g + 1);
            for (std::size_t ai = next++; ai < alphas.size(); ai = next++) {
                const auto& a = alphas[ai];
                const auto cols = detail::coset_label_map(a, D, q);
                std::fill(bucket.begin(), bucket.end(), 0);
                std::fill(delta.begin(), delta.end(), 0);
                std::fill(lab.begin(), lab.end(), 0);
                for (long long idx = 0; idx < ndelta; ++idx) {
                    if (table[idx]) ++bucket[detail::pack_digits(lab, q)];
                    // Odometer step: each digit that moves changes delta by +e_i mod q.
                    for (int i = 0; i <= D; ++i) {
                        for (int k = 0; k < l; ++k) lab[k] = (lab[k] + cols[i][k]) % q;
                        if (++delta[i] < q) break;
                        delta[i] = 0;
                    }
                }
                const BinaryForm alpha(l, a);
                std::map<long long, StratumKey> key_of_label;
                for (long long ib = 0; ib < nbeta; ++ib) {
                    detail::unpack_digits(ib, q, beta.c);
                    const BinaryForm b2 = form_mul(beta, beta, q);
                    std::fill(lab.begin(), lab.end(), 0);
                    for (int i = 0; i <= D; ++i)
                        if (b2.c[i])
                            for (int k = 0; k < l; ++k) lab[k] = (lab[k] + b2.c[i] * cols[i][k]) % q;
                    const long long label = detail::pack_digits(lab, q);
                    const long long cnt = bucket[label];
                    if (!cnt) continue;
                    partial[w].raw += cnt;
                    if (want_strata) {
                        auto it = key_of_label.find(label);
                        if (it == key_of_label.end())
                            it = key_of_label.emplace(label, classify_stratum(alpha, b2, q)).first;
                        partial[w].strata[it->second] += cnt;
                    }
                }
            }
        } catch (...) {
            std::lock_guard lk(failure_mtx);
            if (!failure) failure = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < nw; ++w) pool.emplace_back(worker, w);
    worker(0);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    StratifiedCount out;
    auto& rec = out.record;
    rec.g = g;
    rec.l = l;
    rec.q = q;
    rec.variant = variant;
    for (const auto& p : partial) {
        rec.raw += p.raw;
        for (const auto& [k, v] : p.strata) out.strata[k] += v;
    }
    rec.raw *= (q - 1);
    for (auto& [k, v] : out.strata) v *= (q - 1);
    const int n = g + 1 - l;
    rec.group = group_order(n, q, variant);
    rec.stack = Rational(rec.raw, rec.group);
    rec.field_assumption_met = n < 3 || q % n == 1;
    return out;
}

inline CountRecord enumerate_count(int g, int l, int q, GroupVariant variant = GroupVariant::Full, int jobs = 1,
                                   long long budget = parse_budget("small"))
{
    return enumerate_strata(g, l, q, variant, false, jobs, budget).record;
}

inline StratifiedCount stratified_count(int g, int l, int q, GroupVariant variant = GroupVariant::Full, int jobs = 1,
                                        long long budget = parse_budget("small"))
{
    return enumerate_strata(g, l, q, variant, true, jobs, budget);
}

// Plain triple loop; the reference for the bucketed enumeration.
inline CountRecord naive_count(int g, int l, int q, GroupVariant variant = GroupVariant::Full,
                               long long bound = 50'000'000)
{
    check_count_domain(g, l, q, variant);
    if (std::pow(q, 3 * g + 6) > static_cast<double>(bound))
        throw DomainError("naive_count: q^(3g+6) exceeds the naive bound");
    SectionTriple s{BinaryForm::zero(l), BinaryForm::zero(g + 1), BinaryForm::zero(2 * g + 2 - l)};
    const long long na = ipow_ll(q, static_cast<unsigned>(l + 1));
    const long long nb = ipow_ll(q, static_cast<unsigned>(g + 2));
    const long long nc = ipow_ll(q, static_cast<unsigned>(2 * g + 3 - l));
    long long raw = 0;
    for (long long ia = 0; ia < na; ++ia) {
        detail::unpack_digits(ia, q, s.alpha.c);
        for (long long ib = 0; ib < nb; ++ib) {
            detail::unpack_digits(ib, q, s.beta.c);
            for (long long ic = 0; ic < nc; ++ic) {
                detail::unpack_digits(ic, q, s.gamma.c);
                raw += is_squarefree(discriminant(s, q), q);
            }
        }
    }
    CountRecord rec{g, l, q, variant, raw, group_order(g + 1 - l, q, variant), 0, true};
    rec.stack = Rational(rec.raw, rec.group);
    const int n = g + 1 - l;
    rec.field_assumption_met = n < 3 || q % n == 1;
    return rec;
}

struct PsiRoundTrip {
    long long checked = 0;
    long long failures = 0;
};

// Applies (alpha,beta,gamma) -> (alpha,beta,delta) -> (alpha,beta,(beta^2-delta)/(4 alpha))
// to every member of D_{g,l}(F_q).
inline PsiRoundTrip psi_roundtrip(int g, int l, int q, long long bound = 50'000'000)
{
    require_odd_prime(q);
    if (std::pow(q, 3 * g + 6) > static_cast<double>(bound)) throw DomainError("psi_roundtrip: case too large");
    SectionTriple s{BinaryForm::zero(l), BinaryForm::zero(g + 1), BinaryForm::zero(2 * g + 2 - l)};
    PsiRoundTrip r;
    const long long na = ipow_ll(q, static_cast<unsigned>(l + 1));
    const long long nb = ipow_ll(q, static_cast<unsigned>(g + 2));
    const long long nc = ipow_ll(q, static_cast<unsigned>(2 * g + 3 - l));
    for (long long ia = 0; ia < na; ++ia) {
        detail::unpack_digits(ia, q, s.alpha.c);
        for (long long ib = 0; ib < nb; ++ib) {
            detail::unpack_digits(ib, q, s.beta.c);
            for (long long ic = 0; ic < nc; ++ic) {
                detail::unpack_digits(ic, q, s.gamma.c);
                const BinaryForm delta = discriminant(s, q);
                if (!is_squarefree(delta, q)) continue;
                ++r.checked;
                if (s.alpha.is_zero() || !(psi_inverse_gamma(s.alpha, s.beta, delta, q) == s.gamma)) ++r.failures;
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Group action: (M, c, eps) with M in GL_2, c a unit, eps a form of degree n.
// f(x,y,z) -> f(M(x,y), c z + eps(x,y)) composed with the substitution M.

struct GroupElement {
    int a = 1, b = 0, c = 0, d = 1;  // M = [[a,b],[c,d]], x -> a x + b y, y -> c x + d y
    int scale = 1;
    BinaryForm eps;
};

inline BinaryForm substitute(const BinaryForm& f, const GroupElement& M, int q)
{
    BinaryForm r = BinaryForm::zero(f.degree);
    const BinaryForm lx(1, {M.b, M.a});  // a x + b y
    const BinaryForm ly(1, {M.d, M.c});  // c x + d y
    for (int i = 0; i <= f.degree; ++i) {
        if (!f.c[i]) continue;
        BinaryForm term(0, {f.c[i]});
        for (int k = 0; k < i; ++k) term = form_mul(term, lx, q);
        for (int k = i; k < f.degree; ++k) term = form_mul(term, ly, q);
        for (int k = 0; k <= f.degree; ++k) r.c[k] = (r.c[k] + term.c[k]) % q;
    }
    return r;
}

inline SectionTriple apply_group_element(const SectionTriple& s, const GroupElement& e, int q)
{
    const int c = e.scale;
    const BinaryForm a = substitute(s.alpha, e, q), b = substitute(s.beta, e, q), g = substitute(s.gamma, e, q);
    const BinaryForm ea = form_mul(e.eps, a, q), eb = form_mul(e.eps, b, q);
    const BinaryForm eea = form_mul(e.eps, ea, q);
    SectionTriple out{a, b, g};
    for (auto& x : out.alpha.c) x = x * c % q * c % q;
    for (int i = 0; i <= out.beta.degree; ++i) out.beta.c[i] = fq::md(2LL * c * ea.c[i] + 1LL * c * b.c[i], q);
    for (int i = 0; i <= out.gamma.degree; ++i) out.gamma.c[i] = fq::md(eea.c[i] + eb.c[i] + g.c[i], q);
    return out;
}

inline GroupElement random_group_element(int n, int q, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> u(0, q - 1), unit(1, q - 1);
    GroupElement e;
    do {
        e.a = u(rng);
        e.b = u(rng);
        e.c = u(rng);
        e.d = u(rng);
    } while (fq::md(1LL * e.a * e.d - 1LL * e.b * e.c, q) == 0);
    e.scale = unit(rng);
    e.eps = BinaryForm::zero(n);
    for (auto& x : e.eps.c) x = u(rng);
    return e;
}

inline SectionTriple random_member(int g, int l, int q, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> u(0, q - 1);
    SectionTriple s{BinaryForm::zero(l), BinaryForm::zero(g + 1), BinaryForm::zero(2 * g + 2 - l)};
    for (;;) {
        for (auto* f : {&s.alpha, &s.beta, &s.gamma})
            for (auto& x : f->c) x = u(rng);
        if (is_squarefree(discriminant(s, q), q)) return s;
    }
}

// ---------------------------------------------------------------------------
// Closed forms.

enum class DeltaParity { Printed, Swapped };

// 1 when g is odd (printed convention); the swapped convention uses g even.
inline int delta2(int g, DeltaParity p) { return (p == DeltaParity::Printed) ? (g % 2) : (1 - g % 2); }

enum class CountPart { Total, Stable };

inline QPolynomial qpow(int e) { return QPolynomial::monomial(Int(1), e); }

// The l = 4 stable part: [q^{2g}(q^6+2q^5+2q^4+2q^3+q^2+1) / ((q^2+1)(q+1))].
inline QPolynomial stable_part_l4(int g)
{
    const QPolynomial f(std::vector<Int>{1, 0, 1, 2, 2, 2, 1});
    const QPolynomial den(std::vector<Int>{1, 1, 1, 1});
    return divmod(qpow(2 * g) * f, den).first;
}

inline QPolynomial unstable_part_l4_g0mod12(int g)
{
    const Int G = g;
    return QPolynomial(std::vector<Int>{-6 * G * G + 5 * G, 3 * G * G - 4 * G - 1, 6 * G * G - G - 1, -3 * G * G - G});
}

// Printed point-count polynomial of H_{F_{g+1-l}, g} (or of H' when l = g+1).
inline QPolynomial closed_form_count(int g, int l, CountPart part = CountPart::Total,
                                     DeltaParity parity = DeltaParity::Printed)
{
    if (g < 2) throw UsageError("closed_form_count: g >= 2 required");
    const QPolynomial q1(std::vector<Int>{1, 1});  // q + 1
    const QPolynomial d(Int(delta2(g, parity)));
    auto not_printed = [&] {
        return DomainError("closed_form_count: no printed formula for g=" + std::to_string(g) +
                           ", l=" + std::to_string(l) + (part == CountPart::Stable ? " (stable part)" : ""));
    };
    if (l >= 1 && l <= 3 && l <= g + 1) {
        if (l == 1) return q1 * qpow(2 * g - 1);
        if (l == 2) return q1 * qpow(2 * g) - d;
        return q1 * (qpow(2 * g + 1) - d);
    }
    if (l == 4 && g >= 4) {
        if (part == CountPart::Stable) return stable_part_l4(g);
        if (g % 12 == 0) return stable_part_l4(g) + unstable_part_l4_g0mod12(g);
        throw not_printed();
    }
    if (l == g + 1 && g == 3) return qpow(8) * q1;
    if (l == g + 1 && g == 4) return q1 * qpow(2) * (qpow(9) + qpow(3) - qpow(2) - qpow(1) - QPolynomial(Int(1)));
    throw not_printed();
}

// Known stack count of H_g = H_{F_{g+1},g}: q^{2g-1}.
inline QPolynomial l0_count(int g) { return qpow(2 * g - 1); }

// ---------------------------------------------------------------------------
// Euler characteristic identity:
//   (1+L) P(-1) = L^{2g-1+l} Q_{g,l}(L^{-1})   up to L^{ceil(3l/2)}.

struct EulerReport {
    int l = 0, g = 0, window = 0;
    std::vector<Int> lhs, rhs;  // coefficients of L^0..L^window
    bool passed = false;
};

inline int euler_window(int l) { return (3 * l + 1) / 2; }

// Truncation needed so that every L^k, k <= K, of P(-1) is complete: a class
// in t-degree i has L-exponent at least 2i/3.
inline int euler_truncation(int K) { return (3 * K + 1) / 2; }

inline EulerReport euler_identity_check(int l, const GradedTateSeries<Int>& stable, int g = 100,
                                        DeltaParity parity = DeltaParity::Printed)
{
    if (l < 1 || l > 4) throw UsageError("euler_identity_check: 1 <= l <= 4");
    const int K = euler_window(l);
    if (stable.truncation() < euler_truncation(K))
        throw UsageError("euler_identity_check: window L^" + std::to_string(K) + " needs truncation >= " +
                         std::to_string(euler_truncation(K)));
    const QPolynomial Q = l == 4 ? closed_form_count(g, 4, CountPart::Stable) : closed_form_count(g, l, CountPart::Total, parity);
    const int top = 2 * g - 1 + l;
    if (Q.degree() != top) throw InternalError("euler_identity_check: Q_{g,l} has unexpected degree");
    const auto lhs = TatePolynomial<Int>::monomial(0) + TatePolynomial<Int>::monomial(1);
    const auto ev = lhs * evaluate_t(stable, -1);
    EulerReport rep{l, g, K, {}, {}, true};
    for (int k = 0; k <= K; ++k) {
        rep.lhs.push_back(ev.coeff(k));
        rep.rhs.push_back(Q.coeff(top - k));
        if (rep.lhs.back() != rep.rhs.back()) rep.passed = false;
    }
    return rep;
}

} // namespace hyperstab
