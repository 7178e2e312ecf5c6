#pragma once

// S_n-equivariant cohomology of M_{0,n} from twisted point counts of the
// ordered configuration space F(P^1, n). Minimal purity turns the count of
// M_{0,n} twisted by sigma into sum_i (-1)^i q^{n-3-i} tr(sigma | H^i).

#include "poly.hpp"
#include "symfunc.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <thread>

namespace hyperstab {

inline int moebius(int n)
{
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    return n > 1 ? -m : m;
}

// Points of P^1 with Frobenius orbit of exact size d, as a polynomial in q:
// d times the number of closed points of degree d.
inline QPolynomial exact_period_points(int d)
{
    if (d < 1) throw UsageError("exact_period_points: d >= 1 required");
    if (d == 1) return QPolynomial(std::vector<Int>{1, 1});
    QPolynomial s;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0) s += QPolynomial::monomial(Int(moebius(d / e)), e);
    return s;
}

// Closed points of degree d on P^1: a_d = exact_period_points(d) / d, which
// takes integer values at every q but has rational coefficients.
inline Polynomial<Rational> closed_point_count(int d)
{
    const QPolynomial m = exact_period_points(d);
    std::vector<Rational> c;
    for (const auto& x : m.coeffs()) c.emplace_back(x, d == 1 ? 1 : d);
    return Polynomial<Rational>(std::move(c));
}

// Fixed points of sigma o Frobenius on F(P^1, n), sigma of cycle type mu.
// Each d-cycle takes a point of exact period d, distinct from the orbits
// already used.
inline QPolynomial twisted_count_config_p1(int n, const CycleType& mu)
{
    if (weight(mu) != n || !is_partition(mu)) throw UsageError("twisted_count_config_p1: mu must partition n");
    QPolynomial r(Int(1));
    for (auto [d, c] : part_multiplicities(mu)) {
        const QPolynomial m = exact_period_points(d);
        for (int t = 0; t < c; ++t) r = r * (m - QPolynomial(Int(d) * t));
    }
    return r;
}

namespace detail {

// F_{p^k} as F_p[x]/(m), elements encoded in base p. Only Frobenius is needed.
class SmallExtensionField {
public:
    SmallExtensionField(int p, int k) : p_(p), k_(k)
    {
        size_ = 1;
        for (int i = 0; i < k; ++i) size_ *= p;
        modulus_ = find_irreducible();
        frob_.resize(static_cast<std::size_t>(size_));
        for (long long e = 0; e < size_; ++e) frob_[e] = encode(pow_p(decode(e)));
    }
    long long size() const { return size_; }
    long long frobenius(long long e) const { return frob_[static_cast<std::size_t>(e)]; }

private:
    using Vec = std::vector<int>;

    Vec decode(long long e) const
    {
        Vec v(k_);
        for (int i = 0; i < k_; ++i) {
            v[i] = static_cast<int>(e % p_);
            e /= p_;
        }
        return v;
    }
    long long encode(const Vec& v) const
    {
        long long e = 0;
        for (int i = k_ - 1; i >= 0; --i) e = e * p_ + v[i];
        return e;
    }
    Vec mul(const Vec& a, const Vec& b) const
    {
        std::vector<int> r(2 * k_, 0);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
        for (int i = 2 * k_ - 1; i >= k_; --i) {
            int c = r[i];
            if (!c) continue;
            r[i] = 0;
            for (int j = 0; j < k_; ++j) r[i - k_ + j] = ((r[i - k_ + j] - c * modulus_[j]) % p_ + p_) % p_;
        }
        r.resize(k_);
        return r;
    }
    Vec pow_p(const Vec& a) const
    {
        Vec r(k_, 0);
        r[0] = 1;
        for (int i = 0; i < p_; ++i) r = mul(r, a);
        return r;
    }
    // First monic irreducible of degree k in encoding order, by trial division.
    Vec find_irreducible() const
    {
        if (k_ == 1) return Vec{0};
        long long count = size_;
        for (long long e = 0; e < count; ++e) {
            Vec low = decode(e);
            Vec f(low);
            f.push_back(1);
            if (is_irreducible(f)) return low;
        }
        throw InternalError("SmallExtensionField: no irreducible polynomial found");
    }
    bool is_irreducible(const Vec& f) const
    {
        const int n = static_cast<int>(f.size()) - 1;
        for (int d = 1; 2 * d <= n; ++d) {
            long long cnt = 1;
            for (int i = 0; i < d; ++i) cnt *= p_;
            for (long long e = 0; e < cnt; ++e) {
                Vec g;
                long long t = e;
                for (int i = 0; i < d; ++i) {
                    g.push_back(static_cast<int>(t % p_));
                    t /= p_;
                }
                g.push_back(1);
                if (divides(g, f)) return false;
            }
        }
        return true;
    }
    bool divides(const Vec& g, Vec f) const
    {
        const int dg = static_cast<int>(g.size()) - 1;
        for (int i = static_cast<int>(f.size()) - 1; i >= dg; --i) {
            int c = f[i];
            if (!c) continue;
            for (int j = 0; j <= dg; ++j) f[i - dg + j] = ((f[i - dg + j] - c * g[j]) % p_ + p_) % p_;
        }
        for (int i = 0; i < dg; ++i)
            if (f[i]) return false;
        return true;
    }

    int p_, k_;
    long long size_;
    Vec modulus_;
    std::vector<long long> frob_;
};

} // namespace detail

inline constexpr long long kDefaultTwistedBruteBound = 2'000'000;

// Direct count of ordered n-point configurations in P^1 fixed by sigma o Frobenius.
// Each cycle of length d picks a point of exact Frobenius period d; the cycle's
// remaining points are its Frobenius images, and all points must be distinct.
inline Int brute_twisted_count(int n, const CycleType& mu, int q, long long bound = kDefaultTwistedBruteBound)
{
    if (weight(mu) != n || !is_partition(mu)) throw UsageError("brute_twisted_count: mu must partition n");
    if (q < 2) throw UsageError("brute_twisted_count: q must be prime");
    for (int f = 2; f * f <= q; ++f)
        if (q % f == 0) throw UsageError("brute_twisted_count: q must be prime");
    int lcm = 1;
    for (int d : mu) lcm = std::lcm(lcm, d);
    long long size = 1;
    for (int i = 0; i < lcm; ++i) {
        size *= q;
        if (size > bound) throw DomainError("brute_twisted_count: q^lcm(mu) exceeds resource bound");
    }
    detail::SmallExtensionField F(q, lcm);
    // Points of P^1(F): affine a in F encoded as a, infinity as F.size().
    const long long inf = F.size();
    auto frob = [&](long long pt) { return pt == inf ? inf : F.frobenius(pt); };
    auto period = [&](long long pt) {
        int k = 1;
        for (long long x = frob(pt); x != pt; x = frob(x)) ++k;
        return k;
    };
    std::vector<int> per(static_cast<std::size_t>(inf + 1));
    for (long long pt = 0; pt <= inf; ++pt) per[pt] = period(pt);

    std::vector<char> used(static_cast<std::size_t>(inf + 1), 0);
    Int total = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == mu.size()) {
            ++total;
            return;
        }
        const int d = mu[idx];
        for (long long pt = 0; pt <= inf; ++pt) {
            if (per[pt] != d || used[pt]) continue;
            long long x = pt;
            for (int i = 0; i < d; ++i, x = frob(x)) used[x] = 1;
            self(self, idx + 1);
            x = pt;
            for (int i = 0; i < d; ++i, x = frob(x)) used[x] = 0;
        }
    };
    rec(rec, 0);
    return total;
}

// layers[i] is the character of S_n on H^i(M_{0,n}), i = 0..n-3.
struct EquivariantPoincare {
    int n = 0;
    std::vector<CharacterVector> layers;

    const CharacterVector& layer(int i) const { return layers.at(static_cast<std::size_t>(i)); }
    bool operator==(const EquivariantPoincare&) const = default;
};

inline EquivariantPoincare compute_equivariant_poincare(int n)
{
    if (n < 3) throw UsageError("equivariant_poincare_m0n: n >= 3 required");
    const QPolynomial pgl2(std::vector<Int>{0, -1, 0, 1});  // q^3 - q
    EquivariantPoincare ep{n, std::vector<CharacterVector>(static_cast<std::size_t>(n - 2))};
    for (auto& layer : ep.layers) layer.degree = n;
    for (const auto& mu : partitions(n)) {
        QPolynomial quotient;
        try {
            quotient = exact_div(twisted_count_config_p1(n, mu), pgl2);
        } catch (const InternalError& e) {
            throw InternalError("equivariant_poincare_m0n: q^3-q does not divide N_mu for mu=" + to_string(mu) +
                                " (" + e.what() + ")");
        }
        if (quotient.degree() > n - 3) throw InternalError("equivariant_poincare_m0n: quotient degree too large");
        for (int i = 0; i <= n - 3; ++i) {
            Int tr = quotient.coeff(n - 3 - i);
            if (i % 2) tr = -tr;
            ep.layers[i].values[mu] = tr;
        }
    }
    if (!(ep.layers[0] == trivial_character(n))) throw InternalError("equivariant_poincare_m0n: layer 0 not trivial");
    return ep;
}

inline nlohmann::json to_json(const EquivariantPoincare& ep)
{
    nlohmann::json layers = nlohmann::json::array();
    for (int i = 0; i < static_cast<int>(ep.layers.size()); ++i) {
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& mu : partitions(ep.n))
            vals.push_back({{"cycle_type", mu}, {"trace", ep.layers[i].at(mu).str()}});
        layers.push_back({{"i", i}, {"values", vals}});
    }
    return {{"n", ep.n}, {"layers", layers}};
}

inline EquivariantPoincare equivariant_poincare_from_json(const nlohmann::json& j)
{
    EquivariantPoincare ep;
    ep.n = j.at("n").get<int>();
    for (const auto& layer : j.at("layers")) {
        const auto i = layer.at("i").get<std::size_t>();
        if (ep.layers.size() <= i) ep.layers.resize(i + 1);
        ep.layers[i].degree = ep.n;
        for (const auto& v : layer.at("values"))
            ep.layers[i].values[v.at("cycle_type").get<Partition>()] = Int(v.at("trace").get<std::string>());
    }
    return ep;
}

// Directory for the on-disk cache, from HYPERSTAB_CACHE; empty disables it.
inline std::filesystem::path m0n_cache_dir()
{
    const char* env = std::getenv("HYPERSTAB_CACHE");
    return env ? std::filesystem::path(env) : std::filesystem::path();
}

inline std::filesystem::path m0n_cache_file(const std::filesystem::path& dir, int n)
{
    return dir / ("m0n_" + std::to_string(n) + ".json");
}

// Reads a cached entry; nullopt when absent, unreadable or inconsistent.
inline std::optional<EquivariantPoincare> load_m0n_cache(const std::filesystem::path& dir, int n)
{
    const auto file = m0n_cache_file(dir, n);
    if (dir.empty() || !std::filesystem::exists(file)) return std::nullopt;
    try {
        std::ifstream in(file);
        auto ep = equivariant_poincare_from_json(nlohmann::json::parse(in));
        if (ep.n == n && static_cast<int>(ep.layers.size()) == n - 2) return ep;
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

// Writes through a temporary file and a rename, so readers never see a
// partial file.
inline void save_m0n_cache(const std::filesystem::path& dir, const EquivariantPoincare& ep)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto file = m0n_cache_file(dir, ep.n);
    auto tmp = file;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream out(tmp);
        out << to_json(ep).dump(1) << '\n';
        if (!out) return;
    }
    std::filesystem::rename(tmp, file, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

// Memoized in process, and on disk when HYPERSTAB_CACHE is set.
inline const EquivariantPoincare& equivariant_poincare_m0n(int n)
{
    static std::shared_mutex mtx;
    static std::map<int, EquivariantPoincare> memo;
    {
        std::shared_lock lk(mtx);
        if (auto it = memo.find(n); it != memo.end()) return it->second;
    }
    const auto dir = m0n_cache_dir();
    std::optional<EquivariantPoincare> ep = load_m0n_cache(dir, n);
    if (!ep) {
        ep = compute_equivariant_poincare(n);
        if (!dir.empty()) save_m0n_cache(dir, *ep);
    }
    std::unique_lock lk(mtx);
    return memo.emplace(n, std::move(*ep)).first->second;
}

} // namespace hyperstab
