#pragma once

// Exact linear algebra for the codimension lemma: the sections of V_{d,n}
// singular at a configuration of type (k1,k2,h) form a subspace of
// dimension v - 3k1 - 3k2 - 5h.

#include "spectral.hpp"

#include <optional>
#include <random>

namespace hyperstab {

using Row = std::vector<Int>;
using Matrix = std::vector<Row>;

// Sections f = alpha z^2 + beta z + gamma with deg alpha = d-2n,
// deg beta = d-n, deg gamma = d in (x, y).
struct SectionSpace {
    int d = 0, n = 0;

    struct Monomial {
        int a, b, c;  // x^a y^b z^c
    };

    SectionSpace(int d_, int n_) : d(d_), n(n_)
    {
        if (n < 0 || d < 2 * n) throw UsageError("SectionSpace: need d >= 2n >= 0");
        for (int c = 0; c <= 2; ++c)
            for (int a = d - c * n; a >= 0; --a) basis.push_back({a, d - c * n - a, c});
    }
    int dimension() const { return 3 * d - 3 * n + 3; }

    std::vector<Monomial> basis;
};

struct PointOnSurface {
    bool on_exceptional = false;
    Int x = 0, y = 0, z = 0;  // [x,y,z] off E_n; ([0,0,1],[x,y]) on E_n (z unused)

    static PointOnSurface off(Int x, Int y, Int z) { return {false, std::move(x), std::move(y), std::move(z)}; }
    static PointOnSurface on(Int u, Int v) { return {true, std::move(u), std::move(v), 0}; }
};

namespace detail {
inline Int pw(const Int& base, int e) { return e < 0 ? Int(0) : ipow(base, static_cast<unsigned>(e)); }
} // namespace detail

// Three linear functionals whose common zeros are the sections singular at p.
// Off E_n: the partials of f at (x,y,z). On E_n: (d alpha/dx, d alpha/dy, beta)
// at the point of P^1.
inline Matrix singularity_rows(const PointOnSurface& p, const SectionSpace& S)
{
    if (p.x == 0 && p.y == 0) throw UsageError("singularity_rows: degenerate point (x = y = 0)");
    using detail::pw;
    Matrix rows(3, Row(S.basis.size(), 0));
    for (std::size_t k = 0; k < S.basis.size(); ++k) {
        const auto [a, b, c] = S.basis[k];
        if (!p.on_exceptional) {
            rows[0][k] = a * pw(p.x, a - 1) * pw(p.y, b) * pw(p.z, c);
            rows[1][k] = b * pw(p.x, a) * pw(p.y, b - 1) * pw(p.z, c);
            rows[2][k] = c * pw(p.x, a) * pw(p.y, b) * pw(p.z, c - 1);
        } else if (c == 2) {
            rows[0][k] = a * pw(p.x, a - 1) * pw(p.y, b);
            rows[1][k] = b * pw(p.x, a) * pw(p.y, b - 1);
        } else if (c == 1) {
            rows[2][k] = pw(p.x, a) * pw(p.y, b);
        }
    }
    return rows;
}

// Rank over Q by fraction-free (Bareiss) elimination.
inline int rank_rational(Matrix m)
{
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t k = c + 1; k < cols; ++k) m[i][k] = (m[r][c] * m[i][k] - m[i][c] * m[r][k]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

inline long long mod_inverse(long long a, long long p)
{
    long long r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = static_cast<long long>(static_cast<__int128>(r) * a % p);
        a = static_cast<long long>(static_cast<__int128>(a) * a % p);
        e >>= 1;
    }
    return r;
}

// Rank over F_p of the reduction of an integer matrix.
inline int rank_mod_p(const Matrix& m, long long p)
{
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::vector<std::vector<long long>> a(m.size(), std::vector<long long>(cols));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            Int v = m[i][k] % p;
            if (v < 0) v += p;
            a[i][k] = static_cast<long long>(v);
        }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        const long long inv = mod_inverse(a[r][c], p);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (!a[i][c]) continue;
            const long long f = static_cast<long long>(static_cast<__int128>(a[i][c]) * inv % p);
            for (std::size_t k = c; k < cols; ++k)
                a[i][k] = static_cast<long long>(((a[i][k] - static_cast<__int128>(f) * a[r][k]) % p + p) % p);
        }
        ++r;
    }
    return static_cast<int>(r);
}

enum class FieldKind { Rational, Prime };

// Dimension of the common kernel of `rows` acting on a space of dimension `cols`.
inline int kernel_dimension(const Matrix& rows, std::size_t cols, FieldKind field = FieldKind::Rational,
                            long long p = 0)
{
    for (const auto& r : rows)
        if (r.size() != cols) throw UsageError("kernel_dimension: inconsistent row length");
    const int rk = field == FieldKind::Rational ? rank_rational(rows) : rank_mod_p(rows, p);
    return static_cast<int>(cols) - rk;
}

inline bool is_prime(long long n)
{
    if (n < 2) return false;
    for (long long f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

// Smallest prime >= 10^6 + 3 with p = 1 mod n when n >= 3.
inline long long working_prime(int n)
{
    for (long long p = 1'000'003;; p += 2)
        if (is_prime(p) && (n < 3 || p % n == 1)) return p;
}

// Printed sufficient bound: d >= max{k1+k2+5h/3+n-1, 2k1+2k2+h+2n-1}.
inline bool satisfies_codim_bound(const ConfigurationType& c, int d, int n)
{
    return 3 * d >= 3 * (c.k1 + c.k2 + n - 1) + 5 * c.h && d >= 2 * c.k1 + 2 * c.k2 + c.h + 2 * n - 1 && d >= 2 * n;
}

inline int minimal_bound_degree(const ConfigurationType& c, int n)
{
    int d = 2 * n;
    while (!satisfies_codim_bound(c, d, n)) ++d;
    return d;
}

inline constexpr int kCoordinateBox = 100;

// Random configuration of type c: k1 points on E_n, k2 points off E_n, and h
// pairs off E_n, all on distinct ruling lines [1,t].
inline std::vector<PointOnSurface> sample_configuration(const ConfigurationType& c, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> box(-kCoordinateBox, kCoordinateBox);
    std::vector<int> lines;
    while (static_cast<int>(lines.size()) < c.points()) {
        int t = box(rng);
        if (std::find(lines.begin(), lines.end(), t) == lines.end()) lines.push_back(t);
    }
    std::vector<PointOnSurface> pts;
    int li = 0;
    for (int i = 0; i < c.k1; ++i) pts.push_back(PointOnSurface::on(1, lines[li++]));
    for (int i = 0; i < c.k2; ++i) pts.push_back(PointOnSurface::off(1, lines[li++], box(rng)));
    for (int i = 0; i < c.h; ++i) {
        const int t = lines[li++];
        const int z1 = box(rng);
        int z2 = box(rng);
        while (z2 == z1) z2 = box(rng);
        pts.push_back(PointOnSurface::off(1, t, z1));
        pts.push_back(PointOnSurface::off(1, t, z2));
    }
    return pts;
}

inline Matrix configuration_rows(const std::vector<PointOnSurface>& pts, const SectionSpace& S)
{
    Matrix m;
    for (const auto& p : pts)
        for (auto& r : singularity_rows(p, S)) m.push_back(std::move(r));
    return m;
}

inline std::mt19937_64 trial_rng(std::uint64_t seed, int trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    return std::mt19937_64(seq);
}

struct RankFailure {
    int trial;
    int kernel;
};

struct RankReport {
    ConfigurationType type;
    int d = 0, n = 0, v = 0;
    int expected_kernel = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    FieldKind field = FieldKind::Rational;
    long long prime = 0;
    std::vector<RankFailure> failures;
    std::vector<int> kernels;  // one per trial

    bool passed() const { return failures.empty(); }
};

inline RankReport verify_bundle_rank(const ConfigurationType& c, int d, int n, int trials, std::uint64_t seed,
                                     FieldKind field = FieldKind::Rational, bool enforce_bound = true)
{
    if (!c.valid()) throw UsageError("verify_bundle_rank: invalid type " + c.str());
    if (enforce_bound && !satisfies_codim_bound(c, d, n))
        throw UsageError("verify_bundle_rank: d=" + std::to_string(d) + " violates d >= max{k1+k2+5h/3+n-1, " +
                         "2k1+2k2+h+2n-1} for type " + c.str() + " and n=" + std::to_string(n) +
                         " (smallest admissible d is " + std::to_string(minimal_bound_degree(c, n)) + ")");
    const SectionSpace S(d, n);
    RankReport rep{c, d, n, S.dimension(), S.dimension() - codimension(c), trials, seed, field,
                   field == FieldKind::Prime ? working_prime(n) : 0, {}, {}};
    for (int t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, t);
        const Matrix m = configuration_rows(sample_configuration(c, rng), S);
        const int k = kernel_dimension(m, S.basis.size(), field, rep.prime);
        rep.kernels.push_back(k);
        if (k != rep.expected_kernel) rep.failures.push_back({t, k});
    }
    return rep;
}

// A sampled configuration whose kernel exceeds v - codim, if any.
inline std::optional<RankFailure> find_rank_drop(const ConfigurationType& c, int d, int n, int trials,
                                                 std::uint64_t seed)
{
    const auto rep = verify_bundle_rank(c, d, n, trials, seed, FieldKind::Rational, false);
    for (const auto& f : rep.failures)
        if (f.kernel > rep.expected_kernel) return f;
    return std::nullopt;
}

} // namespace hyperstab
