#pragma once

// E^1-page bookkeeping for the discriminant spectral sequence: Borel-Moore
// classes of the strata F_(k1,k2,h), their grouping into columns by the
// number of points L = k1+k2+h, and the admissibility scan for differentials.
//
// Rendering conventions, fixed by calibration against the published L = 3
// column: a term L^a t^b of a stratum series is the class Q(-w) with
// w = a + v in relative degree b - 2v; column L puts it in row
// (b - 2v) - (L - 1). The five-point example tables use row = degree - p
// where p is the 1-based column position.

#include "stable.hpp"

#include <compare>
#include <tuple>

namespace hyperstab {

struct ConfigurationType {
    int k1 = 0, k2 = 0, h = 0;

    int points() const { return k1 + k2 + h; }
    bool valid() const { return k1 >= 0 && k2 >= 0 && h >= 0 && k1 + k2 + 2 * h >= 1; }
    bool operator==(const ConfigurationType&) const = default;
    std::string str() const
    {
        return "(" + std::to_string(k1) + "," + std::to_string(k2) + "," + std::to_string(h) + ")";
    }
};

inline int codimension(const ConfigurationType& c)
{
    if (!c.valid()) throw UsageError("codimension: invalid configuration type " + c.str());
    return 3 * c.k1 + 3 * c.k2 + 5 * c.h;
}

// Weight (3,3,5) first, then number of points k1+k2+2h, then inverse
// lexicographic order on (k1,k2,h).
inline std::strong_ordering type_order(const ConfigurationType& a, const ConfigurationType& b)
{
    auto key = [](const ConfigurationType& c) {
        return std::make_tuple(3 * c.k1 + 3 * c.k2 + 5 * c.h, c.k1 + c.k2 + 2 * c.h, -c.k1, -c.k2, -c.h);
    };
    return key(a) <=> key(b);
}

inline std::vector<ConfigurationType> types_with_points(int L)
{
    std::vector<ConfigurationType> out;
    for (int k1 = L; k1 >= 0; --k1)
        for (int k2 = L - k1; k2 >= 0; --k2) out.push_back({k1, k2, L - k1 - k2});
    return out;
}

inline std::vector<Int> layer_multiplicities(const ConfigurationType& c, const EquivariantPoincare& ep)
{
    if (c.points() < 3) throw UsageError("layer multiplicities need k1+k2+h >= 3");
    if (ep.n != c.points()) throw UsageError("M_{0,n} data of wrong degree for " + c.str());
    std::vector<Int> m;
    for (int i = 0; i <= ep.n - 3; ++i) m.push_back(hall_inner_product_induced(ep.layer(i), c.k1, c.k2, c.h));
    return m;
}

// Twisted Borel-Moore series of the configuration space X_(k1,k2,h):
//   L^{-k2-h} t^{2k2+2h} (L^{-1} t^3 + L^{-3} t^6) sum_j m_{L-3-j} L^{-j} t^{L-3+j}.
// The bracket is the PGL_2 factor, the prefactor the C^{k2} and B(P^1,2)^h fibres.
inline Series twisted_config_homology(const ConfigurationType& c, const EquivariantPoincare& ep)
{
    const int L = c.points();
    const auto m = layer_multiplicities(c, ep);
    const int T = 2 * c.k2 + 2 * c.h + 2 * L;
    Series base(T);
    for (int j = 0; j <= L - 3; ++j) base[L - 3 + j].add_term(-j, m[L - 3 - j]);
    Series pgl = Series::monomial(T, 3, -1) + Series::monomial(T, 6, -3);
    return multiply(base, pgl).shifted(2 * c.k2 + 2 * c.h, -c.k2 - c.h);
}

struct StratumClass {
    int bm_degree = 0;  // absolute Borel-Moore degree
    int twist = 0;      // w in Q(-w), after the global twist by Q(-v)
    Int multiplicity = 0;
    ConfigurationType type;
};

// Borel-Moore classes of the stratum F_(k1,k2,h) inside V_{d,n}, dim V = v.
// The stratum is a C^{v-c}-bundle (c the codimension) times an open simplex
// of dimension k1+k2+2h-1 over X, which shifts degrees by 2v-8h-5k1-5k2-1
// and weights by L^{-v+c}.
inline std::vector<StratumClass> stratum_homology(const ConfigurationType& c, int v, const EquivariantPoincare& ep)
{
    const Series x = twisted_config_homology(c, ep);
    const int dshift = 2 * v - 8 * c.h - 5 * c.k1 - 5 * c.k2 - 1;
    const int wshift = codimension(c);
    std::vector<StratumClass> out;
    for (int b = 0; b <= x.truncation(); ++b)
        for (const auto& [a, m] : x[b].terms()) out.push_back({b + dshift, a + wshift, m, c});
    return out;
}

struct E1Entry {
    int row = 0;
    int twist = 0;
    Int multiplicity = 0;
    std::vector<ConfigurationType> types;
};

struct E1Column {
    int L = 0;
    std::vector<E1Entry> entries;  // sorted by row descending, then twist ascending
};

inline E1Column e1_column(int L, int v)
{
    if (L < 3) throw UsageError("e1_column: L >= 3 required");
    const auto& ep = equivariant_poincare_m0n(L);
    std::map<std::pair<int, int>, E1Entry> merged;
    for (const auto& t : types_with_points(L)) {
        for (const auto& s : stratum_homology(t, v, ep)) {
            const int row = (s.bm_degree - 2 * v) - (L - 1);
            auto& e = merged[{-row, s.twist}];
            e.row = row;
            e.twist = s.twist;
            e.multiplicity += s.multiplicity;
            if (std::find(e.types.begin(), e.types.end(), t) == e.types.end()) e.types.push_back(t);
        }
    }
    E1Column col{L, {}};
    for (auto& [k, e] : merged)
        if (e.multiplicity != 0) col.entries.push_back(std::move(e));
    return col;
}

// ---------------------------------------------------------------------------
// Columns with k1+k2+h <= 2, stored as data. Rows use the relative degree
// minus the column position p = 1..5.
//
//  p=1 (1,0,0),(0,1,0): C^{v-3}-bundle over F_n, whose cells give Q, Q(1)^2,
//      Q(2) in degrees 0, 2, 4.
//  p=2 (0,0,1): C^{v-5}-bundle over a B(P^1,2)-bundle over P^1.
//  p=3 (2,0,0),(1,1,0),(0,2,0): C^{v-6} x open 1-simplex over the two-point
//      configuration spaces; only the invariant part survives.
//  p=4 (1,0,1),(0,1,1): C^{v-8} x open 2-simplex.
//  p=5 (0,0,2): C^{v-10} x open 3-simplex over F(P^1,2)/S_2.

struct SmallEntry {
    int row = 0;
    int twist = 0;
    int multiplicity = 0;
    bool operator==(const SmallEntry&) const = default;
};

struct SmallColumn {
    std::vector<ConfigurationType> types;
    std::vector<SmallEntry> entries;
};

struct SmallArrow {
    int source_column = 0;  // 1-based
    int target_column = 0;
    int row = 0;
    int twist = 0;
};

inline std::vector<SmallColumn> small_columns()
{
    return {
        {{{1, 0, 0}, {0, 1, 0}}, {{-3, 1, 1}, {-5, 2, 2}, {-7, 3, 1}}},
        {{{0, 0, 1}}, {{-7, 3, 1}, {-9, 4, 1}}},
        {{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}}, {{-8, 3, 2}, {-10, 4, 1}, {-12, 5, 1}}},
        {{{1, 0, 1}, {0, 1, 1}}, {{-10, 4, 1}, {-12, 5, 2}, {-14, 6, 1}}},
        {{{0, 0, 2}}, {{-14, 6, 1}}},
    };
}

// Nonzero differentials among the small columns (each of rank one).
inline std::vector<SmallArrow> small_column_arrows()
{
    return {{2, 1, -7, 3}, {4, 3, -10, 4}, {4, 3, -12, 5}, {5, 4, -14, 6}};
}

// Post-differential L=1,2 column of the main table, as data.
inline std::vector<SmallEntry> small_column_summary()
{
    return {{-3, 1, 1}, {-5, 2, 2}, {-6, 3, 2}, {-8, 4, 1}, {-9, 5, 1}};
}

// Survivors of small_columns() after cancelling every arrow, re-indexed into
// the single L=1,2 column (row -> row + p - 1).
inline std::vector<SmallEntry> small_columns_after_differentials()
{
    auto cols = small_columns();
    auto take = [&](int col, int row, int twist) {
        for (auto& e : cols[col - 1].entries)
            if (e.row == row && e.twist == twist && e.multiplicity > 0) {
                --e.multiplicity;
                return;
            }
        throw InternalError("small column arrow hits an empty entry");
    };
    for (const auto& a : small_column_arrows()) {
        take(a.source_column, a.row, a.twist);
        take(a.target_column, a.row, a.twist);
    }
    std::map<std::pair<int, int>, int> acc;
    for (int p = 1; p <= static_cast<int>(cols.size()); ++p)
        for (const auto& e : cols[p - 1].entries)
            if (e.multiplicity) acc[{-(e.row + p - 1), e.twist}] += e.multiplicity;
    std::vector<SmallEntry> out;
    for (auto [k, m] : acc) out.push_back({-k.first, k.second, m});
    return out;
}

// ---------------------------------------------------------------------------
// Five-point example: configurations with k1+k2+2h = 5.

inline std::vector<ConfigurationType> five_point_types()
{
    return {{1, 0, 2}, {0, 1, 2}, {2, 1, 1}, {1, 2, 1}, {4, 1, 0}, {1, 4, 0}, {5, 0, 0}, {0, 5, 0}};
}

// Entry of a five-point table: the class Q(k) (twisted homology of X) or
// Q(v - w) at degree 2v + row (strata), with row = degree - p.
struct ExampleEntry {
    int column = 0;  // 1-based position among the first four types
    int row = 0;
    int tate = 0;
    Int multiplicity = 0;
    bool operator==(const ExampleEntry&) const = default;
};

// Twisted homology of X for the four nonzero five-point types; entries Q(k).
inline std::vector<ExampleEntry> five_point_config_table()
{
    std::vector<ExampleEntry> out;
    const auto types = five_point_types();
    for (int p = 1; p <= 4; ++p) {
        const auto& c = types[p - 1];
        const Series x = twisted_config_homology(c, equivariant_poincare_m0n(c.points()));
        for (int b = 0; b <= x.truncation(); ++b)
            for (const auto& [a, m] : x[b].terms()) out.push_back({p, b - p, -a, m});
    }
    return out;
}

// Strata classes for the same four types; entries Q(v - w) at row 2v + row.
inline std::vector<ExampleEntry> five_point_strata_table(int v)
{
    std::vector<ExampleEntry> out;
    const auto types = five_point_types();
    for (int p = 1; p <= 4; ++p) {
        const auto& c = types[p - 1];
        for (const auto& s : stratum_homology(c, v, equivariant_poincare_m0n(c.points())))
            out.push_back({p, s.bm_degree - 2 * v - p, s.twist, s.multiplicity});
    }
    return out;
}

// Arrows in the five-point configuration table: (source col, target col, k of Q(k)).
struct ExampleArrow {
    int source_column, target_column, tate;
};

inline std::vector<ExampleArrow> five_point_arrows()
{
    return {{4, 2, 4}, {3, 1, 3}, {4, 2, 6}, {3, 1, 5}};
}

// ---------------------------------------------------------------------------
// Admissibility of differentials. A differential from the class with M_{0,L}
// twist j of type (k1,k2,h) to the class with twist j' of (k1',k2',h') needs
//   4h'+3k1'+2k2'-j'      = 4h+3k1+2k2-j
//   -5h'-4k1'-2k2'-3+j'   = -5h-4k1-2k2-4+j.

enum class DiffKind { None, I, II };

struct DiffCandidate {
    ConfigurationType source;
    ConfigurationType target;
    char family = '?';  // 'a'..'g'
    int r = 0;
    int j = 0;
    int jprime = 0;
    DiffKind kind = DiffKind::None;
};

inline bool diff_system_holds(const ConfigurationType& s, int j, const ConfigurationType& t, int jp)
{
    return 4 * t.h + 3 * t.k1 + 2 * t.k2 - jp == 4 * s.h + 3 * s.k1 + 2 * s.k2 - j &&
           -5 * t.h - 4 * t.k1 - 2 * t.k2 - 3 + jp == -5 * s.h - 4 * s.k1 - 2 * s.k2 - 4 + j;
}

// Target of family f in {a..g} with step r. Families a-e are sub-configurations,
// f and g degenerations.
inline ConfigurationType diff_family_target(char f, const ConfigurationType& s, int r)
{
    switch (f) {
    case 'a': return {s.k1, s.k2, s.h - r};
    case 'b': return {s.k1 - r, s.k2, s.h};
    case 'c': return {s.k1, s.k2 - r, s.h};
    case 'd': return {s.k1 + r, s.k2, s.h - r};
    case 'e': return {s.k1, s.k2 + r, s.h - r};
    case 'f': return {s.k1 + r, s.k2 - r, s.h};
    case 'g': return {s.k1, s.k2 - 2 * r, s.h + r};
    default: throw UsageError("diff_family_target: unknown family");
    }
}

// Every solution (source, target, j, j') with source points in [3, bound].
inline std::vector<DiffCandidate> differential_candidates(int bound)
{
    if (bound < 3) throw UsageError("differential_candidates: bound >= 3 required");
    std::vector<DiffCandidate> out;
    for (int L = 3; L <= bound; ++L) {
        for (const auto& s : types_with_points(L)) {
            for (char f = 'a'; f <= 'g'; ++f) {
                for (int r = 1; r <= 2 * bound; ++r) {
                    const auto t = diff_family_target(f, s, r);
                    if (t.k1 < 0 || t.k2 < 0 || t.h < 0 || t.points() < 3) continue;
                    for (int j = 0; j <= L - 3; ++j)
                        for (int jp = 0; jp <= t.points() - 3; ++jp) {
                            if (!diff_system_holds(s, j, t, jp)) continue;
                            DiffKind kind = DiffKind::None;
                            if (f == 'f' && r == 1) kind = DiffKind::I;
                            if (f == 'g' && r == 1) kind = DiffKind::II;
                            out.push_back({s, t, f, r, j, jp, kind});
                        }
                }
            }
        }
    }
    return out;
}

inline const char* to_string(DiffKind k)
{
    switch (k) {
    case DiffKind::I: return "I";
    case DiffKind::II: return "II";
    default: return "none";
    }
}

} // namespace hyperstab
