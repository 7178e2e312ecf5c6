#pragma once

// Stable Hodge-Grothendieck series of the moduli of hyperelliptic curves on
// Hirzebruch surfaces:
//
//   P(t) = 1 + sum_{k1+k2+h >= 3} L^{2k1+k2+3h+i} t^{3k1+k2+4h+i} m_i
//              / ((1 + L t)(1 + L^2 t^3)),
//
// where m_i = <H^i(M_{0,k1+k2+h}), e_{k1} e_{k2} h_h>. For n > 0 the series is
// multiplied by (1 + L t^2).

#include "m0n.hpp"
#include "series.hpp"

#include <functional>
#include <thread>

namespace hyperstab {

using Series = GradedTateSeries<Int>;

inline Series numerator_term(int k1, int k2, int h, const EquivariantPoincare& ep, int truncation)
{
    const int L = k1 + k2 + h;
    if (k1 < 0 || k2 < 0 || h < 0 || L < 3) throw UsageError("numerator_term: need k1+k2+h >= 3");
    if (ep.n != L) throw UsageError("numerator_term: M_{0,n} data of wrong degree");
    Series s(truncation);
    const int lbase = 2 * k1 + k2 + 3 * h;
    const int tbase = 3 * k1 + k2 + 4 * h;
    for (int i = 0; i <= L - 3 && tbase + i <= truncation; ++i) {
        Int m = hall_inner_product_induced(ep.layer(i), k1, k2, h);
        if (m != 0) s[tbase + i].add_term(lbase + i, m);
    }
    return s;
}

struct TypeTriple {
    int k1, k2, h;
};

// Triples entering the numerator up to t-degree `bound`.
inline std::vector<TypeTriple> numerator_triples(int bound)
{
    std::vector<TypeTriple> out;
    for (int h = 0; 4 * h <= bound; ++h)
        for (int k1 = 0; 3 * k1 + 4 * h <= bound; ++k1)
            for (int k2 = 0; 3 * k1 + k2 + 4 * h <= bound; ++k2)
                if (k1 + k2 + h >= 3) out.push_back({k1, k2, h});
    return out;
}

inline Series stable_denominator(int truncation)
{
    return multiply(Series::one(truncation) + Series::monomial(truncation, 1, 1),
                    Series::one(truncation) + Series::monomial(truncation, 3, 2));
}

// Sum of numerator terms; `jobs` workers, summed in triple order.
inline Series stable_numerator(int truncation, int triple_bound, int jobs = 1)
{
    const auto triples = numerator_triples(triple_bound);
    for (const auto& t : triples) equivariant_poincare_m0n(t.k1 + t.k2 + t.h);
    std::vector<Series> parts(triples.size(), Series(truncation));
    auto work = [&](std::size_t start, std::size_t stride) {
        for (std::size_t i = start; i < triples.size(); i += stride) {
            const auto& t = triples[i];
            parts[i] = numerator_term(t.k1, t.k2, t.h, equivariant_poincare_m0n(t.k1 + t.k2 + t.h), truncation);
        }
    };
    const std::size_t nw = static_cast<std::size_t>(std::max(1, jobs));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < nw; ++w) pool.emplace_back(work, w, nw);
    work(0, nw);
    for (auto& th : pool) th.join();
    Series num(truncation);
    for (const auto& p : parts) num += p;
    return num;
}

inline Series stable_series(int max_degree, int triple_bound = -1, int jobs = 1)
{
    if (max_degree < 0) throw UsageError("stable_series: max_degree must be nonnegative");
    if (triple_bound < 0) triple_bound = max_degree;
    return Series::one(max_degree) +
           multiply(stable_numerator(max_degree, triple_bound, jobs), invert_unit(stable_denominator(max_degree)));
}

inline Series stable_series_positive_n(int max_degree, int jobs = 1)
{
    return multiply(Series::one(max_degree) + Series::monomial(max_degree, 2, 1), stable_series(max_degree, -1, jobs));
}

// Degrees up to (g - n + 2)/2 are stable.
inline Rational stable_range(int g, int n)
{
    if (g < 2 || n < 0 || n > g + 1) throw UsageError("stable_range: need g >= 2 and 0 <= n <= g+1");
    return Rational(g - n + 2, 2);
}

// Degree i -> (twist w -> multiplicity of Q(-w)).
struct StableCohomologyTable {
    int max_degree = 0;
    std::map<int, std::map<int, Int>> rows;
    bool operator==(const StableCohomologyTable&) const = default;
};

inline StableCohomologyTable table_from_series(const Series& s)
{
    StableCohomologyTable tab{s.truncation(), {}};
    for (int i = 0; i <= s.truncation(); ++i) {
        auto& row = tab.rows[i];
        for (const auto& [w, m] : s[i].terms()) {
            if (m < 0)
                throw InternalError("cohomology_table: negative multiplicity in degree " + std::to_string(i));
            row[w] = m;
        }
    }
    return tab;
}

// n = 0 uses the plain series; n > 0 the (1 + L t^2) multiple.
inline StableCohomologyTable cohomology_table(int n, int max_degree, int jobs = 1)
{
    if (n < 0) throw UsageError("cohomology_table: n must be nonnegative");
    return table_from_series(n == 0 ? stable_series(max_degree, -1, jobs) : stable_series_positive_n(max_degree, jobs));
}

} // namespace hyperstab
