#pragma once

// Verification suites shared by the CLI and the acceptance runner. Each check
// records what it compared against: "reference" (published values),
// "identity" (an algebraic identity that must hold) or "oracle" (an
// independent computation).

#include "io.hpp"
#include "reference.hpp"

#include <chrono>

namespace hyperstab {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "skipped";
    }
}

struct Check {
    std::string id;
    CheckStatus status = CheckStatus::Skipped;
    std::string expected;
    std::string actual;
    std::string basis;
    std::string note;
};

struct SuiteResult {
    std::string name;
    std::vector<Check> checks;
    double seconds = 0;

    void add(std::string id, bool ok, std::string expected, std::string actual, std::string basis,
             std::string note = {})
    {
        checks.push_back({std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(expected),
                          std::move(actual), std::move(basis), std::move(note)});
    }
    void skip(std::string id, std::string basis, std::string note)
    {
        checks.push_back({std::move(id), CheckStatus::Skipped, "", "", std::move(basis), std::move(note)});
    }
    int count(CheckStatus s) const
    {
        return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; }));
    }
    bool passed() const { return count(CheckStatus::Fail) == 0; }
};

inline json to_json(const SuiteResult& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) {
        json j = {{"id", c.id}, {"status", to_string(c.status)}, {"expected", c.expected}, {"actual", c.actual},
                  {"basis", c.basis}};
        if (!c.note.empty()) j["note"] = c.note;
        checks.push_back(j);
    }
    return {{"suite", r.name},
            {"passed", r.count(CheckStatus::Pass)},
            {"failed", r.count(CheckStatus::Fail)},
            {"skipped", r.count(CheckStatus::Skipped)},
            {"checks", checks}};
}

struct VerifyOptions {
    std::uint64_t seed = 20240611;
    int jobs = 1;
    long long budget = parse_budget("small");
    DeltaParity parity = DeltaParity::Printed;
    int rank_trials = 100;
};

template <class F>
SuiteResult timed_suite(const std::string& name, F&& body)
{
    SuiteResult r{name, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

namespace detail {

template <class M>
std::string row_string(const M& row)
{
    std::map<int, Int> r;
    for (const auto& [w, m] : row)
        if (m != 0) r[w] += Int(m);
    return tate_sum(r);
}

} // namespace detail

// ---- stable cohomology in degrees 0..18

inline SuiteResult suite_example19(const VerifyOptions& opt = {})
{
    return timed_suite("example19", [&](SuiteResult& r) {
        const auto tab = cohomology_table(0, 18, opt.jobs);
        for (const auto& [i, want] : reference::stable_rows()) {
            std::map<int, Int> w;
            for (auto [k, m] : want) w[k] = m;
            const auto& got = tab.rows.at(i);
            r.add("degree." + std::to_string(i), got == w, detail::row_string(w), detail::row_string(got), "reference");
        }
    });
}

// ---- E^1 tables

inline SuiteResult suite_tables(const VerifyOptions& = {})
{
    return timed_suite("tables", [&](SuiteResult& r) {
        // Main table columns L = 3..6, compared row by row.
        for (const auto& [L, printed] : reference::main_table_columns()) {
            std::map<int, std::map<int, Int>> want, got;
            for (const auto& c : printed) want[c.row][c.twist] += c.multiplicity;
            for (const auto& e : e1_column(L, 0).entries) got[e.row][e.twist] += e.multiplicity;
            std::set<int> rows;
            for (const auto& [row, x] : want) rows.insert(row);
            for (const auto& [row, x] : got) rows.insert(row);
            for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
                if (*it < reference::main_table_lowest_row(L)) {
                    r.skip("main.L" + std::to_string(L) + ".row" + std::to_string(*it), "reference",
                           "below the printed part of the column");
                    continue;
                }
                const auto w = want.count(*it) ? want[*it] : std::map<int, Int>{};
                const auto g = got.count(*it) ? got[*it] : std::map<int, Int>{};
                r.add("main.L" + std::to_string(L) + ".row" + std::to_string(*it), w == g, detail::row_string(w),
                      detail::row_string(g), "reference");
            }
        }

        // Post-differential L=1,2 column from the small columns and their arrows.
        {
            const auto got = small_columns_after_differentials();
            const auto want = small_column_summary();
            auto fmt = [](const std::vector<SmallEntry>& v) {
                std::string s;
                for (const auto& e : v)
                    s += (s.empty() ? "" : "; ") + std::to_string(e.row) + ":Q(-" + std::to_string(e.twist) + ")^" +
                         std::to_string(e.multiplicity);
                return s;
            };
            r.add("small.summary", got == want, fmt(want), fmt(got), "identity",
                  "survivors of the small columns after the rank-one arrows");
        }

        // Five-point example: configuration table, strata table, arrows.
        auto fmt_ex = [](const std::map<std::pair<int, int>, Int>& m) {
            std::string s;
            for (const auto& [k, v] : m)
                s += (s.empty() ? "" : "; ") + std::to_string(k.first) + ":" + std::to_string(k.second) +
                     (v == 1 ? "" : "^" + v.str());
            return s;
        };
        const auto cfg = five_point_config_table();
        const auto strata = five_point_strata_table(0);
        for (int col = 1; col <= 4; ++col) {
            std::map<std::pair<int, int>, Int> want_c, got_c, want_s, got_s;
            for (const auto& e : reference::five_point_config_classes())
                if (e.column == col) want_c[{e.row, e.tate}] += 1;
            for (const auto& e : cfg)
                if (e.column == col) got_c[{e.row, e.tate}] += e.multiplicity;
            for (const auto& e : reference::five_point_strata_classes())
                if (e.column == col) want_s[{e.row, e.tate}] += 1;
            for (const auto& e : strata)
                if (e.column == col) got_s[{e.row, e.tate}] += e.multiplicity;
            const std::string t = five_point_types()[col - 1].str();
            r.add("ex.config." + t, want_c == got_c, fmt_ex(want_c), fmt_ex(got_c), "reference", "row:k of Q(k)");
            r.add("ex.strata." + t, want_s == got_s, fmt_ex(want_s), fmt_ex(got_s), "reference",
                  "row:w of Q(v-w) at degree 2v+row");
        }
        {
            // Each arrow lowers the degree by one and both ends carry the same Q(k);
            // together they must exhaust the configuration table.
            std::map<std::tuple<int, int, int>, Int> left;
            for (const auto& e : cfg) left[{e.column, e.row, e.tate}] += e.multiplicity;
            bool ok = true;
            for (const auto& a : five_point_arrows()) {
                std::optional<int> src_row;
                for (const auto& e : cfg)
                    if (e.column == a.source_column && e.tate == a.tate) src_row = e.row;
                if (!src_row) {
                    ok = false;
                    continue;
                }
                // Degree is row + column position; an arrow lowers it by one.
                const int tdeg = *src_row + a.source_column - 1;
                left[{a.source_column, *src_row, a.tate}] -= 1;
                left[{a.target_column, tdeg - a.target_column, a.tate}] -= 1;
            }
            for (const auto& [k, m] : left) ok = ok && m == 0;
            r.add("ex.arrows.cancel", ok, "all classes cancel", ok ? "all classes cancel" : "leftover classes", "identity");
        }
        for (int i = 4; i < 8; ++i) {
            const auto c = five_point_types()[i];
            const auto x = twisted_config_homology(c, equivariant_poincare_m0n(c.points()));
            r.add("ex.zero." + c.str(), x.is_zero(), "0", x.is_zero() ? "0" : x.str(), "identity");
        }
    });
}

// ---- M_{0,n}

inline std::string product_poincare(int n)
{
    QPolynomial p(Int(1));
    for (int j = 2; j <= n - 2; ++j) p = p * QPolynomial(std::vector<Int>{1, j});
    return p.str("t");
}

inline int lcm_of(const CycleType& mu)
{
    int l = 1;
    for (int x : mu) l = std::lcm(l, x);
    return l;
}

inline SuiteResult suite_m0n(const VerifyOptions& = {})
{
    return timed_suite("m0n", [&](SuiteResult& r) {
        for (int n = 1; n <= 6; ++n)
            for (const auto& mu : partitions(n))
                for (int q : {3, 5, 7}) {
                    if (n == 6 && (q != 3 || lcm_of(mu) > 6)) continue;
                    const Int want = twisted_count_config_p1(n, mu)(Int(q));
                    const Int got = brute_twisted_count(n, mu, q);
                    r.add("twisted." + std::to_string(n) + "." + to_string(mu) + ".q" + std::to_string(q), want == got,
                          want.str(), got.str(), "oracle", "closed product vs Frobenius-orbit enumeration");
                }
        for (int n = 3; n <= 10; ++n) {
            const auto& ep = equivariant_poincare_m0n(n);
            const Partition id(static_cast<std::size_t>(n), 1);
            std::vector<Int> dims;
            for (const auto& layer : ep.layers) dims.push_back(layer.at(id));
            const std::string got = QPolynomial(dims).str("t");
            r.add("identity_layers." + std::to_string(n), got == product_poincare(n), product_poincare(n), got, "identity");
            bool nonneg = true;
            std::string bad;
            for (std::size_t i = 0; i < ep.layers.size(); ++i)
                for (const auto& [lam, m] : schur_expand(ep.layers[i]))
                    if (m < 0) {
                        nonneg = false;
                        bad = "layer " + std::to_string(i) + " " + to_string(lam);
                    }
            r.add("schur_nonnegative." + std::to_string(n), nonneg, "all >= 0", nonneg ? "all >= 0" : bad, "identity");
        }
    });
}

// ---- codimension lemma

inline std::vector<ConfigurationType> small_types()
{
    return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
}

inline SuiteResult suite_ranks(const VerifyOptions& opt = {})
{
    return timed_suite("ranks", [&](SuiteResult& r) {
        auto types = small_types();
        for (const auto& t : types_with_points(3)) types.push_back(t);
        for (const auto& t : types)
            for (int n : {0, 1}) {
                const int d = minimal_bound_degree(t, n);
                const auto rep = verify_bundle_rank(t, d, n, opt.rank_trials, opt.seed);
                std::string got = "v-codim on " + std::to_string(rep.trials - static_cast<int>(rep.failures.size())) +
                                  "/" + std::to_string(rep.trials);
                if (!rep.failures.empty()) got += ", first failure kernel " + std::to_string(rep.failures[0].kernel);
                r.add("rank." + t.str() + ".n" + std::to_string(n) + ".d" + std::to_string(d), rep.passed(),
                      "kernel " + std::to_string(rep.expected_kernel) + " on all trials", got, "oracle",
                      "exact rational elimination, seed " + std::to_string(opt.seed));
            }
        {
            const ConfigurationType t{2, 0, 0};
            const auto drop = find_rank_drop(t, 4, 1, opt.rank_trials, opt.seed);
            const int expected = SectionSpace(4, 1).dimension() - codimension(t);
            r.add("witness.(2,0,0).n1.d4", drop.has_value(), "kernel > " + std::to_string(expected),
                  drop ? "kernel " + std::to_string(drop->kernel) + " at trial " + std::to_string(drop->trial)
                       : "no drop found",
                  "oracle", "d = 4 is below the bound 5");
        }
        {
            const ConfigurationType t{1, 1, 1};
            const int d = minimal_bound_degree(t, 3);
            const auto a = verify_bundle_rank(t, d, 3, 10, opt.seed, FieldKind::Rational);
            const auto b = verify_bundle_rank(t, d, 3, 10, opt.seed, FieldKind::Prime);
            r.add("field_agreement.(1,1,1).n3", a.kernels == b.kernels, join(a.kernels), join(b.kernels), "oracle",
                  "Q vs F_p with p = " + std::to_string(b.prime));
        }
    });
}

// ---- differential admissibility

inline SuiteResult suite_diffscan(const VerifyOptions& = {}, int bound = 8)
{
    return timed_suite("diffscan", [&](SuiteResult& r) {
        const auto cands = differential_candidates(bound);
        std::map<char, int> per_family;
        bool r_one = true, offsets = true;
        bool has_131 = false, has_231 = false, zero_h_source = false;
        for (const auto& c : cands) {
            ++per_family[c.family];
            if (c.r != 1) r_one = false;
            if (c.kind == DiffKind::I && c.jprime != c.j + 1) offsets = false;
            if (c.kind == DiffKind::II && c.jprime != c.j) offsets = false;
            if (c.kind == DiffKind::None) offsets = false;
            if (c.source == ConfigurationType{1, 3, 1} && c.target == ConfigurationType{2, 2, 1} && c.kind == DiffKind::I)
                has_131 = true;
            if (c.source == ConfigurationType{2, 3, 1} && c.target == ConfigurationType{2, 1, 2} && c.kind == DiffKind::II)
                has_231 = true;
            if (c.source.k1 == 0 && c.source.k2 == 0) zero_h_source = true;
        }
        for (char f = 'a'; f <= 'e'; ++f)
            r.add(std::string("family.") + f + ".empty", per_family[f] == 0, "0", std::to_string(per_family[f]),
                  "reference");
        r.add("family.f.nonempty", per_family['f'] > 0, "> 0", std::to_string(per_family['f']), "reference");
        r.add("family.g.nonempty", per_family['g'] > 0, "> 0", std::to_string(per_family['g']), "reference");
        r.add("only_r1", r_one, "r = 1", r_one ? "r = 1" : "r > 1 found", "reference");
        r.add("j_offsets", offsets, "I: j'=j+1, II: j'=j", offsets ? "as expected" : "violated", "reference");
        r.add("source.(1,3,1)->(2,2,1).I", has_131, "present", has_131 ? "present" : "absent", "reference");
        r.add("source.(2,3,1)->(2,1,2).II", has_231, "present", has_231 ? "present" : "absent", "reference");
        r.add("source.(0,0,h).none", !zero_h_source, "none", zero_h_source ? "found" : "none", "reference");
    });
}

// ---- point counts

struct CountCase {
    int g, l, q;
    GroupVariant variant;
};

inline std::vector<CountCase> count_grid()
{
    return {{2, 1, 3, GroupVariant::Full}, {2, 1, 5, GroupVariant::Full},    {2, 2, 3, GroupVariant::Full},
            {2, 3, 3, GroupVariant::G0Prime}, {3, 1, 3, GroupVariant::Full}, {3, 2, 3, GroupVariant::Full},
            {4, 1, 3, GroupVariant::Full},    {3, 4, 3, GroupVariant::G0Prime}, {4, 5, 3, GroupVariant::G0Prime}};
}

inline std::vector<CountCase> count_grid_l0() { return {{2, 0, 3, GroupVariant::Full}, {2, 0, 5, GroupVariant::Full}, {3, 0, 3, GroupVariant::Full}}; }

inline std::string case_id(const CountCase& c)
{
    return "(" + std::to_string(c.g) + "," + std::to_string(c.l) + "," + std::to_string(c.q) + ")" +
           (c.variant == GroupVariant::Full ? "" : std::string(".") + to_string(c.variant));
}

inline std::string field_note(const CountRecord& rec)
{
    return rec.field_assumption_met ? std::string()
                                    : "q = " + std::to_string(rec.q) + " is not 1 mod n = " +
                                          std::to_string(rec.g + 1 - rec.l) + "; counted anyway";
}

inline SuiteResult suite_counts(const VerifyOptions& opt = {})
{
    return timed_suite("counts", [&](SuiteResult& r) {
        for (const auto& c : count_grid()) {
            const auto rec = enumerate_count(c.g, c.l, c.q, c.variant, opt.jobs, opt.budget);
            const Int want = closed_form_count(c.g, c.l, CountPart::Total, opt.parity)(Int(c.q));
            r.add("count." + case_id(c), rec.stack == Rational(want), want.str(), to_string(rec.stack), "reference",
                  field_note(rec));
        }
        for (const auto& c : count_grid_l0()) {
            const auto rec = enumerate_count(c.g, c.l, c.q, c.variant, opt.jobs, opt.budget);
            const Int want = l0_count(c.g)(Int(c.q));
            r.add("count." + case_id(c), rec.stack == Rational(want), want.str(), to_string(rec.stack), "identity",
                  field_note(rec));
        }
        for (const auto& c : std::vector<CountCase>{{2, 0, 3, GroupVariant::Full}, {2, 1, 3, GroupVariant::Full}}) {
            const auto a = naive_count(c.g, c.l, c.q);
            const auto b = enumerate_count(c.g, c.l, c.q, c.variant, opt.jobs, opt.budget);
            r.add("naive." + case_id(c), a.raw == b.raw, a.raw.str(), b.raw.str(), "oracle", "triple loop vs coset buckets");
        }
    });
}

// ---- Euler characteristic identity

inline SuiteResult suite_euler(const VerifyOptions& opt = {})
{
    return timed_suite("euler", [&](SuiteResult& r) {
        const auto full = stable_series(euler_truncation(euler_window(4)), -1, opt.jobs);
        for (int l = 1; l <= 4; ++l)
            for (int g : {100, 101}) {
                const auto rep = euler_identity_check(l, full, g, opt.parity);
                r.add("euler.l" + std::to_string(l) + ".g" + std::to_string(g), rep.passed,
                      QPolynomial(rep.rhs).str("L"), QPolynomial(rep.lhs).str("L"), "reference",
                      "window L^0..L^" + std::to_string(rep.window));
            }
        const auto rep = euler_identity_check(4, full, 100, opt.parity);
        const std::string target = QPolynomial(std::vector<Int>{1, 1, 0, 0, 0, 0, 1}).str("L");
        const std::string lhs = QPolynomial(rep.lhs).str("L"), rhs = QPolynomial(rep.rhs).str("L");
        r.add("euler.l4.value", lhs == target && rhs == target, target, lhs + " | " + rhs, "reference");
    });
}

// ---- strata and the Psi bijection

inline SuiteResult suite_strata(const VerifyOptions& opt = {})
{
    return timed_suite("strata", [&](SuiteResult& r) {
        for (const auto& c : count_grid()) {
            const auto s = stratified_count(c.g, c.l, c.q, c.variant, opt.jobs, opt.budget);
            Int sum = 0;
            for (const auto& [k, v] : s.strata) sum += v;
            r.add("partition." + case_id(c), sum == s.record.raw, s.record.raw.str(), sum.str(), "identity",
                  std::to_string(s.strata.size()) + " strata");
        }
        {
            const auto rt = psi_roundtrip(2, 1, 3);
            const auto rec = enumerate_count(2, 1, 3);
            r.add("psi.roundtrip.(2,1,3)", rt.failures == 0 && Int(rt.checked) == rec.raw,
                  rec.raw.str() + " recovered", std::to_string(rt.checked - rt.failures) + " recovered", "identity");
        }
        {
            std::mt19937_64 rng(opt.seed);
            bool ok = true;
            for (int i = 0; i < 20; ++i) {
                const auto s = random_member(2, 1, 3, rng);
                const auto e = random_group_element(2, 3, rng);
                const auto t = apply_group_element(s, e, 3);
                const auto expect_delta = [&] {
                    BinaryForm d = substitute(discriminant(s, 3), e, 3);
                    for (auto& x : d.c) x = x * e.scale % 3 * e.scale % 3;
                    return d;
                }();
                ok = ok && is_squarefree(discriminant(t, 3), 3) && discriminant(t, 3) == expect_delta;
            }
            r.add("group_action.(2,1,3)", ok, "20/20 images in D", ok ? "20/20 images in D" : "image left D",
                  "identity");
        }
    });
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"example19", "tables", "m0n",   "ranks",
                                                   "diffscan",  "counts", "euler", "strata"};
    return names;
}

inline SuiteResult run_suite(const std::string& name, const VerifyOptions& opt = {})
{
    if (name == "example19") return suite_example19(opt);
    if (name == "tables") return suite_tables(opt);
    if (name == "m0n") return suite_m0n(opt);
    if (name == "ranks") return suite_ranks(opt);
    if (name == "diffscan") return suite_diffscan(opt);
    if (name == "counts") return suite_counts(opt);
    if (name == "euler") return suite_euler(opt);
    if (name == "strata") return suite_strata(opt);
    throw UsageError("unknown suite '" + name + "'");
}

} // namespace hyperstab
