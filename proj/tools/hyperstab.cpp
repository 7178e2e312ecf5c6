// hyperstab: command-line front end.
// Exit codes: 0 success, 1 failed check, 2 usage error.

#include <hyperstab/hyperstab.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace hyperstab;

namespace {

struct Common {
    std::string out = "out";
    std::uint64_t seed = VerifyOptions{}.seed;
    int jobs = 1;
    std::string budget = "small";
    std::string parity = "printed";
};

DeltaParity parse_parity(const std::string& s)
{
    if (s == "printed") return DeltaParity::Printed;
    if (s == "swapped") return DeltaParity::Swapped;
    throw UsageError("--delta-parity must be printed or swapped");
}

GroupVariant parse_variant(const std::string& s)
{
    if (s == "full") return GroupVariant::Full;
    if (s == "g0") return GroupVariant::G0;
    if (s == "g0prime") return GroupVariant::G0Prime;
    throw UsageError("--variant must be full, g0 or g0prime");
}

std::pair<int, int> parse_range(const std::string& s)
{
    try {
        const auto dots = s.find("..");
        if (dots == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("expected an integer or a range a..b, got '" + s + "'");
    }
}

ConfigurationType parse_type(const std::string& s)
{
    ConfigurationType t;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> t.k1 >> c1 >> t.k2 >> c2 >> t.h) || c1 != ',' || c2 != ',' || !t.valid())
        throw UsageError("--type must be k1,k2,h with nonnegative entries, got '" + s + "'");
    return t;
}

void report_written(const std::vector<std::filesystem::path>& files)
{
    for (const auto& f : files) std::cerr << "wrote " << f.string() << '\n';
}

int print_suite(const SuiteResult& r)
{
    for (const auto& c : r.checks) {
        std::cout << '[' << to_string(c.status) << "] " << r.name << '.' << c.id << "  expected: " << c.expected
                  << "  actual: " << c.actual << "  (" << c.basis << ')';
        if (!c.note.empty()) std::cout << "  " << c.note;
        std::cout << '\n';
    }
    std::cout << r.name << ": " << r.count(CheckStatus::Pass) << " passed, " << r.count(CheckStatus::Fail)
              << " failed, " << r.count(CheckStatus::Skipped) << " skipped\n";
    return r.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Stable cohomology of hyperelliptic curves on Hirzebruch surfaces"};
    app.require_subcommand(1);
    Common common;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", common.out, "Output directory")->capture_default_str();
        sub->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    };

    // stable
    auto* stable = app.add_subcommand("stable", "Stable cohomology table");
    int max_deg = 0;
    std::string regime = "n0", format = "md";
    stable->add_option("--max-deg", max_deg, "Largest cohomological degree")->required()->check(CLI::NonNegativeNumber);
    stable->add_option("--regime", regime, "n0 or npos")->check(CLI::IsMember({"n0", "npos"}))->capture_default_str();
    stable->add_option("--format", format, "json, md or csv")->check(CLI::IsMember({"json", "md", "csv"}))->capture_default_str();
    add_common(stable);

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_choices));
    verify->add_option("--seed", common.seed, "Seed for randomized checks")->capture_default_str();
    verify->add_option("--budget", common.budget, "small, medium, full or a work count")->capture_default_str();
    verify->add_option("--delta-parity", common.parity, "printed or swapped")->capture_default_str();
    add_common(verify);

    // e1
    auto* e1 = app.add_subcommand("e1", "E^1 columns of the discriminant spectral sequence");
    std::string Lrange = "3..6", e1_format = "both";
    int d = 30, n = 0;
    e1->add_option("--L", Lrange, "Column or range a..b (each >= 3)")->capture_default_str();
    e1->add_option("--d", d, "Degree d")->capture_default_str();
    e1->add_option("--n", n, "Surface index n")->capture_default_str();
    e1->add_option("--format", e1_format, "md, csv or both")->check(CLI::IsMember({"md", "csv", "both"}))->capture_default_str();
    add_common(e1);

    // m0n
    auto* m0n = app.add_subcommand("m0n", "Equivariant cohomology of M_{0,n}");
    int m0n_n = 4;
    m0n->add_option("--n", m0n_n, "Number of marked points (>= 3)")->required();
    add_common(m0n);

    // count
    auto* count = app.add_subcommand("count", "Point count over F_q");
    int g = 2, l = 1, q = 3;
    std::string method = "brute", variant = "full";
    count->add_option("--g", g, "Genus")->required();
    count->add_option("--l", l, "Degree of alpha, n = g+1-l")->required();
    count->add_option("--q", q, "Odd prime")->required();
    count->add_option("--method", method, "brute, formula, stratified or naive")
        ->check(CLI::IsMember({"brute", "formula", "stratified", "naive"}))
        ->capture_default_str();
    count->add_option("--variant", variant, "full, g0 or g0prime")->capture_default_str();
    count->add_option("--budget", common.budget, "small, medium, full or a work count")->capture_default_str();
    count->add_option("--delta-parity", common.parity, "printed or swapped")->capture_default_str();
    add_common(count);

    // rankcheck
    auto* rank = app.add_subcommand("rankcheck", "Kernel dimension of the singularity conditions");
    std::string type_str = "1,1,1", field = "q";
    int rd = 0, rn = 0, trials = 100;
    rank->add_option("--type", type_str, "k1,k2,h")->required();
    rank->add_option("--d", rd, "Degree d")->required();
    rank->add_option("--n", rn, "Surface index n")->required();
    rank->add_option("--trials", trials, "Random configurations")->capture_default_str();
    rank->add_option("--seed", common.seed, "Seed")->capture_default_str();
    rank->add_option("--field", field, "q (rationals) or p (prime field)")->check(CLI::IsMember({"q", "p"}))->capture_default_str();
    add_common(rank);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        OutputSet out(common.out);
        out.set_input("jobs", common.jobs);

        if (*stable) {
            const int sn = regime == "n0" ? 0 : 1;
            const auto tab = cohomology_table(sn, max_deg, common.jobs);
            std::string body;
            if (format == "json") body = to_json(tab, sn).dump(2) + "\n";
            else if (format == "md") body = to_markdown(tab, sn);
            else body = to_csv(tab);
            std::cout << body;
            out.set_input("max_deg", max_deg);
            out.set_input("regime", regime);
            out.add("stable_" + regime + "_" + std::to_string(max_deg) + "." + format, body);
            report_written(out.write("stable"));
            return 0;
        }

        if (*verify) {
            VerifyOptions opt;
            opt.seed = common.seed;
            opt.jobs = common.jobs;
            opt.budget = parse_budget(common.budget);
            opt.parity = parse_parity(common.parity);
            const std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            int rc = 0;
            json all = json::array();
            for (const auto& name : names) {
                const auto r = run_suite(name, opt);
                rc = std::max(rc, print_suite(r));
                all.push_back(to_json(r));
            }
            out.set_input("suite", suite);
            out.set_input("seed", common.seed);
            out.set_input("budget", common.budget);
            out.set_input("delta_parity", common.parity);
            out.add("verify_" + suite + ".json", all.dump(2) + "\n");
            report_written(out.write("verify"));
            return rc;
        }

        if (*e1) {
            const auto [lo, hi] = parse_range(Lrange);
            if (lo < 3 || hi < lo) throw UsageError("--L needs 3 <= a <= b");
            if (n < 0 || d < 2 * n) throw UsageError("--d and --n need d >= 2n >= 0");
            const int v = SectionSpace(d, n).dimension();
            std::vector<E1Column> cols;
            for (int L = lo; L <= hi; ++L) cols.push_back(e1_column(L, v));
            out.set_input("L", Lrange);
            out.set_input("d", d);
            out.set_input("n", n);
            out.set_input("v", v);
            if (e1_format != "csv") {
                const auto md = to_markdown(cols);
                std::cout << md;
                out.add("e1.md", md);
            }
            if (e1_format != "md") out.add("e1.csv", to_csv(cols));
            report_written(out.write("e1"));
            return 0;
        }

        if (*m0n) {
            if (m0n_n < 3) throw UsageError("--n must be at least 3");
            const auto& ep = equivariant_poincare_m0n(m0n_n);
            const auto md = to_markdown(ep);
            std::cout << md;
            out.set_input("n", m0n_n);
            out.add("m0n_" + std::to_string(m0n_n) + ".json", to_json(ep).dump(1) + "\n");
            out.add("m0n_" + std::to_string(m0n_n) + ".md", md);
            report_written(out.write("m0n"));
            return 0;
        }

        if (*count) {
            const auto var = parse_variant(variant);
            const auto parity = parse_parity(common.parity);
            const long long budget = parse_budget(common.budget);
            check_count_domain(g, l, q, var);
            std::optional<QPolynomial> formula;
            try {
                formula = l == 0 ? l0_count(g) : closed_form_count(g, l, CountPart::Total, parity);
            } catch (const DomainError&) {
            }
            CountRow row;
            row.method = method;
            row.formula = formula ? formula->str() : "";
            std::string strata_csv;
            if (method == "formula") {
                if (!formula) throw DomainError("no printed formula for g=" + std::to_string(g) + ", l=" + std::to_string(l));
                const int nn = g + 1 - l;
                row.rec = CountRecord{g, l, q, var, 0, group_order(nn, q, var), Rational((*formula)(Int(q))),
                                      nn < 3 || q % nn == 1};
                row.rec.raw = numerator(Rational(row.rec.stack * row.rec.group));
            } else if (method == "naive") {
                row.rec = naive_count(g, l, q, var);
            } else if (method == "stratified") {
                const auto s = stratified_count(g, l, q, var, common.jobs, budget);
                row.rec = s.record;
                strata_csv = "m,lambda,raw\n";
                for (const auto& [k, v] : s.strata) strata_csv += std::to_string(k.m) + ",\"" + to_string(k.lambda) + "\"," + v.str() + "\n";
            } else {
                row.rec = enumerate_count(g, l, q, var, common.jobs, budget);
            }
            row.match = !formula ? "n/a" : (row.rec.stack == Rational((*formula)(Int(q))) ? "yes" : "no");
            const std::string csv = count_csv_header() + to_csv_row(row);
            std::cout << csv;
            if (!row.rec.field_assumption_met) std::cerr << "note: " << field_note(row.rec) << '\n';
            const std::string stem = "count_g" + std::to_string(g) + "_l" + std::to_string(l) + "_q" + std::to_string(q);
            out.set_input("g", g);
            out.set_input("l", l);
            out.set_input("q", q);
            out.set_input("method", method);
            out.set_input("variant", variant);
            out.set_input("delta_parity", common.parity);
            out.add(stem + ".csv", csv);
            if (!strata_csv.empty()) out.add(stem + "_strata.csv", strata_csv);
            report_written(out.write("count"));
            return row.match == "no" ? 1 : 0;
        }

        if (*rank) {
            const auto t = parse_type(type_str);
            const auto rep = verify_bundle_rank(t, rd, rn, trials, common.seed,
                                                field == "q" ? FieldKind::Rational : FieldKind::Prime);
            const auto j = to_json(rep).dump(2) + "\n";
            std::cout << j;
            out.set_input("type", type_str);
            out.set_input("d", rd);
            out.set_input("n", rn);
            out.set_input("trials", trials);
            out.set_input("seed", common.seed);
            out.set_input("field", field);
            out.add("rank_" + std::to_string(t.k1) + "_" + std::to_string(t.k2) + "_" + std::to_string(t.h) + "_d" +
                        std::to_string(rd) + "_n" + std::to_string(rn) + ".json",
                    j);
            report_written(out.write("rankcheck"));
            return rep.passed() ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
