// One line per acceptance criterion, then the failing checks in detail.
// Exit status is 0 only when every criterion passes.

#include <hyperstab/hyperstab.hpp>

#include <cstdio>
#include <cstdlib>
#include <exception>

using namespace hyperstab;

namespace {

struct Criterion {
    int id;
    const char* suite;
    const char* title;
};

constexpr Criterion kCriteria[] = {
    {1, "example19", "stable table degrees 0..18 (n = 0), under 60 s"},
    {2, "tables", "E1 columns L = 3..6 and the five-point example"},
    {3, "m0n", "M_{0,n} closed forms vs brute force, identity layer, Schur positivity"},
    {4, "ranks", "bundle rank at the bound, witness below it"},
    {5, "diffscan", "differential scan up to 8 points"},
    {6, "counts", "stack point counts vs closed forms"},
    {7, "euler", "Euler characteristic identity, l = 1..4"},
    {8, "strata", "stratified counts and the Psi round trip"},
};

constexpr double kExampleSeconds = 60.0;

} // namespace

int main(int argc, char** argv)
{
    VerifyOptions opt;
    if (const char* j = std::getenv("HYPERSTAB_JOBS")) opt.jobs = std::max(1, std::atoi(j));
    if (argc > 1) opt.jobs = std::max(1, std::atoi(argv[1]));

    std::vector<std::pair<const Criterion*, SuiteResult>> results;
    int failed = 0;
    for (const auto& c : kCriteria) {
        SuiteResult r;
        std::string extra;
        bool ok = false;
        try {
            r = run_suite(c.suite, opt);
            ok = r.passed();
            if (c.id == 1 && r.seconds >= kExampleSeconds) {
                ok = false;
                extra = " (too slow)";
            }
        } catch (const std::exception& e) {
            r.name = c.suite;
            r.add(std::string(c.suite) + ".error", false, "no exception", e.what(), "identity");
        }
        failed += !ok;
        std::printf("[%s] criterion %d: %s -- %d pass, %d fail, %d skipped, %.1f s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.title, r.count(CheckStatus::Pass), r.count(CheckStatus::Fail), r.count(CheckStatus::Skipped),
                    r.seconds, extra.c_str());
        std::fflush(stdout);
        results.emplace_back(&c, std::move(r));
    }

    for (const auto& [c, r] : results) {
        for (const auto& ch : r.checks) {
            if (ch.status != CheckStatus::Fail) continue;
            std::printf("  criterion %d %s: expected %s, got %s [%s]%s%s\n", c->id, ch.id.c_str(), ch.expected.c_str(),
                        ch.actual.c_str(), ch.basis.c_str(), ch.note.empty() ? "" : " ", ch.note.c_str());
        }
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(std::size(kCriteria)) - failed, std::size(kCriteria));
    return failed ? 1 : 0;
}
