// Small tour of the library: a stable table, one M_{0,n} character, one rank
// check and one point count.

#include <hyperstab/hyperstab.hpp>

#include <iostream>

int main()
{
    using namespace hyperstab;

    const auto table = cohomology_table(0, 12);
    std::cout << "stable cohomology, n = 0, degrees 0..12\n" << to_markdown(table, 0) << '\n';

    std::cout << "M_{0,5}\n" << to_markdown(equivariant_poincare_m0n(5)) << '\n';

    const auto rep = verify_bundle_rank({1, 1, 1}, 9, 1, 10, 2024);
    std::cout << "rank check (1,1,1), d=9, n=1: kernel " << rep.expected_kernel << " of " << rep.v << ", "
              << (rep.passed() ? "all trials agree" : "rank drop seen") << "\n\n";

    const auto rec = enumerate_count(3, 1, 3);
    std::cout << "#H(F_3) for g=3, l=1: " << to_string(rec.stack) << " (closed form "
              << closed_form_count(3, 1)(Int(3)) << ")\n";
}
