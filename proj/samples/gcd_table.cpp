// Print d_n = gcd(a_n, a_{n+1}) next to F_n and L_n, and the normalized sums.

#include "vieta/invariants.hpp"
#include "vieta/sequences.hpp"

#include <iostream>

int main(int argc, char** argv) {
    long n_max = argc > 1 ? std::stol(argv[1]) : 12;
    auto profile = vieta::gcd_profile(vieta::SequenceId::a_chain, n_max);
    std::cout << "n\td_n\tF_n\tL_n\t(a+b)/d^2\n";
    for (long n = 0; n <= n_max; ++n) {
        auto i = static_cast<std::size_t>(n);
        std::cout << n << '\t' << profile.d[i] << '\t' << vieta::fib(n) << '\t' << vieta::lucas(n) << '\t'
                  << profile.normalized_sums[i] << '\n';
    }
    for (const auto& c : profile.checks) std::cout << (c.pass ? "ok   " : "FAIL ") << c.name << '\n';
}
