// Walk a large solution of (a+1)/b + (b+1)/a = 3 down to (2,2) and back up.

#include "vieta/io.hpp"
#include "vieta/sequences.hpp"
#include "vieta/vieta_core.hpp"

#include <iostream>

int main() {
    const vieta::EquationSpec spec(1, 3);
    vieta::PairSolution start(vieta::a_chain(12), vieta::a_chain(11));
    std::cout << "start " << start.str() << "  k = " << vieta::eval_k(start, spec.r) << '\n';

    auto trace = vieta::descend(start, spec);
    vieta::write_text(std::cout, trace);
    std::cout << trace.jump_count() << " jumps\n";

    for (const auto& p : vieta::ascend(trace.terminal, 4, spec)) std::cout << "up " << p.str() << '\n';
}
