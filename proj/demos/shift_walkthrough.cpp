// Shows the shift derivation relabeling a barred monomial inside the doubled
// algebra, one application at a time.

#include <iostream>

#include <sympl/derivations.hpp>

using namespace sympl;

namespace {

void show(const SymplecticAlgebra& g, const Combo& u) {
    bool first = true;
    for (const auto& [w, c] : u) {
        std::cout << (first ? "  " : " + ") << to_string(c) << " * ";
        first = false;
        for (const auto& gen : w) std::cout << render_generator(gen, g.rank()) << " ";
    }
    if (first) std::cout << "  0";
    std::cout << "\n";
}

}  // namespace

int main() {
    // rank-1 colors, doubled to rank 2 so the shift element exists
    SymplecticAlgebra big(2);
    ColoredPartition pi({{Generator{-1, parse_color("1~ 1~", 1)}, 1},
                         {Generator{-2, parse_color("1~ 1~", 1)}, 1}});
    std::cout << "start from " << render_partition(pi, 1) << "\n";

    Combo u = u_from_word(embedded_word(pi, 1, big));
    ShiftPlan plan = shift_plan(pi, 1);
    std::cout << "bar multiplicities:";
    for (int b : plan.bar_mult) std::cout << " " << b;
    std::cout << " (total " << plan.total << ")\n\nT_1 orbit:\n";
    show(big, u);
    for (int step = 1; step <= plan.total + 1; ++step) {
        u = apply_shift(big, 1, u);
        show(big, u);
    }

    ShiftCheck check = verify_color_shift(pi, 1, big);
    std::cout << "\nafter " << plan.total << " steps: " << check.detail
              << (check.ok ? "  (scalar " + to_string(check.scalar) + ")" : "  MISMATCH") << "\n";
    return 0;
}
