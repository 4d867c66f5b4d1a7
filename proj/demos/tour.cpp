// A short tour of the library: carry-free arithmetic, saturated game
// tables, the closed form for Welter's game, and the coprime-count
// subdiagram search.

#include "grundy/young.hpp"

#include <iostream>

using namespace grundy;

int main() {
    // Carry-free sums: the base-3 value of the heaps (3, 7, 4).
    std::cout << "3 (+)_3 7 (+)_3 4 = " << nim_sum(3, {3, 7, 4}) << "\n\n";

    // sg table of the canonical 3-saturation of two-heap Nim.
    EvalTable table(saturate(nim_game(2), 3), 3);
    std::cout << "saturated Nim (p = 3):\n";
    for (Nat a = 0; a <= 3; ++a) {
        for (Nat b = 0; b <= 3; ++b) std::cout << table.sg({a, b}) << " ";
        std::cout << "\n";
    }
    std::cout << "\n";

    // Welter's game: brute force agrees with the closed form.
    Position a{7, 5, 3};
    EvalTable welter(welter_game(3), 7);
    std::cout << "Welter (7,5,3): sg = " << welter.sg(a) << ", psi_2 = " << psi(2, a) << "\n\n";

    // Every diagram includes a subdiagram of psi_p cells whose standard
    // tableau count is prime to p.
    YoungDiagram y({4, 3, 2});
    YoungDiagram z = find_pprime_subdiagram(2, y);
    std::cout << "f(4,3,2) = " << to_decimal(tableau_count(y)) << " (even), includes ";
    for (Nat part : z.parts()) std::cout << part << " ";
    std::cout << "with f = " << to_decimal(tableau_count(z)) << " (odd)\n";
    return 0;
}
