// Example: local-system homology of the braid groups B_3..B_5 (type A_n)
// and the integral homology of the symmetric group S_3 through the flag
// resolution.

#include <iostream>

#include <salvetti/salvetti.hpp>

using namespace salvetti;

int main() {
    for (int n = 2; n <= 4; ++n) {
        TableCache cache(parse_coxeter_spec("A" + std::to_string(n)));
        std::cout << "type A" << n << " Artin group, coefficients Q[q^±1]:\n";
        for (const auto& h : homology_artin_q(cache))
            std::cout << "  H_" << h.degree << " = " << module_str(h) << "\n";
    }

    TableCache cache(parse_coxeter_spec("A2"));
    std::cout << "integral homology of the Coxeter group of type A2:\n";
    for (const auto& h : homology_coxeter(cache, 5))
        std::cout << "  H_" << h.degree << " = " << module_str(h) << "\n";
    return 0;
}
