// Every solution of P^2 - (x^2 - 1) Q^2 = 1 over F_p with deg P <= d, by brute force.

#include <cstdlib>
#include <iostream>

#include "polycomp/polycomp.hpp"

int main(int argc, char** argv) {
    using namespace polycomp;
    const std::uint64_t p = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 5;
    const std::size_t d = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 2;
    try {
        for (const auto& s : pell_enumerate_bruteforce(p, d)) {
            std::cout << "P = " << s.P << "   Q = " << s.Q;
            if (s.classification)
                std::cout << "   (" << sign_char(s.classification->sign_p) << "T_" << s.classification->n << ")";
            std::cout << '\n';
        }
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
}
