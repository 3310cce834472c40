// Integer identities f(g(x)) = f(x) h(x)^2 for f = x^2 + c, and lambda along one orbit of each.

#include <iostream>

#include "polycomp/polycomp.hpp"

int main() {
    using namespace polycomp;
    for (int c : {1, -1, 2, -2, 4, -4}) {
        const auto id = generate_lyg(Rational(1), Rational(0), Rational(c));
        std::cout << "f = " << id.f() << "   g = " << id.g() << "   h = " << id.h() << '\n';
        try {
            const auto orbit = lambda_orbit(id, 3, 2);
            for (const auto& e : orbit.entries) std::cout << "    lambda(f(" << e.k << ")) = " << sign_text(e.lambda) << '\n';
        } catch (const OrbitHitsRoot& e) {
            std::cout << "    orbit of 3 reaches a root of f at step " << e.step() << '\n';
        }
    }
}
