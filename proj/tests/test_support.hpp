#pragma once

#include <random>
#include <string>
#include <vector>

#include "contact_sextic/multipoly.hpp"
#include "contact_sextic/rational.hpp"

namespace contact_sextic::testing {

inline Rational random_rational(std::mt19937& rng, int span = 9, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, span);
    for (;;) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        if (!nonzero || q != 0) return q;
    }
}

inline MultiPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, unsigned max_degree,
                             unsigned terms) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    MultiPoly p;
    for (unsigned k = 0; k < terms; ++k) {
        MultiPoly mono(random_rational(rng, 5, true));
        for (const auto& v : vars) mono *= MultiPoly::variable(v).pow(deg(rng));
        p += mono;
    }
    return p;
}

inline MultiPoly P(const std::string& text) { return MultiPoly::parse(text); }

}  // namespace contact_sextic::testing
