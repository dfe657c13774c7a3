#ifndef ELLOCAL_TESTS_GENERATORS_HPP
#define ELLOCAL_TESTS_GENERATORS_HPP

#include <random>
#include <vector>

#include "ellocal/element.hpp"
#include "ellocal/field.hpp"

namespace ellocal::testing {

using Rng = std::mt19937_64;

inline long long rand_int(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

// Random element as a short sum of c * pi^k terms; occasionally zero.
// Coefficients may pick up small denominators so that all three payload
// shapes get exercised, including negative valuations.
inline LocalFieldElement random_element(const FieldRef& f, Rng& rng, int min_v = -3,
                                        int max_v = 5) {
    LocalFieldElement pi = LocalFieldElement::uniformizer(f);
    LocalFieldElement acc = LocalFieldElement::zero(f);
    int terms = static_cast<int>(rand_int(rng, 0, 3));
    for (int i = 0; i < terms; ++i) {
        long long c = rand_int(rng, -20, 20);
        if (c == 0) continue;
        long long d = rand_int(rng, 1, 4);
        long long k = rand_int(rng, min_v, max_v);
        LocalFieldElement den = LocalFieldElement::from_integer(f, d);
        if (den.is_zero()) den = LocalFieldElement::one(f);
        LocalFieldElement term = LocalFieldElement::from_integer(f, c) / den;
        acc = acc + term * pi.pow(k);
    }
    return acc;
}

// Random element with valuation >= 0.
inline LocalFieldElement random_integral(const FieldRef& f, Rng& rng) {
    for (;;) {
        LocalFieldElement x = random_element(f, rng, 0, 5);
        if (x.valuation() >= 0) return x;
    }
}

// Random unit (valuation exactly 0).
inline LocalFieldElement random_unit(const FieldRef& f, Rng& rng) {
    for (;;) {
        LocalFieldElement x = random_integral(f, rng);
        if (x.valuation() == 0) return x;
    }
}

// Random nonzero element with valuation exactly k.
inline LocalFieldElement random_with_valuation(const FieldRef& f, Rng& rng, long long k) {
    return random_unit(f, rng) * LocalFieldElement::uniformizer(f).pow(k);
}

inline std::vector<FieldRef> standard_backends() {
    return {
        parse_field("qp:2"),
        parse_field("qp:5"),
        parse_field("fqt:3"),
        parse_field("eis:2:x^2-2"),
        parse_field("eis:3:x^3-3"),
    };
}

} // namespace ellocal::testing

#endif
