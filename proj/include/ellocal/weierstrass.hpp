#ifndef ELLOCAL_WEIERSTRASS_HPP
#define ELLOCAL_WEIERSTRASS_HPP

#include <array>
#include <optional>
#include <vector>

#include "ellocal/element.hpp"
#include "ellocal/valuation.hpp"

namespace ellocal {

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
struct WeierstrassModel {
    LocalFieldElement a1, a2, a3, a4, a6;

    static WeierstrassModel from_a(const FieldRef& f,
                                   const std::array<LocalFieldElement, 5>& a) {
        return {a[0], a[1], a[2], a[3], a[4]};
        (void)f;
    }
    // y^2 = x^3 + A x + B
    static WeierstrassModel short_form(const FieldRef& f, const LocalFieldElement& A,
                                       const LocalFieldElement& B) {
        auto z = LocalFieldElement::zero(f);
        return {z, z, z, A, B};
    }

    const FieldRef& field() const { return a1.field(); }

    std::array<const LocalFieldElement*, 5> coeffs() const { return {&a1, &a2, &a3, &a4, &a6}; }
    static constexpr std::array<int, 5> weights() { return {1, 2, 3, 4, 6}; }

    bool is_integral() const {
        for (const auto* a : coeffs())
            if (a->valuation() < 0) return false;
        return true;
    }

    bool operator==(const WeierstrassModel& o) const {
        return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
    }
    bool operator!=(const WeierstrassModel& o) const { return !(*this == o); }
};

struct InvariantSet {
    LocalFieldElement b2, b4, b6, b8, c4, c6, delta, disc_cubic;
    bool singular; // delta == 0
    std::optional<LocalFieldElement> j; // c4^3 / delta, when nonsingular
};

inline InvariantSet invariants(const WeierstrassModel& m) {
    const FieldRef& f = m.field();
    auto C = [&](long long k) { return LocalFieldElement::from_integer(f, k); };
    const auto &a1 = m.a1, &a2 = m.a2, &a3 = m.a3, &a4 = m.a4, &a6 = m.a6;

    InvariantSet s{};
    s.b2 = a1 * a1 + C(4) * a2;
    s.b4 = C(2) * a4 + a1 * a3;
    s.b6 = a3 * a3 + C(4) * a6;
    s.b8 = a1 * a1 * a6 + C(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    s.c4 = s.b2 * s.b2 - C(24) * s.b4;
    s.c6 = -(s.b2 * s.b2 * s.b2) + C(36) * s.b2 * s.b4 - C(216) * s.b6;
    s.delta = -(s.b2 * s.b2 * s.b8) - C(8) * s.b4 * s.b4 * s.b4 - C(27) * s.b6 * s.b6 +
              C(9) * s.b2 * s.b4 * s.b6;
    s.disc_cubic = -C(4) * a2 * a2 * a2 * a6 + a2 * a2 * a4 * a4 - C(4) * a4 * a4 * a4 -
                   C(27) * a6 * a6 + C(18) * a2 * a4 * a6;
    s.singular = s.delta.is_zero();
    if (!s.singular) s.j = s.c4 * s.c4 * s.c4 / s.delta;
    return s;
}

inline LocalFieldElement discriminant(const WeierstrassModel& m) { return invariants(m).delta; }

// Admissible change of coordinates x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
struct CoordinateChange {
    LocalFieldElement u, r, s, t;

    static CoordinateChange identity(const FieldRef& f) {
        auto z = LocalFieldElement::zero(f);
        return {LocalFieldElement::one(f), z, z, z};
    }
    static CoordinateChange scaling(const LocalFieldElement& u) {
        auto z = LocalFieldElement::zero(u.field());
        return {u, z, z, z};
    }
    static CoordinateChange translation(const LocalFieldElement& r, const LocalFieldElement& t) {
        auto f = r.field();
        return {LocalFieldElement::one(f), r, LocalFieldElement::zero(f), t};
    }
    // y -> y + s x
    static CoordinateChange shear(const LocalFieldElement& s) {
        auto f = s.field();
        auto z = LocalFieldElement::zero(f);
        return {LocalFieldElement::one(f), z, s, z};
    }

    bool is_identity() const {
        return u == LocalFieldElement::one(u.field()) && r.is_zero() && s.is_zero() && t.is_zero();
    }

    // Single change equivalent to applying *this first, then `next`.
    CoordinateChange then(const CoordinateChange& next) const {
        const auto &u1 = u, &r1 = r, &s1 = s, &t1 = t;
        const auto &u2 = next.u, &r2 = next.r, &s2 = next.s, &t2 = next.t;
        return {u1 * u2,
                r1 + u1 * u1 * r2,
                s1 + u1 * s2,
                t1 + u1 * u1 * s1 * r2 + u1 * u1 * u1 * t2};
    }

    CoordinateChange inverse() const {
        if (u.is_zero()) throw DivisionByZero("coordinate change: u = 0");
        auto ui = u.inverse();
        auto ui2 = ui * ui;
        return {ui, -(r * ui2), -(s * ui), (s * r - t) * ui2 * ui};
    }
};

inline WeierstrassModel transform(const WeierstrassModel& m, const CoordinateChange& c) {
    if (c.u.is_zero()) throw DivisionByZero("transform: u = 0");
    const FieldRef& f = m.field();
    auto C = [&](long long k) { return LocalFieldElement::from_integer(f, k); };
    const auto &a1 = m.a1, &a2 = m.a2, &a3 = m.a3, &a4 = m.a4, &a6 = m.a6;
    const auto &u = c.u, &r = c.r, &s = c.s, &t = c.t;

    auto ui = u.inverse();
    auto ui2 = ui * ui, ui3 = ui * ui * ui;
    auto ui4 = ui2 * ui2, ui6 = ui3 * ui3;

    WeierstrassModel out;
    out.a1 = (a1 + C(2) * s) * ui;
    out.a2 = (a2 - s * a1 + C(3) * r - s * s) * ui2;
    out.a3 = (a3 + r * a1 + C(2) * t) * ui3;
    out.a4 = (a4 - s * a3 + C(2) * r * a2 - (t + r * s) * a1 + C(3) * r * r - C(2) * s * t) * ui4;
    out.a6 = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) * ui6;
    return out;
}

struct WeightedValuation {
    Fraction min;            // min_i v(a_i)/i, +infinity if all a_i = 0
    std::vector<int> argmin; // the i attaining it, ascending
};

inline WeightedValuation min_weighted_valuation(const WeierstrassModel& m) {
    WeightedValuation out{Fraction::infinity(), {}};
    auto cs = m.coeffs();
    auto ws = WeierstrassModel::weights();
    for (size_t k = 0; k < cs.size(); ++k) {
        Valuation v = cs[k]->valuation();
        if (v.is_infinite()) continue;
        Fraction fr(v.value(), ws[k]);
        if (fr < out.min) {
            out.min = fr;
            out.argmin = {ws[k]};
        } else if (fr == out.min) {
            out.argmin.push_back(ws[k]);
        }
    }
    return out;
}

} // namespace ellocal

#endif
