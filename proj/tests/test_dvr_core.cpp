#include "doctest.h"

#include <random>

#include "ellocal/element.hpp"
#include "ellocal/field.hpp"
#include "ellocal/residue.hpp"

#include "support/generators.hpp"

using namespace ellocal;
using ellocal::testing::Rng;

namespace {
LocalFieldElement el(const FieldRef& f, const char* s) { return LocalFieldElement::parse(f, s); }
} // namespace

TEST_CASE("field descriptor parsing and validation") {
    CHECK(parse_field("qp:2")->kind() == FieldKind::RationalAtP);
    CHECK(parse_field("fqt:3")->residue_char() == 3);
    auto eis = parse_field("eis:2:x^4-2");
    CHECK(eis->ramification_degree() == 4);
    CHECK(eis->str() == "eis:2:x^4-2");
    CHECK(parse_field("eis:2:x^4+4x^3+6x^2+4x+2")->str() == "eis:2:x^4+4x^3+6x^2+4x+2");

    CHECK_THROWS_AS(parse_field("qp:4"), UnsupportedField);       // not prime
    CHECK_THROWS_AS(parse_field("fqt:9"), UnsupportedField);      // prime fields only in v1
    CHECK_THROWS_AS(parse_field("eis:2:x^4-3"), UnsupportedField); // not Eisenstein at 2
    CHECK_THROWS_AS(parse_field("eis:2:x^4-4"), UnsupportedField); // constant divisible by 4
    CHECK_THROWS_AS(parse_field("eis:2:2x^4-2"), UnsupportedField); // not monic
    CHECK_THROWS_AS(parse_field("nope:2"), ParseError);
}

TEST_CASE("uniformizers have valuation 1") {
    for (const char* d : {"qp:2", "qp:7", "fqt:3", "eis:2:x^4-2", "eis:5:x^2+10x+5"}) {
        auto f = parse_field(d);
        CHECK(LocalFieldElement::uniformizer(f).valuation() == 1);
    }
}

TEST_CASE("eisenstein ring arithmetic") {
    auto f = parse_field("eis:2:x^4-2");
    auto pi = LocalFieldElement::uniformizer(f);

    CHECK(pi * pi == el(f, "x^2"));
    CHECK((pi * pi).valuation() == 2);

    auto a = el(f, "2+x");
    CHECK((a.inverse() * a) == LocalFieldElement::one(f));
    CHECK(a.valuation() == 1); // min(4*1+0, 4*0+1) = 1

    // pi^4 = 2
    CHECK(pi.pow(4) == LocalFieldElement::from_integer(f, 2));
    // negative powers work through the fraction field
    CHECK(pi.pow(-4) * LocalFieldElement::from_integer(f, 2) == LocalFieldElement::one(f));
}

TEST_CASE("valuation examples") {
    auto q2 = parse_field("qp:2");
    CHECK(LocalFieldElement::from_integer(q2, 512).valuation() == 9);
    CHECK(el(q2, "-512").valuation() == 9);
    CHECK(el(q2, "3/4").valuation() == -2);
    CHECK(LocalFieldElement::zero(q2).valuation().is_infinite());

    auto f2t = parse_field("fqt:2");
    CHECK(el(f2t, "t^3+t^5").valuation() == 3);
    CHECK(el(f2t, "(1+t)/(t)").valuation() == -1);

    auto big = parse_field("eis:2:x^125-2");
    CHECK(LocalFieldElement::from_integer(big, 2).valuation() == 125);
}

TEST_CASE("reduce and lift") {
    auto q2 = parse_field("qp:2");
    CHECK(LocalFieldElement::from_integer(q2, 7).reduce() == Residue(1, 2));

    auto eis = parse_field("eis:2:x^4-2");
    CHECK(el(eis, "2+x").reduce() == Residue(0, 2));

    auto f5t = parse_field("fqt:5");
    CHECK(el(f5t, "3+t").reduce() == Residue(3, 5));

    auto q5 = parse_field("qp:5");
    CHECK(LocalFieldElement::lift(q5, Residue(3, 5)) == LocalFieldElement::from_integer(q5, 3));
    CHECK(LocalFieldElement::lift(q5, Residue(0, 5)).is_zero());
    for (long long r = 0; r < 5; ++r)
        CHECK(LocalFieldElement::lift(q5, Residue(r, 5)).reduce() == Residue(r, 5));

    CHECK_THROWS_AS(el(q2, "1/2").reduce(), NegativeValuation);
    CHECK_THROWS_AS(el(f5t, "1/t").reduce(), NegativeValuation);
}

TEST_CASE("residue roots") {
    // x^2 + x over F_2 -> {0, 1}
    auto r = residue_roots(FpPoly(2, {0, 1, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].root == Residue(0, 2));
    CHECK(r[1].root == Residue(1, 2));

    // x^3 + 1 over F_5 -> {4} (the quadratic cofactor is irreducible)
    r = residue_roots(FpPoly(5, {1, 0, 0, 1}));
    REQUIRE(r.size() == 1);
    CHECK(r[0].root == Residue(4, 5));
    CHECK(r[0].multiplicity == 1);

    // x^2 + 1 over F_3 is irreducible
    CHECK(residue_roots(FpPoly(3, {1, 0, 1})).empty());

    // multiplicity: (x-1)^2 * x over F_7
    r = residue_roots(FpPoly(7, {0, 1, -2, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].root == Residue(0, 7));
    CHECK(r[0].multiplicity == 1);
    CHECK(r[1].root == Residue(1, 7));
    CHECK(r[1].multiplicity == 2);

    CHECK_THROWS(residue_roots(FpPoly::zero(5)));
    CHECK_THROWS(residue_roots(std::vector<Residue>{Residue(), Residue()}));
}

TEST_CASE("residue roots agree with exhaustive evaluation") {
    Rng rng(0xe11c01);
    for (long long p : {2, 3, 5, 7, 11, 13}) {
        for (int iter = 0; iter < 50; ++iter) {
            std::vector<long long> cs(1 + static_cast<size_t>(ellocal::testing::rand_int(rng, 1, 4)));
            for (auto& c : cs) c = ellocal::testing::rand_int(rng, 0, p - 1);
            FpPoly f(p, cs);
            if (f.is_zero()) continue;
            auto roots = residue_roots(f);
            size_t idx = 0;
            for (long long x = 0; x < p; ++x) {
                bool is_root = (f.eval(x) == 0);
                bool listed = idx < roots.size() && roots[idx].root.value() == x;
                CHECK(is_root == listed);
                if (listed) {
                    CHECK(roots[idx].multiplicity >= 1);
                    ++idx;
                }
            }
            CHECK(idx == roots.size());
        }
    }
}

TEST_CASE("error paths: descriptor mismatch and division by zero") {
    auto q2 = parse_field("qp:2");
    auto q3 = parse_field("qp:3");
    CHECK_THROWS_AS(LocalFieldElement::one(q2) + LocalFieldElement::one(q3), DescriptorMismatch);
    CHECK_THROWS_AS(LocalFieldElement::one(q2) / LocalFieldElement::zero(q2), DivisionByZero);
    auto eis = parse_field("eis:2:x^4-2");
    CHECK_THROWS_AS(LocalFieldElement::zero(eis).inverse(), DivisionByZero);
}

TEST_CASE("valuation is multiplicative and ultrametric") {
    Rng rng(0x5eed01);
    for (const auto& f : ellocal::testing::standard_backends()) {
        for (int i = 0; i < 1000; ++i) {
            auto a = ellocal::testing::random_element(f, rng);
            auto b = ellocal::testing::random_element(f, rng);
            auto va = a.valuation(), vb = b.valuation();
            CHECK((a * b).valuation() == va + vb);
            auto vs = (a + b).valuation();
            CHECK(vs >= min(va, vb));
            if (va != vb) CHECK(vs == min(va, vb));
        }
    }
}

TEST_CASE("eisenstein valuation matches the norm oracle for e=2") {
    // In Q[x]/(x^2-2) the norm of c0 + c1*x is c0^2 - 2*c1^2 and
    // v(a) = v_2(Norm(a)); the norm is computed directly from the payload.
    auto f = parse_field("eis:2:x^2-2");
    Rng rng(0x5eed02);
    int checked = 0;
    while (checked < 250) {
        auto a = ellocal::testing::random_element(f, rng);
        if (a.is_zero()) continue;
        Rat c0 = a.eis().coeff(0), c1 = a.eis().coeff(1);
        Rat norm = c0 * c0 - 2 * c1 * c1;
        CHECK(a.valuation() == vp_rat(norm, 2));
        ++checked;
    }
}

TEST_CASE("reduce is a ring homomorphism on integral elements") {
    Rng rng(0x5eed03);
    for (const auto& f : ellocal::testing::standard_backends()) {
        for (int i = 0; i < 200; ++i) {
            auto a = ellocal::testing::random_integral(f, rng);
            auto b = ellocal::testing::random_integral(f, rng);
            CHECK((a + b).reduce() == a.reduce() + b.reduce());
            CHECK((a * b).reduce() == a.reduce() * b.reduce());
        }
        CHECK(LocalFieldElement::one(f).reduce() == Residue(1, f->residue_char()));
    }
}

TEST_CASE("element string round trips") {
    for (const auto& f : ellocal::testing::standard_backends()) {
        Rng rng(0x5eed04);
        for (int i = 0; i < 50; ++i) {
            auto a = ellocal::testing::random_element(f, rng);
            CHECK(LocalFieldElement::parse(f, a.str()) == a);
        }
    }
    auto q2 = parse_field("qp:2");
    CHECK_THROWS_AS(el(q2, "t+1"), ParseError);  // no variable in qp
    CHECK_THROWS_AS(el(q2, "1+"), ParseError);
    CHECK_THROWS_AS(el(q2, "(1"), ParseError);
    CHECK_THROWS_AS(el(q2, "1/0"), ParseError);
}
