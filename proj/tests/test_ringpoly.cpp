#include <doctest.h>

#include "support.hpp"

using namespace umf;
using umf::testing::random_poly;

namespace {

RingPtr laurent_xy(int k = 1) { return Ring::laurent(FieldSpec::standard(k), {"x", "y"}); }
Poly P(const char* s, const RingPtr& r) { return Poly::parse(s, r); }

}  // namespace

TEST_CASE("arithmetic examples") {
    auto r = laurent_xy();
    CHECK((P("x + y", r) + P("x + y", r)).is_zero());
    CHECK(P("x + y", r) * P("x + y", r) == P("x^2 + y^2", r));
    CHECK(P("1 + x^-1*y^-1", r) * P("x*y", r) == P("x*y + 1", r));
    auto other = Ring::laurent(FieldSpec::standard(1), {"x", "z"});
    CHECK_THROWS_AS(P("x", r) + P("x", other), Error);
}

TEST_CASE("formal partial derivatives") {
    auto r = laurent_xy();
    CHECK(P("x + y + x^-1*y^-1", r).partial(0) == P("1 + x^-2*y^-1", r));
    CHECK(P("x + y + x^-1*y^-1", r).partial(1) == P("1 + x^-1*y^-2", r));
    CHECK(P("x^2", r).partial(0).is_zero());
    auto r3 = Ring::polynomial(FieldSpec::gf2(), {"x", "y", "z"});
    CHECK(P("x*y*z", r3).partial(2) == P("x*y", r3));
}

TEST_CASE("evaluation") {
    auto r = laurent_xy();
    const Field& f2 = Field::gf2();
    const Poly w = P("x + y + x^-1*y^-1", r);
    std::vector<FieldElem> ones{f2.one(), f2.one()};
    CHECK(w.evaluate(ones) == f2.one());

    const Field& f4 = Field::get(FieldSpec::standard(2));
    std::vector<FieldElem> tt{f4.elem(2), f4.elem(2)};
    CHECK(w.evaluate(tt) == f4.elem(2));

    // All-one coefficients at the all-ones point give the term-count parity.
    CHECK(P("x + y + x*y + x^-3", r).evaluate(ones) == f2.zero());
    CHECK(P("x + y + x*y", r).evaluate(ones) == f2.one());

    std::vector<FieldElem> pole{f4.zero(), f4.one()};
    CHECK_THROWS_WITH_AS(w.evaluate(pole), doctest::Contains("pole"), Error);
}

TEST_CASE("exact division") {
    auto r = laurent_xy();
    auto q = Poly::exact_divide(P("x^2 + y^2", r), P("x + y", r));
    REQUIRE(q);
    CHECK(*q == P("x + y", r));

    const Poly a = P("1 + x^-1*y^-2", r), b = P("1 + x^-2*y^-1", r);
    q = Poly::exact_divide(a * b, b);
    REQUIRE(q);
    CHECK(*q == a);

    CHECK_FALSE(Poly::exact_divide(P("x + 1", r), P("y", r) + P("y^2", r)));
    auto rp = Ring::polynomial(FieldSpec::gf2(), {"x", "y"});
    CHECK_FALSE(Poly::exact_divide(P("x + 1", rp), P("y", rp)));
    // In the Laurent ring monomials are units.
    q = Poly::exact_divide(P("x + 1", r), P("y", r));
    REQUIRE(q);
    CHECK(*q == P("x*y^-1 + y^-1", r));
    CHECK_THROWS_AS(Poly::exact_divide(P("x", r), Poly::zero(r)), Error);
}

TEST_CASE("parse and print") {
    auto r = laurent_xy();
    const Poly w = P("x + y + x^-1*y^-1", r);
    CHECK(w.size() == 3);
    CHECK(w.to_string() == "x + y + x^-1*y^-1");
    CHECK(P("0", r).to_string() == "0");
    CHECK(P("1 + 1", r).is_zero());
    CHECK(P("x - y", r) == P("x + y", r));

    auto r4 = laurent_xy(2);
    const Poly c = P("{3}*x^-2*y + 1", r4);
    CHECK(c.to_string() == "1 + {3}*x^-2*y");
    CHECK_THROWS_AS(P("{4}*x", r4), ParseError);

    auto rp = Ring::make(FieldSpec::gf2(), {"x"}, {false});
    CHECK_THROWS_AS(P("x^-1", rp), ParseError);
    CHECK_THROWS_WITH_AS(P("x + q", r), doctest::Contains("unknown variable 'q'"), ParseError);
    try {
        P("x +\n  * y", r);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("printing is idempotent canonicalization") {
    std::mt19937_64 rng(umf::testing::kSeed);
    for (int k : {1, 2}) {
        auto r = laurent_xy(k);
        for (int i = 0; i < 50; ++i) {
            const Poly p = random_poly(r, rng, -3, 3, 0.2);
            const std::string once = p.to_string();
            CHECK(P(once.c_str(), r) == p);
            CHECK(P(once.c_str(), r).to_string() == once);
        }
    }
}

TEST_CASE("ring laws, Leibniz rule and evaluation homomorphism on random inputs") {
    std::mt19937_64 rng(umf::testing::kSeed + 1);
    const Field& f16 = Field::get(FieldSpec::standard(4));
    for (int k : {1, 2}) {
        auto r = laurent_xy(k);
        const Field& pf = k == 1 ? f16 : r->field();
        for (int i = 0; i < 40; ++i) {
            const Poly p = random_poly(r, rng, -2, 2), q = random_poly(r, rng, -2, 2), s = random_poly(r, rng, -2, 2);
            CHECK((p + q) * s == p * s + q * s);
            CHECK((p * q) * s == p * (q * s));
            CHECK(p * q == q * p);
            CHECK((p + q) * (p + q) == p * p + q * q);
            for (int v = 0; v < 2; ++v) CHECK((p * q).partial(v) == p.partial(v) * q + p * q.partial(v));
            std::vector<FieldElem> pt{umf::testing::random_elem(pf, rng, true),
                                      umf::testing::random_elem(pf, rng, true)};
            CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
            CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
            if (!q.is_zero()) {
                auto quotient = Poly::exact_divide(p * q, q);
                REQUIRE(quotient);
                CHECK(*quotient == p);
            }
        }
    }
}

TEST_CASE("exponent overflow is a hard error") {
    auto r = laurent_xy();
    const Poly big = Poly::var(r, 0, 2147483000);
    CHECK_THROWS_AS(big * big, Error);
}
