#include <doctest.h>

#include "support.hpp"
#include "umf/mfcore.hpp"

using namespace umf;
using umf::testing::random_matrix;

namespace {

RingPtr ring_xy() { return Ring::laurent(FieldSpec::gf2(), {"x", "y"}); }

UngradedMF rp2() {
    auto r = ring_xy();
    return UngradedMF(Poly::parse("x + y + x^-1*y^-1", r),
                      RingMatrix::parse("0, 1, 1, x^-1*y^-1; y, 0, x^-1, 1; x, y^-1, 0, 1; 1, x, y, 0", r));
}

RingPtr ring_xyz() { return Ring::polynomial(FieldSpec::gf2(), {"x", "y", "z"}); }

std::string an_q_text(int n) {
    const auto xn = "x^" + std::to_string(n);
    return xn + ", y; y + x*z, " + xn;
}

}  // namespace

TEST_CASE("verify_mf examples") {
    const auto x = rp2();
    CHECK(verify_mf(x.matrix(), x.potential()).ok);

    auto rp = Ring::polynomial(FieldSpec::gf2(), {"x", "y"});
    CHECK(verify_mf(RingMatrix::parse("x + y", rp), Poly::parse("x^2 + y^2", rp)).ok);

    auto r3 = ring_xyz();
    for (int n = 1; n <= 4; ++n) {
        const auto w = Poly::parse(("x^" + std::to_string(2 * n) + " + y^2 + x*y*z").c_str(), r3);
        CHECK(verify_mf(RingMatrix::parse(an_q_text(n), r3), w).ok);
    }

    auto bad = x.matrix();
    bad(0, 1) = Poly::parse("x", x.ring());
    const auto rep = verify_mf(bad, x.potential());
    CHECK_FALSE(rep.ok);
    CHECK(rep.residual.term_count() > 0);
    CHECK_THROWS_AS(UngradedMF(x.potential(), bad), Error);
    CHECK_THROWS_AS(verify_mf(RingMatrix(x.ring(), 2, 3), x.potential()), Error);
}

TEST_CASE("differential examples") {
    const auto x = rp2();
    auto r = x.ring();
    CHECK(differential(Morphism::identity(x)).matrix().is_zero());
    CHECK(differential(Morphism(x, x, x.matrix())).matrix().is_zero());
    const auto dq = Morphism(x, x, x.matrix().partial(0));
    CHECK(differential(dq).matrix() == RingMatrix::scalar(r, 4, Poly::parse("1 + x^-2*y^-1", r)));
}

TEST_CASE("delta squares to zero and satisfies Leibniz") {
    const auto x = rp2();
    const auto y = forget(double_mf(x));
    std::mt19937_64 rng(umf::testing::kSeed);
    for (int i = 0; i < 10; ++i) {
        const Morphism f(x, y, random_matrix(x.ring(), rng, 8, 4, -1, 1));
        const Morphism g(y, x, random_matrix(x.ring(), rng, 4, 8, -1, 1));
        CHECK(differential(differential(f)).matrix().is_zero());
        CHECK(differential(differential(g)).matrix().is_zero());
        const auto gf = compose(g, f);
        CHECK(differential(gf).matrix() ==
              compose(differential(g), f).matrix() + compose(g, differential(f)).matrix());
    }
}

TEST_CASE("morphisms between different potentials are rejected") {
    const auto x = rp2();
    auto r = x.ring();
    const UngradedMF shifted(x.potential() + Poly::one(r), x.matrix() + RingMatrix::identity(r, 4));
    CHECK_THROWS_AS(Morphism::zero(x, shifted), Error);
}

TEST_CASE("euler identity") {
    const auto x = rp2();
    auto r = x.ring();
    const auto e = euler_identity_check(x, 0);
    CHECK(e.holds);
    CHECK(e.rhs == RingMatrix::scalar(r, 4, Poly::parse("1 + x^-2*y^-1", r)));

    auto rp = Ring::polynomial(FieldSpec::gf2(), {"x", "y"});
    const UngradedMF a1(Poly::parse("x^2 + y^2", rp), RingMatrix::parse("x, y; y, x", rp));
    const auto e1 = euler_identity_check(a1, 0);
    CHECK(e1.holds);
    CHECK(e1.lhs.is_zero());
    CHECK(e1.rhs.is_zero());
    for (int v = 0; v < 2; ++v) CHECK(euler_identity_check(x, v).holds);
}

TEST_CASE("jacobian action witnesses") {
    const auto x = rp2();
    const auto w = jacobian_action_witness(Morphism::identity(x), 0);
    CHECK(w.g() == x.matrix().partial(0));
    CHECK(w.reverify());

    auto r3 = ring_xyz();
    const UngradedMF q(Poly::parse("x^2 + y^2 + x*y*z", r3), RingMatrix::parse(an_q_text(1), r3));
    const auto wy = jacobian_action_witness(Morphism::identity(q), 1);
    CHECK(wy.g() == RingMatrix::parse("0, 1; 1, 0", r3));
    CHECK(wy.claim().matrix() == RingMatrix::scalar(r3, 2, Poly::parse("x*z", r3)));

    CHECK(jacobian_action_witness(Morphism::zero(x, x), 1).g().is_zero());
    CHECK_THROWS_AS(jacobian_action_witness(Morphism(x, x, x.matrix().partial(0)), 0), Error);
}

TEST_CASE("doubling and forgetting") {
    auto rp = Ring::polynomial(FieldSpec::gf2(), {"x", "y"});
    const UngradedMF l(Poly::parse("x^2 + y^2", rp), RingMatrix::parse("x + y", rp));
    const auto d = double_mf(l);
    CHECK(d.q0() == l.matrix());
    CHECK(d.q1() == l.matrix());
    const auto f = forget(d);
    CHECK(f.matrix() == RingMatrix::parse("0, x + y; x + y, 0", rp));
    CHECK(f.size() == 2 * l.size());

    const auto x = rp2();
    const auto dx = double_mf(x);
    CHECK(dx.potential() == x.potential());
    CHECK(forget(dx).size() == 8);
}

TEST_CASE("adjunction transport round trips and intertwines") {
    auto rp = Ring::polynomial(FieldSpec::gf2(), {"x", "y"});
    const UngradedMF y(Poly::parse("x^2 + y^2", rp), RingMatrix::parse("x, y; y, x", rp));
    const GradedMF x = double_mf(y);
    const UngradedMF fx = forget(x);
    std::mt19937_64 rng(umf::testing::kSeed + 5);
    for (int i = 0; i < 20; ++i) {
        for (auto dir : {Adjunction::ForgetDouble, Adjunction::DoubleForget}) {
            const bool fd = dir == Adjunction::ForgetDouble;
            const auto mat = fd ? random_matrix(rp, rng, 2, 4, 0, 2) : random_matrix(rp, rng, 4, 2, 0, 2);
            const Morphism phi = fd ? Morphism(fx, y, mat) : Morphism(y, fx, mat);
            for (auto parity : {Parity::Even, Parity::Odd}) {
                const auto g = adjunction_transport(dir, x, y, phi, parity);
                Parity seen;
                CHECK(adjunction_untransport(dir, x, y, g, &seen).matrix() == phi.matrix());
                CHECK(seen == parity);
                const Parity flipped = parity == Parity::Even ? Parity::Odd : Parity::Even;
                CHECK(differential(g).matrix() ==
                      adjunction_transport(dir, x, y, differential(phi), flipped).matrix());
            }
        }
    }
    CHECK(adjunction_transport(Adjunction::ForgetDouble, x, y, Morphism::zero(fx, y)).matrix().is_zero());
    // Closed maps go to closed maps.
    const Morphism j(y, y, RingMatrix::parse("0, 1; 1, 0", rp));
    CHECK(is_closed(j));
}

TEST_CASE("contraction away from the critical locus") {
    const auto x = rp2();
    const Field& f4 = Field::get(FieldSpec::standard(2));
    std::vector<FieldElem> p{f4.one(), f4.elem(2)};
    const auto h = contract_at_noncritical(x, p, 0);
    const auto qp = x.matrix().specialize(p);
    CHECK(qp * h + h * qp == FieldMatrix::identity(f4, 4));
    std::vector<FieldElem> crit{f4.one(), f4.one()};
    CHECK_THROWS_WITH_AS(contract_at_noncritical(x, crit, 0), doctest::Contains("critical direction"), Error);
}

TEST_CASE("brute-force factorization search") {
    auto rp = Ring::polynomial(FieldSpec::gf2(), {"x", "y"});
    const auto w = Poly::parse("x^2 + y^2", rp);
    Monomial mx, my, one;
    mx.e[0] = 1;
    my.e[1] = 1;
    const auto r1 = search_factorizations(w, 1, {mx, my});
    REQUIRE(r1.size() == 1);
    CHECK(r1[0] == RingMatrix::parse("x + y", rp));

    const auto r2 = search_factorizations(w, 2, {mx, my});
    CHECK(std::find(r2.begin(), r2.end(), RingMatrix::parse("x, y; y, x", rp)) != r2.end());
    for (const auto& q : r2) CHECK(verify_mf(q, w).ok);

    // Serial and threaded enumeration agree.
    SearchOptions serial;
    serial.threads = 1;
    SearchOptions parallel;
    parallel.threads = 4;
    CHECK(search_factorizations(w, 2, {mx, my, one}, serial) == search_factorizations(w, 2, {mx, my, one}, parallel));

    CHECK(search_factorizations(Poly::parse("x", rp), 1, {one, mx}).empty());
    CHECK_THROWS_WITH_AS(search_factorizations(w, 3, {mx, my, one}), doctest::Contains("27"), Error);
}
