#include <doctest.h>

#include <cmath>
#include <set>

#include "support.hpp"

using namespace umf;
using umf::testing::random_matrix;

namespace {

RingPtr ring_xy() { return Ring::laurent(FieldSpec::gf2(), {"x", "y"}); }
RingMatrix M(const char* s, const RingPtr& r) { return RingMatrix::parse(s, r); }

const char* kQ = "0, 1, 1, x^-1*y^-1; y, 0, x^-1, 1; x, y^-1, 0, 1; 1, x, y, 0";

// Rank from the size of the column span: |span| = q^rank. Exponential, test-only.
std::size_t brute_force_rank(const FieldMatrix& m) {
    const Field& f = m.field();
    const std::uint32_t q = f.order();
    std::set<FieldVector> span;
    std::size_t combos = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) combos *= q;
    for (std::size_t code = 0; code < combos; ++code) {
        FieldVector v(m.rows(), 0);
        std::size_t rest = code;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto a = static_cast<std::uint32_t>(rest % q);
            rest /= q;
            for (std::size_t r = 0; r < m.rows(); ++r) v[r] ^= f.mul(a, m.at(r, c));
        }
        span.insert(v);
    }
    return static_cast<std::size_t>(std::lround(std::log(static_cast<double>(span.size())) / std::log(q)));
}

FieldMatrix random_field_matrix(const Field& f, std::mt19937_64& rng, std::size_t r, std::size_t c, double density) {
    std::bernoulli_distribution keep(density);
    FieldMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (keep(rng)) m.set(i, j, umf::testing::random_elem(f, rng, true).value());
    return m;
}

}  // namespace

TEST_CASE("U and V identities") {
    auto r = ring_xy();
    const auto u = M("0, 1; y, 0", r);
    const auto v = M("1, x^-1*y^-1; x^-1, 1", r);
    CHECK(commutator(u, u).is_zero());
    CHECK(u * u == RingMatrix::scalar(r, 2, Poly::var(r, "y")));
    CHECK(u * v == v * u);
    CHECK(u * v == RingMatrix::scalar(r, 2, Poly::var(r, "x", -1)) + u);
}

TEST_CASE("block assembly") {
    auto r = ring_xy();
    const auto u = M("0, 1; y, 0", r);
    const auto v = M("1, x^-1*y^-1; x^-1, 1", r);
    const auto q = RingMatrix::block2(u, v, v.scaled(Poly::var(r, "x")), u);
    CHECK(q == M(kQ, r));
    const auto [a, b, c, d] = q.blocks();
    CHECK(a == u);
    CHECK(b == v);
    CHECK(d == u);
    CHECK(q.scaled(Poly::zero(r)).is_zero());
    CHECK_THROWS_AS(RingMatrix::block2(u, v, M("1", r), u), Error);
}

TEST_CASE("specialization") {
    auto r = ring_xy();
    const Field& f2 = Field::gf2();
    std::vector<FieldElem> ones{f2.one(), f2.one()};
    const auto q1 = M(kQ, r).specialize(ones);
    CHECK(q1.to_string() == "[0,1,1,1];[1,0,1,1];[1,1,0,1];[1,1,1,0]");
    CHECK(q1.rank() == 4);
    CHECK(RingMatrix::identity(r, 3).specialize(ones) == FieldMatrix::identity(f2, 3));

    std::mt19937_64 rng(umf::testing::kSeed);
    const Field& f4 = Field::get(FieldSpec::standard(2));
    for (int i = 0; i < 20; ++i) {
        const auto a = random_matrix(r, rng, 2, 3, -1, 1), b = random_matrix(r, rng, 3, 2, -1, 1);
        std::vector<FieldElem> p{umf::testing::random_elem(f4, rng, true), umf::testing::random_elem(f4, rng, true)};
        CHECK((a * b).specialize(p) == a.specialize(p) * b.specialize(p));
    }
}

TEST_CASE("matrix algebra laws on random samples") {
    auto r = ring_xy();
    std::mt19937_64 rng(umf::testing::kSeed + 2);
    for (int i = 0; i < 15; ++i) {
        const auto a = random_matrix(r, rng, 2, 2, -1, 1), b = random_matrix(r, rng, 2, 2, -1, 1),
                   c = random_matrix(r, rng, 2, 2, -1, 1);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(commutator(a, b * c) == commutator(a, b) * c + b * commutator(a, c));
    }
}

TEST_CASE("text format") {
    auto r = ring_xy();
    const auto q = M(kQ, r);
    CHECK(q.rows() == 4);
    CHECK(M(q.to_string().c_str(), r) == q);
    try {
        M("1, x\n1, ?", r);
        FAIL("expected parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 4);
    }
    CHECK_THROWS_AS(M("1, x; 1", r), ParseError);
}

TEST_CASE("field linear algebra examples") {
    const Field& f2 = Field::gf2();
    CHECK(FieldMatrix(f2, 3, 5).kernel_basis().size() == 5);
    const FieldVector b{1, 0, 1};
    CHECK(*FieldMatrix::identity(f2, 3).solve(b) == b);
    FieldMatrix singular(f2, 2, 2);
    singular.set(0, 0, 1);
    singular.set(1, 0, 1);
    CHECK_FALSE(singular.solve(FieldVector{1, 0}));
    CHECK_FALSE(singular.inverse());
    CHECK_THROWS_AS(singular.solve(FieldVector{1}), Error);
}

TEST_CASE("rank, kernel and solve agree with brute force") {
    std::mt19937_64 rng(umf::testing::kSeed + 3);
    for (int k : {1, 2}) {
        const Field& f = Field::get(FieldSpec::standard(k));
        for (int i = 0; i < 60; ++i) {
            const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % (k == 1 ? 9 : 5);
            const auto m = random_field_matrix(f, rng, rows, cols, 0.5);
            const auto rank = m.rank();
            CHECK(rank == brute_force_rank(m));
            const auto kernel = m.kernel_basis();
            CHECK(rank + kernel.size() == cols);
            for (const auto& v : kernel) {
                const auto mv = m.apply(v);
                CHECK(std::all_of(mv.begin(), mv.end(), [](auto x) { return x == 0; }));
            }
            FieldVector x(cols);
            for (auto& e : x) e = umf::testing::random_elem(f, rng).value();
            const auto rhs = m.apply(x);
            const auto sol = m.solve(rhs);
            REQUIRE(sol);
            CHECK(m.apply(*sol) == rhs);
            if (rows == cols && rank == rows) CHECK(*m.inverse() * m == FieldMatrix::identity(f, rows));
        }
    }
}

TEST_CASE("large GF(2) elimination stays consistent") {
    std::mt19937_64 rng(umf::testing::kSeed + 4);
    const Field& f2 = Field::gf2();
    const auto a = random_field_matrix(f2, rng, 150, 90, 0.05);
    const auto b = random_field_matrix(f2, rng, 90, 200, 0.05);
    const auto p = a * b;
    CHECK(p.rank() <= std::min(a.rank(), b.rank()));
    CHECK(p.rank() + p.kernel_basis().size() == p.cols());
    CHECK(p.transpose().rank() == p.rank());
}
