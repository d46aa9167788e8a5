#include <doctest.h>

#include "umf/gf2k.hpp"

using namespace umf;

namespace {

// Schoolbook carry-less product reduced bit by bit; independent of the log tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, const FieldSpec& spec) {
    std::uint64_t r = 0;
    for (int i = 0; i < spec.k; ++i)
        if (b >> i & 1u) r ^= std::uint64_t{a} << i;
    for (int d = 2 * spec.k; d >= spec.k; --d)
        if (r >> d & 1u) r ^= std::uint64_t{spec.modulus} << (d - spec.k);
    return static_cast<std::uint32_t>(r);
}

}  // namespace

TEST_CASE("GF(2) addition is characteristic two") {
    const Field& f = Field::gf2();
    CHECK((f.one() + f.one()).is_zero());
    CHECK(f.one().inverse() == f.one());
}

TEST_CASE("GF(4) examples") {
    const Field& f = Field::get(FieldSpec::standard(2));
    CHECK(f.spec().modulus_bits() == "111");
    const auto t = f.elem(2);
    CHECK(t * t == f.elem(3));
    CHECK(t.inverse() == f.elem(3));
    CHECK(f.one().inverse() == f.one());
    CHECK(t.to_string() == "{2}");
}

TEST_CASE("enumerate lists every element once in serialization order") {
    for (int k = 1; k <= 4; ++k) {
        const Field& f = Field::get(FieldSpec::standard(k));
        const auto all = f.enumerate();
        REQUIRE(all.size() == (1u << k));
        for (std::uint32_t i = 0; i < all.size(); ++i) CHECK(all[i].value() == i);
    }
}

TEST_CASE("field axioms hold exhaustively for k <= 4") {
    for (int k = 1; k <= 4; ++k) {
        const Field& f = Field::get(FieldSpec::standard(k));
        const auto all = f.enumerate();
        for (const auto& a : all) {
            CHECK((a + a).is_zero());
            if (!a.is_zero()) {
                CHECK((a * a.inverse()).is_one());
                CHECK(a.inverse().inverse() == a);
            }
            for (const auto& b : all) {
                CHECK((a + b) * (a + b) == a * a + b * b);
                CHECK((a * b).value() == slow_mul(a.value(), b.value(), f.spec()));
                for (const auto& c : all) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        }
    }
}

TEST_CASE("non-primitive modulus still yields a correct field") {
    // t^4+t^3+t^2+t+1 is irreducible but t has order 5.
    const auto spec = FieldSpec::from_bits(4, "11111");
    const Field& f = Field::get(spec);
    for (const auto& a : f.enumerate())
        for (const auto& b : f.enumerate()) CHECK((a * b).value() == slow_mul(a.value(), b.value(), spec));
}

TEST_CASE("errors") {
    const Field& f2 = Field::gf2();
    const Field& f4 = Field::get(FieldSpec::standard(2));
    CHECK_THROWS_WITH_AS(f2.one() + f4.one(), "field mismatch", Error);
    CHECK_THROWS_WITH_AS(f4.zero().inverse(), "division by zero", Error);
    CHECK_THROWS_AS(FieldSpec::from_bits(2, "101"), Error);  // t^2+1 = (t+1)^2
    CHECK_THROWS_AS(FieldSpec::parse("3^2"), Error);
}

TEST_CASE("field spec text round trip") {
    CHECK(FieldSpec::parse("2^3") == FieldSpec::standard(3));
    CHECK(FieldSpec::standard(3).modulus_bits() == "1101");
    CHECK(FieldSpec::parse("2^2:111").to_string() == "2^2:111");
    CHECK(FieldSpec::standard(5).k == 5);
    CHECK(is_irreducible_gf2(FieldSpec::standard(7).modulus));
}
