#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "umf/error.hpp"

namespace umf {

/// Extension degree and defining modulus of GF(2^k). Bit i of `modulus` is
/// the coefficient of t^i; bit k is always set.
struct FieldSpec {
    int k = 1;
    std::uint32_t modulus = 0b11;

    static constexpr int kMaxDegree = 16;

    static FieldSpec gf2() { return {1, 0b11}; }
    /// Fixed moduli for k <= 4; otherwise the smallest irreducible of degree k.
    static FieldSpec standard(int k);
    /// Builds a spec from k and a bit string, constant term first ("111" = t^2+t+1).
    static FieldSpec from_bits(int k, std::string_view bits);
    /// Accepts "2^k" or "2^k:bits".
    static FieldSpec parse(std::string_view text);

    std::string modulus_bits() const;
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_irreducible_gf2(std::uint32_t poly);

class FieldElem;

/// Arithmetic tables for one GF(2^k). Instances are interned and live for the
/// whole process; compare fields by address.
class Field {
public:
    static const Field& get(const FieldSpec& spec);
    static const Field& gf2() { return get(FieldSpec::gf2()); }

    const FieldSpec& spec() const noexcept { return spec_; }
    int degree() const noexcept { return spec_.k; }
    std::uint32_t order() const noexcept { return std::uint32_t{1} << spec_.k; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= order() - 1) s -= order() - 1;
        return exp_[s];
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, long long e) const;

    FieldElem elem(std::uint32_t value) const;
    FieldElem zero() const;
    FieldElem one() const;
    /// All 2^k elements in increasing serialization order.
    std::vector<FieldElem> enumerate() const;

    /// True when every element of `sub` is canonically an element of this field
    /// (same field, or the prime field).
    bool contains(const Field& sub) const noexcept { return &sub == this || sub.degree() == 1; }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    explicit Field(const FieldSpec& spec);
    friend struct FieldRegistry;

    FieldSpec spec_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// Element of GF(2^k) in the power basis. The serialization integer has the
/// constant coefficient as least significant bit.
class FieldElem {
public:
    FieldElem() : field_(&Field::gf2()), value_(0) {}
    FieldElem(const Field& field, std::uint32_t value);

    const Field& field() const noexcept { return *field_; }
    std::uint32_t value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }
    bool is_one() const noexcept { return value_ == 1; }

    FieldElem inverse() const;
    FieldElem pow(long long e) const;
    /// Same value in a field that contains this one.
    FieldElem lift(const Field& target) const;

    /// "0"/"1" in GF(2), "{n}" otherwise.
    std::string to_string() const;

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + b; }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

private:
    const Field* field_;
    std::uint32_t value_;
};

}  // namespace umf
