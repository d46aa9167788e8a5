#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "umf/gf2k.hpp"

namespace umf {

inline constexpr int kMaxVars = 8;

/// Integer exponent vector. Slots past the ring's variable count stay zero.
struct Monomial {
    std::array<std::int32_t, kMaxVars> e{};

    std::int64_t degree() const noexcept {
        std::int64_t d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const noexcept {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    bool divides(const Monomial& other) const noexcept {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > other.e[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded reverse lexicographic comparison (-1, 0, 1). Total degree may be
/// negative; the comparison is invariant under a common monomial shift.
int grevlex_compare(const Monomial& a, const Monomial& b) noexcept;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Coefficient field, ordered variable names and which variables may carry
/// negative exponents.
class Ring {
public:
    static RingPtr make(const FieldSpec& field, std::vector<std::string> vars,
                        std::vector<bool> laurent);
    /// All variables Laurent.
    static RingPtr laurent(const FieldSpec& field, std::vector<std::string> vars);
    static RingPtr polynomial(const FieldSpec& field, std::vector<std::string> vars);

    const Field& field() const noexcept { return *field_; }
    const FieldSpec& field_spec() const noexcept { return field_->spec(); }
    int nvars() const noexcept { return static_cast<int>(vars_.size()); }
    const std::string& var(int i) const { return vars_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& vars() const noexcept { return vars_; }
    bool is_laurent(int i) const { return laurent_.at(static_cast<std::size_t>(i)); }
    const std::vector<bool>& laurent_flags() const noexcept { return laurent_; }
    bool any_laurent() const noexcept;
    std::optional<int> index_of(std::string_view name) const;

    /// Same variables with every Laurent flag cleared.
    RingPtr polynomial_part() const;
    RingPtr with_field(const FieldSpec& field) const;

    bool admits(const Monomial& m) const noexcept;

    friend bool operator==(const Ring& a, const Ring& b) noexcept {
        return a.field_ == b.field_ && a.vars_ == b.vars_ && a.laurent_ == b.laurent_;
    }

    Ring(const Field& field, std::vector<std::string> vars, std::vector<bool> laurent);

private:
    const Field* field_;
    std::vector<std::string> vars_;
    std::vector<bool> laurent_;
};

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;
void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
    Monomial mono;
    std::uint32_t coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse (Laurent) polynomial over GF(2^k). Terms are kept in descending
/// grevlex order with no zero coefficients, so equality is structural.
class Poly {
public:
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(const RingPtr& ring) { return Poly(ring); }
    static Poly one(const RingPtr& ring);
    static Poly constant(const RingPtr& ring, std::uint32_t c);
    static Poly term(const RingPtr& ring, const Monomial& m, std::uint32_t c = 1);
    static Poly var(const RingPtr& ring, int i, std::int32_t exponent = 1);
    static Poly var(const RingPtr& ring, std::string_view name, std::int32_t exponent = 1);
    /// Builds from unsorted terms, merging duplicates.
    static Poly from_terms(const RingPtr& ring, std::vector<Term> terms);

    static Poly parse(std::string_view text, const RingPtr& ring);
    std::string to_string() const;

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept;
    bool is_constant() const noexcept;
    /// Leading term under grevlex; requires nonzero.
    const Term& leading() const { return terms_.front(); }
    std::uint32_t coeff_of(const Monomial& m) const;

    /// Per-variable minimum / maximum exponent over all terms (zero poly: all 0).
    Monomial min_exponents() const;
    Monomial max_exponents() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const { return *this + o; }
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(std::uint32_t c) const;
    Poly shifted(const Monomial& m) const;
    Poly pow(unsigned e) const;

    /// Formal derivative: x^a -> (a mod 2) x^(a-1).
    Poly partial(int i) const;

    /// Substitution into an extension of the coefficient field.
    FieldElem evaluate(std::span<const FieldElem> point) const;

    /// Quotient when `d` divides exactly in the (Laurent) ring, else nullopt.
    static std::optional<Poly> exact_divide(const Poly& p, const Poly& d);

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Validates a point against a ring and returns the common field of its coordinates.
const Field& point_field(const Ring& ring, std::span<const FieldElem> point);

}  // namespace umf
