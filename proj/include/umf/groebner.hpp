#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "umf/ringmat.hpp"
#include "umf/ringpoly.hpp"

namespace umf {

/// Monomial order on a polynomial ring. `vars` lists ring variable indices
/// from most to least significant.
class TermOrder {
public:
    enum class Kind { Lex, Grevlex, Elimination };

    static TermOrder lex(const Ring& ring, std::vector<int> vars = {});
    static TermOrder grevlex(const Ring& ring, std::vector<int> vars = {});
    /// Grevlex on the first `block` variables of `vars`, ties broken by
    /// grevlex on the rest.
    static TermOrder elimination(const Ring& ring, std::size_t block, std::vector<int> vars = {});

    Kind kind() const noexcept { return kind_; }
    const std::vector<int>& vars() const noexcept { return vars_; }
    std::size_t block() const noexcept { return block_; }

    /// -1, 0, 1 as a <, =, > b.
    int compare(const Monomial& a, const Monomial& b) const noexcept;
    bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

    std::string to_string() const;

private:
    TermOrder(Kind kind, std::vector<int> vars, std::size_t block);
    Kind kind_;
    std::vector<int> vars_;
    std::size_t block_;
};

/// Leading term of a nonzero polynomial under `order`.
Term leading_term(const Poly& p, const TermOrder& order);

Poly s_polynomial(const Poly& f, const Poly& g, const TermOrder& order);

/// Fully reduced remainder of p modulo the divisors (unique when they form a
/// Groebner basis).
Poly normal_form(const Poly& p, const std::vector<Poly>& divisors, const TermOrder& order);

/// Reduced, monic Groebner basis sorted by increasing leading monomial.
std::vector<Poly> buchberger(const std::vector<Poly>& gens, const TermOrder& order);

struct JacobianIdeal {
    /// Polynomial ring the generators live in (Laurent flags cleared).
    RingPtr ring;
    /// Nonzero formal partials with denominators cleared.
    std::vector<Poly> cleared;
    /// Reduced grevlex Groebner basis of the cleared partials saturated by the
    /// product of the Laurent variables.
    std::vector<Poly> generators;
};

JacobianIdeal laurent_jacobian_ideal(const Poly& w);

/// Quotient of a polynomial ring by the ideal of a reduced Groebner basis.
class QuotientRing {
public:
    QuotientRing(RingPtr ring, std::vector<Poly> gb, TermOrder order);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Poly>& gb() const noexcept { return gb_; }
    const TermOrder& order() const noexcept { return order_; }
    bool infinite() const noexcept { return infinite_; }
    /// Requires a finite quotient.
    std::size_t dimension() const;
    const std::vector<Monomial>& staircase() const;
    const FieldMatrix& mult_matrix(int var) const;

    Poly normal_form(const Poly& p) const;
    /// Coordinates of normal_form(p) in the staircase basis.
    FieldVector coordinates(const Poly& p) const;

private:
    RingPtr ring_;
    std::vector<Poly> gb_;
    TermOrder order_;
    bool infinite_ = true;
    std::vector<Monomial> staircase_;
    std::vector<FieldMatrix> mult_;
};

QuotientRing quotient(const RingPtr& ring, const std::vector<Poly>& gb, const TermOrder& order);

/// Monic least-degree annihilator of a square matrix, in the variable `var`.
Poly minimal_polynomial(const FieldMatrix& m, const std::string& var = "t");

/// p(M_1, ..., M_n) for pairwise commuting square matrices.
FieldMatrix poly_at_matrices(const Poly& p, std::span<const FieldMatrix> mats);

}  // namespace umf
