#pragma once

#include <cstdint>
#include <optional>

#include "umf/cohomwin.hpp"
#include "umf/groebner.hpp"
#include "umf/mfcore.hpp"
#include "umf/report.hpp"

namespace umf {

/// W = x + y + x^-1 y^-1 in x, y (both Laurent) over GF(2^k).
RingPtr rp2_ring(const FieldSpec& field = FieldSpec::gf2());
UngradedMF rp2_factorization(const FieldSpec& field = FieldSpec::gf2());
/// Q = [[x^n, y], [y + xz, x^n]] for W = x^2n + y^2 + xyz in x, y, z.
UngradedMF an_q(int n, const FieldSpec& field = FieldSpec::gf2());
/// R = [[x^n, y], [y, x^n]] for W0 = x^2n + y^2 in x, y.
UngradedMF an_r(int n, const FieldSpec& field = FieldSpec::gf2());

/// Trace and anti-trace of a 2x2 matrix: a + d and y*b + c.
Poly tr(const RingMatrix& f);
Poly at(const RingMatrix& f);

/// alpha = alpha_canonical + c1 * dW/dx + c2 * dW/dy.
struct AlphaReduction {
    Poly alpha;
    Poly c1;
    Poly c2;
};

struct ClosedDecomposition {
    RingMatrix a, b, s, t;
    /// [[A, B], [xB + [U,S], A + [U,T]]]
    RingMatrix reassemble(const class Rp2Context& ctx) const;
};

struct ReductionResult {
    /// Canonical representative in span{1, x, x^2}.
    Poly alpha;
    /// delta(g) = f + alpha * Id.
    HomotopyWitness witness;
};

struct Obstruction {
    Poly c1;  // coefficient of dW/dx
    Poly c2;  // coefficient of dW/dy
};

/// The mirror factorization of RP^2 in block form Q = [[U, V], [xV, U]] with
/// the helpers needed to normalize its closed endomorphisms.
class Rp2Context {
public:
    explicit Rp2Context(const FieldSpec& field = FieldSpec::gf2());

    const RingPtr& ring() const noexcept { return ring_; }
    const Poly& w() const noexcept { return mf_.potential(); }
    const UngradedMF& q() const noexcept { return mf_; }
    const RingMatrix& u() const noexcept { return u_; }
    const RingMatrix& v() const noexcept { return v_; }
    const RingMatrix& f_alpha() const noexcept { return f_alpha_; }
    const RingMatrix& m() const noexcept { return m_; }
    const Poly& dw_dx() const noexcept { return dwx_; }
    const Poly& dw_dy() const noexcept { return dwy_; }

    Poly poly(std::string_view text) const { return Poly::parse(text, ring_); }
    Morphism endo(const RingMatrix& f) const { return Morphism(mf_, mf_, f); }

    /// [U, F] = [[at F, tr F], [y tr F, at F]].
    RingMatrix delta_u(const RingMatrix& f) const;
    /// F = [[0,0],[s,t]] with [U,F] = X when X = [[s,t],[yt,s]].
    std::optional<RingMatrix> delta_u_preimage(const RingMatrix& x) const;

    /// Trace identities for V F and F V.
    Report trace_identities_check(const RingMatrix& f) const;

    ClosedDecomposition decompose_closed(const RingMatrix& f) const;
    ReductionResult reduce_endomorphism(const RingMatrix& f) const;
    /// Requires delta(f) = alpha * Id.
    Obstruction obstruction_decomposition(const RingMatrix& f, const Poly& alpha) const;

    /// Rewrites alpha via x^a y^b -> x^((a+b) mod 3) with explicit cofactors.
    AlphaReduction canonical_alpha(const Poly& alpha) const;
    /// Product in span{1,x,x^2} modulo x^3 + 1.
    Poly multiply_canonical(const Poly& a, const Poly& b) const;

    /// Random closed endomorphism alpha*Id + delta(g) with entries of g in
    /// [-radius, radius]^2; returns (f, alpha).
    std::pair<RingMatrix, Poly> random_closed(std::uint64_t seed, int radius = 2) const;

private:
    RingPtr ring_;
    UngradedMF mf_;
    RingMatrix u_, v_, f_alpha_, m_;
    Poly dwx_, dwy_;
};

/// Random 2x2 F with entries in [-2,2]^2 and tr(VF) = at(VF) = 0, drawn
/// from a kernel basis of the linear conditions.
RingMatrix random_vf_traceless(const Rp2Context& ctx, std::uint64_t seed);

/// Checks the closed-form alpha rule against Groebner normal forms on random
/// monomials (via the quotient's multiplication matrices).
Report validate_alpha_rule(const Rp2Context& ctx, std::uint64_t seed, int samples = 50);

/// Jacobian ring pipeline for W: dimension and minimal polynomials.
Report jacobian_report(const Poly& w);

/// Certifies that alpha -> alpha*Id is an isomorphism Jac(W) -> End(Q).
Report closed_open_certify(std::uint64_t seed = kDefaultSeed, const FieldSpec& field = FieldSpec::gf2());

/// Checks for the A_{2n-1} factorizations Q and R.
Report an_corpus(int n, std::uint64_t seed = kDefaultSeed);

/// Every corpus check in one report.
Report run_suite(std::uint64_t seed = kDefaultSeed, const FieldSpec& field = FieldSpec::gf2());

}  // namespace umf
