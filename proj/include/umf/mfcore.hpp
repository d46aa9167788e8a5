#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "umf/ringmat.hpp"
#include "umf/ringpoly.hpp"

namespace umf {

/// Outcome of checking Q^2 = W*Id; `residual` is Q^2 + W*Id.
struct MfVerification {
    bool ok;
    RingMatrix residual;
};

MfVerification verify_mf(const RingMatrix& q, const Poly& w);

/// Square matrix Q over the ring of W with Q^2 = W*Id. Construction verifies
/// the identity and throws on failure.
class UngradedMF {
public:
    UngradedMF(Poly potential, RingMatrix q);

    const Poly& potential() const noexcept { return w_; }
    const RingMatrix& matrix() const noexcept { return q_; }
    const RingPtr& ring() const noexcept { return q_.ring(); }
    std::size_t size() const noexcept { return q_.rows(); }

    friend bool operator==(const UngradedMF&, const UngradedMF&) = default;

private:
    Poly w_;
    RingMatrix q_;
};

/// Z/2-graded factorization (Q0, Q1) with Q0*Q1 = Q1*Q0 = W*Id.
class GradedMF {
public:
    GradedMF(Poly potential, RingMatrix q0, RingMatrix q1);

    const Poly& potential() const noexcept { return w_; }
    const RingMatrix& q0() const noexcept { return q0_; }
    const RingMatrix& q1() const noexcept { return q1_; }
    std::size_t rank() const noexcept { return q0_.rows(); }

private:
    Poly w_;
    RingMatrix q0_;
    RingMatrix q1_;
};

/// Module map f: source -> target, a target.size() x source.size() matrix.
/// Both ends must factor the same potential.
class Morphism {
public:
    Morphism(UngradedMF source, UngradedMF target, RingMatrix f);

    static Morphism identity(const UngradedMF& x);
    static Morphism zero(const UngradedMF& source, const UngradedMF& target);

    const UngradedMF& source() const noexcept { return source_; }
    const UngradedMF& target() const noexcept { return target_; }
    const RingMatrix& matrix() const noexcept { return f_; }

    /// Same ends, different matrix.
    Morphism with_matrix(RingMatrix f) const { return Morphism(source_, target_, std::move(f)); }

private:
    UngradedMF source_;
    UngradedMF target_;
    RingMatrix f_;
};

/// delta(f) = R*f + f*Q for f: (E,Q) -> (F,R).
RingMatrix differential(const UngradedMF& source, const UngradedMF& target, const RingMatrix& f);
Morphism differential(const Morphism& f);
bool is_closed(const Morphism& f);
/// g o f; requires f.target() == g.source().
Morphism compose(const Morphism& g, const Morphism& f);

/// Certificate that `claim` is exact: delta(g) = claim. Verified on construction.
class HomotopyWitness {
public:
    HomotopyWitness(Morphism claim, RingMatrix g);

    const Morphism& claim() const noexcept { return claim_; }
    const RingMatrix& g() const noexcept { return g_; }
    /// Recomputes delta(g) symbolically.
    bool reverify() const;

private:
    Morphism claim_;
    RingMatrix g_;
};

struct EulerCheck {
    bool holds;
    RingMatrix lhs;  // dQ*Q + Q*dQ
    RingMatrix rhs;  // dW * Id
};

/// dQ/dz_i o Q + Q o dQ/dz_i = dW/dz_i * Id.
EulerCheck euler_identity_check(const UngradedMF& x, int var);

/// For closed f, the witness g = f * dQ_source/dz_i with delta(g) = (dW/dz_i) * f.
HomotopyWitness jacobian_action_witness(const Morphism& f, int var);

GradedMF double_mf(const UngradedMF& x);
UngradedMF forget(const GradedMF& y);

enum class Adjunction {
    /// Hom(F X, Y) ~ Hom(X, D Y)
    ForgetDouble,
    /// Hom(Y, F X) ~ Hom(D Y, X)
    DoubleForget,
};

enum class Parity { Even, Odd };

/// Chain-level adjunction bijection for a graded X and ungraded Y. Graded
/// morphisms are represented as ungraded morphisms between F(X) and F(D(Y));
/// even ones are block diagonal, odd ones block anti-diagonal. The map
/// intertwines differentials up to a parity flip:
/// delta(transport(phi, p)) = transport(delta(phi), !p).
Morphism adjunction_transport(Adjunction dir, const GradedMF& x, const UngradedMF& y, const Morphism& phi,
                              Parity parity = Parity::Even);
/// Inverse of adjunction_transport. Input must be purely even or purely odd.
Morphism adjunction_untransport(Adjunction dir, const GradedMF& x, const UngradedMF& y,
                                const Morphism& g, Parity* parity_out = nullptr);

/// h = (dW/dz_i(p))^{-1} * dQ/dz_i(p), with Q(p) h + h Q(p) = Id verified.
FieldMatrix contract_at_noncritical(const UngradedMF& x, std::span<const FieldElem> point, int var);

struct SearchOptions {
    int budget_bits = 24;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// All n x n matrices with entries supported on `support` whose square is W*Id,
/// in increasing order of their coefficient encoding.
std::vector<RingMatrix> search_factorizations(const Poly& w, std::size_t n,
                                              const std::vector<Monomial>& support,
                                              const SearchOptions& options = {});

}  // namespace umf
