#include "umf/mfcore.hpp"

#include <algorithm>
#include <thread>

namespace umf {

MfVerification verify_mf(const RingMatrix& q, const Poly& w) {
    if (!q.is_square()) throw Error(ErrorCode::DimensionMismatch, "factorization matrix must be square");
    require_same_ring(q.ring(), w.ring());
    RingMatrix residual = q * q + RingMatrix::scalar(q.ring(), q.rows(), w);
    const bool ok = residual.is_zero();
    return {ok, std::move(residual)};
}

UngradedMF::UngradedMF(Poly potential, RingMatrix q) : w_(std::move(potential)), q_(std::move(q)) {
    if (!verify_mf(q_, w_).ok) throw Error(ErrorCode::Invariant, "Q^2 != W*Id");
}

GradedMF::GradedMF(Poly potential, RingMatrix q0, RingMatrix q1)
    : w_(std::move(potential)), q0_(std::move(q0)), q1_(std::move(q1)) {
    if (!q0_.is_square() || q0_.rows() != q1_.rows() || !q1_.is_square())
        throw Error(ErrorCode::DimensionMismatch, "graded factorization needs equal square blocks");
    require_same_ring(q0_.ring(), w_.ring());
    require_same_ring(q1_.ring(), w_.ring());
    const auto wid = RingMatrix::scalar(w_.ring(), q0_.rows(), w_);
    if (!(q0_ * q1_ == wid) || !(q1_ * q0_ == wid))
        throw Error(ErrorCode::Invariant, "Q0*Q1 = Q1*Q0 = W*Id fails");
}

Morphism::Morphism(UngradedMF source, UngradedMF target, RingMatrix f)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(f)) {
    require_same_ring(source_.ring(), target_.ring());
    require_same_ring(source_.ring(), f_.ring());
    if (!(source_.potential() == target_.potential()))
        throw Error(ErrorCode::InvalidArgument, "morphisms only exist between factorizations of one potential");
    if (f_.rows() != target_.size() || f_.cols() != source_.size())
        throw Error(ErrorCode::DimensionMismatch, "morphism matrix has the wrong shape");
}

Morphism Morphism::identity(const UngradedMF& x) {
    return Morphism(x, x, RingMatrix::identity(x.ring(), x.size()));
}

Morphism Morphism::zero(const UngradedMF& source, const UngradedMF& target) {
    return Morphism(source, target, RingMatrix(source.ring(), target.size(), source.size()));
}

RingMatrix differential(const UngradedMF& source, const UngradedMF& target, const RingMatrix& f) {
    return target.matrix() * f + f * source.matrix();
}

Morphism differential(const Morphism& f) {
    return f.with_matrix(differential(f.source(), f.target(), f.matrix()));
}

bool is_closed(const Morphism& f) { return differential(f).matrix().is_zero(); }

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.target() == g.source())) throw Error(ErrorCode::InvalidArgument, "morphisms are not composable");
    return Morphism(f.source(), g.target(), g.matrix() * f.matrix());
}

HomotopyWitness::HomotopyWitness(Morphism claim, RingMatrix g) : claim_(std::move(claim)), g_(std::move(g)) {
    if (g_.rows() != claim_.matrix().rows() || g_.cols() != claim_.matrix().cols())
        throw Error(ErrorCode::DimensionMismatch, "witness has the wrong shape");
    if (!reverify()) throw Error(ErrorCode::Invariant, "homotopy witness fails delta(g) = f");
}

bool HomotopyWitness::reverify() const {
    return differential(claim_.source(), claim_.target(), g_) == claim_.matrix();
}

EulerCheck euler_identity_check(const UngradedMF& x, int var) {
    const auto& q = x.matrix();
    const auto dq = q.partial(var);
    RingMatrix lhs = dq * q + q * dq;
    RingMatrix rhs = RingMatrix::scalar(x.ring(), x.size(), x.potential().partial(var));
    const bool holds = lhs == rhs;
    return {holds, std::move(lhs), std::move(rhs)};
}

HomotopyWitness jacobian_action_witness(const Morphism& f, int var) {
    if (!is_closed(f)) throw Error(ErrorCode::NotClosed, "morphism is not closed");
    const Poly dw = f.source().potential().partial(var);
    RingMatrix g = f.matrix() * f.source().matrix().partial(var);
    return HomotopyWitness(f.with_matrix(f.matrix().scaled(dw)), std::move(g));
}

GradedMF double_mf(const UngradedMF& x) { return GradedMF(x.potential(), x.matrix(), x.matrix()); }

UngradedMF forget(const GradedMF& y) {
    RingMatrix zero(y.q0().ring(), y.rank(), y.rank());
    return UngradedMF(y.potential(), RingMatrix::block2(zero, y.q0(), y.q1(), zero));
}

namespace {

struct BlockLayout {
    // Block grid positions of the two halves of phi for each parity.
    std::size_t r0, c0, r1, c1;
};

// phi splits into halves phi0, phi1 along the graded object's E0 + E1. Even
// morphisms place them on the block diagonal, odd ones on the anti-diagonal.
BlockLayout layout(Adjunction dir, Parity parity) {
    if (parity == Parity::Even) return {0, 0, 1, 1};
    // ForgetDouble: phi0 -> (1,0), phi1 -> (0,1); DoubleForget: phi0 -> (0,1), phi1 -> (1,0).
    return dir == Adjunction::ForgetDouble ? BlockLayout{1, 0, 0, 1} : BlockLayout{0, 1, 1, 0};
}

}  // namespace

Morphism adjunction_transport(Adjunction dir, const GradedMF& x, const UngradedMF& y, const Morphism& phi,
                              Parity parity) {
    const UngradedMF fx = forget(x);
    const UngradedMF dy = forget(double_mf(y));
    const std::size_t k = x.rank();
    const std::size_t m = y.size();
    const auto& p = phi.matrix();
    const auto lay = layout(dir, parity);
    if (dir == Adjunction::ForgetDouble) {
        if (!(phi.source() == fx) || !(phi.target() == y))
            throw Error(ErrorCode::DimensionMismatch, "phi must map F(X) -> Y");
        RingMatrix g(y.ring(), 2 * m, 2 * k);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                g(lay.r0 * m + i, lay.c0 * k + j) = p(i, j);
                g(lay.r1 * m + i, lay.c1 * k + j) = p(i, k + j);
            }
        return Morphism(fx, dy, std::move(g));
    }
    if (!(phi.source() == y) || !(phi.target() == fx))
        throw Error(ErrorCode::DimensionMismatch, "phi must map Y -> F(X)");
    RingMatrix g(y.ring(), 2 * k, 2 * m);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            g(lay.r0 * k + i, lay.c0 * m + j) = p(i, j);
            g(lay.r1 * k + i, lay.c1 * m + j) = p(k + i, j);
        }
    return Morphism(dy, fx, std::move(g));
}

Morphism adjunction_untransport(Adjunction dir, const GradedMF& x, const UngradedMF& y, const Morphism& g,
                                Parity* parity_out) {
    const UngradedMF fx = forget(x);
    const UngradedMF dy = forget(double_mf(y));
    const std::size_t k = x.rank();
    const std::size_t m = y.size();
    const bool fd = dir == Adjunction::ForgetDouble;
    if (fd ? !(g.source() == fx && g.target() == dy) : !(g.source() == dy && g.target() == fx))
        throw Error(ErrorCode::DimensionMismatch, "graded morphism has the wrong ends");
    const std::size_t br = fd ? m : k;  // block height
    const std::size_t bc = fd ? k : m;  // block width
    const auto& mat = g.matrix();
    auto block_zero = [&](std::size_t bi, std::size_t bj) {
        for (std::size_t i = 0; i < br; ++i)
            for (std::size_t j = 0; j < bc; ++j)
                if (!mat(bi * br + i, bj * bc + j).is_zero()) return false;
        return true;
    };
    Parity parity;
    if (block_zero(0, 1) && block_zero(1, 0)) {
        parity = Parity::Even;
    } else if (block_zero(0, 0) && block_zero(1, 1)) {
        parity = Parity::Odd;
    } else {
        throw Error(ErrorCode::InvalidArgument, "graded morphism is neither even nor odd");
    }
    if (parity_out) *parity_out = parity;
    const auto lay = layout(dir, parity);
    if (fd) {
        RingMatrix phi(y.ring(), m, 2 * k);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                phi(i, j) = mat(lay.r0 * m + i, lay.c0 * k + j);
                phi(i, k + j) = mat(lay.r1 * m + i, lay.c1 * k + j);
            }
        return Morphism(fx, y, std::move(phi));
    }
    RingMatrix phi(y.ring(), 2 * k, m);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            phi(i, j) = mat(lay.r0 * k + i, lay.c0 * m + j);
            phi(k + i, j) = mat(lay.r1 * k + i, lay.c1 * m + j);
        }
    return Morphism(y, fx, std::move(phi));
}

FieldMatrix contract_at_noncritical(const UngradedMF& x, std::span<const FieldElem> point, int var) {
    const FieldElem dw = x.potential().partial(var).evaluate(point);
    if (dw.is_zero())
        throw Error(ErrorCode::CriticalDirection,
                    "critical direction: dW/d" + x.ring()->var(var) + " vanishes at the point");
    const FieldMatrix qp = x.matrix().specialize(point);
    const FieldMatrix h = x.matrix().partial(var).specialize(point).scaled(dw.inverse().value());
    if (!(qp * h + h * qp == FieldMatrix::identity(qp.field(), x.size())))
        throw Error(ErrorCode::Invariant, "contraction fails Q(p)h + hQ(p) = Id");
    return h;
}

std::vector<RingMatrix> search_factorizations(const Poly& w, std::size_t n, const std::vector<Monomial>& support,
                                              const SearchOptions& options) {
    const RingPtr& ring = w.ring();
    const Field& f = ring->field();
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "size must be positive");
    for (const auto& m : support)
        if (!ring->admits(m)) throw Error(ErrorCode::InvalidArgument, "support monomial not in the ring");
    const std::size_t s = support.size();
    const std::size_t unknowns = n * n * s;
    const std::size_t bits = unknowns * static_cast<std::size_t>(f.degree());
    if (bits > static_cast<std::size_t>(options.budget_bits))
        throw Error(ErrorCode::BudgetExceeded, "search needs " + std::to_string(bits) +
                                                   " unknown bits, budget is " +
                                                   std::to_string(options.budget_bits));
    if (s == 0) return {};

    // Index all product monomials and the potential's monomials.
    std::vector<Monomial> mons;
    auto index_of = [&](const Monomial& m) {
        for (std::size_t i = 0; i < mons.size(); ++i)
            if (mons[i] == m) return i;
        mons.push_back(m);
        return mons.size() - 1;
    };
    std::vector<std::size_t> prod(s * s);
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) prod[a * s + b] = index_of(support[a] * support[b]);
    std::vector<std::uint32_t> wvec;
    for (const auto& t : w.terms()) index_of(t.mono);
    wvec.assign(mons.size(), 0);
    for (const auto& t : w.terms()) wvec[index_of(t.mono)] = t.coeff;
    const std::size_t nm = mons.size();

    const std::uint64_t q = f.order();
    const std::uint64_t total = std::uint64_t{1} << bits;

    auto satisfies = [&](const std::vector<std::uint32_t>& c, std::vector<std::uint32_t>& acc) {
        // c[(i*n + j)*s + a] is the coefficient of support[a] in entry (i, j).
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::fill(acc.begin(), acc.end(), 0);
                for (std::size_t l = 0; l < n; ++l) {
                    const auto* ca = &c[(i * n + l) * s];
                    const auto* cb = &c[(l * n + j) * s];
                    for (std::size_t a = 0; a < s; ++a) {
                        if (!ca[a]) continue;
                        for (std::size_t b = 0; b < s; ++b)
                            if (cb[b]) acc[prod[a * s + b]] ^= f.mul(ca[a], cb[b]);
                    }
                }
                for (std::size_t t = 0; t < nm; ++t)
                    if (acc[t] != (i == j ? wvec[t] : 0u)) return false;
            }
        return true;
    };

    auto scan = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::vector<std::uint32_t>>& found) {
        std::vector<std::uint32_t> c(unknowns), acc(nm);
        for (std::uint64_t code = lo; code < hi; ++code) {
            std::uint64_t rest = code;
            for (std::size_t u = 0; u < unknowns; ++u) {
                c[u] = static_cast<std::uint32_t>(rest % q);
                rest /= q;
            }
            if (satisfies(c, acc)) found.push_back(c);
        }
    };

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    if (total < 4096) threads = 1;
    std::vector<std::vector<std::vector<std::uint32_t>>> chunks(threads);
    if (threads == 1) {
        scan(0, total, chunks[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
            pool.emplace_back([&, t, lo, hi] { scan(lo, hi, chunks[t]); });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<RingMatrix> out;
    for (const auto& chunk : chunks)
        for (const auto& c : chunk) {
            RingMatrix m(ring, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    std::vector<Term> terms;
                    for (std::size_t a = 0; a < s; ++a)
                        if (c[(i * n + j) * s + a]) terms.push_back({support[a], c[(i * n + j) * s + a]});
                    m(i, j) = Poly::from_terms(ring, std::move(terms));
                }
            if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
        }
    return out;
}

}  // namespace umf
