#include "umf/corpus.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "umf/error.hpp"

namespace umf {

namespace {

constexpr const char* kRp2Matrix = "0, 1, 1, x^-1*y^-1; y, 0, x^-1, 1; x, y^-1, 0, 1; 1, x, y, 0";

void require(bool cond, const std::string& what) {
    if (!cond) throw Error(ErrorCode::Invariant, "identity failed: " + what);
}

void require_2x2(const RingMatrix& f) {
    if (f.rows() != 2 || f.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "expected a 2x2 matrix");
}

Poly random_poly(const RingPtr& ring, std::mt19937_64& rng, const Window& win, double density) {
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<std::uint32_t> coeff(1, ring->field().order() - 1);
    std::vector<Term> terms;
    for (std::size_t i = 0; i < win.size(); ++i)
        if (keep(rng)) terms.push_back({win.monomial(i), coeff(rng)});
    return Poly::from_terms(ring, std::move(terms));
}

RingMatrix random_matrix(const RingPtr& ring, std::mt19937_64& rng, std::size_t n, const Window& win,
                         double density) {
    RingMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(ring, rng, win, density);
    return m;
}

Poly random_canonical(const RingPtr& ring, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> coeff(0, ring->field().order() - 1);
    Poly a(ring);
    for (int e = 0; e < 3; ++e) a += Poly::var(ring, 0, e).scaled(coeff(rng));
    return a;
}

std::string describe(const Poly& p) { return p.to_string(); }

}  // namespace

RingPtr rp2_ring(const FieldSpec& field) { return Ring::laurent(field, {"x", "y"}); }

UngradedMF rp2_factorization(const FieldSpec& field) {
    const auto r = rp2_ring(field);
    return UngradedMF(Poly::parse("x + y + x^-1*y^-1", r), RingMatrix::parse(kRp2Matrix, r));
}

UngradedMF an_q(int n, const FieldSpec& field) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
    const auto r = Ring::polynomial(field, {"x", "y", "z"});
    const auto xn = "x^" + std::to_string(n);
    return UngradedMF(Poly::parse("x^" + std::to_string(2 * n) + " + y^2 + x*y*z", r),
                      RingMatrix::parse(xn + ", y; y + x*z, " + xn, r));
}

UngradedMF an_r(int n, const FieldSpec& field) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
    const auto r = Ring::polynomial(field, {"x", "y"});
    const auto xn = "x^" + std::to_string(n);
    return UngradedMF(Poly::parse("x^" + std::to_string(2 * n) + " + y^2", r),
                      RingMatrix::parse(xn + ", y; y, " + xn, r));
}

Poly tr(const RingMatrix& f) {
    require_2x2(f);
    return f(0, 0) + f(1, 1);
}

Poly at(const RingMatrix& f) {
    require_2x2(f);
    const auto y = f.ring()->index_of("y");
    if (!y) throw Error(ErrorCode::RingMismatch, "anti-trace needs a variable named y");
    return Poly::var(f.ring(), *y) * f(0, 1) + f(1, 0);
}

RingMatrix ClosedDecomposition::reassemble(const Rp2Context& ctx) const {
    return RingMatrix::block2(a, b, b.scaled(ctx.poly("x")) + ctx.delta_u(s), a + ctx.delta_u(t));
}

Rp2Context::Rp2Context(const FieldSpec& field)
    : ring_(rp2_ring(field)),
      mf_(rp2_factorization(field)),
      u_(RingMatrix::parse("0, 1; y, 0", ring_)),
      v_(RingMatrix::parse("1, x^-1*y^-1; x^-1, 1", ring_)),
      f_alpha_(RingMatrix::parse("0, 0, 0, x^-1*y^-1; 0, 0, x^-1, 0; 0, y^-1, 0, 0; 1, 0, 0, 0", ring_)),
      m_(RingMatrix::parse("0, 0, 0, 0; x^-1, 0, 0, 0; 0, 0, 0, x^-1*y^-1; 0, 0, 0, 0", ring_)),
      dwx_(mf_.potential().partial(0)),
      dwy_(mf_.potential().partial(1)) {
    require(v_ == RingMatrix::identity(ring_, 2) + u_.scaled(poly("x^-1*y^-1")), "V = Id + x^-1 y^-1 U");
    require(mf_.matrix() == RingMatrix::block2(u_, v_, v_.scaled(poly("x")), u_), "Q = [[U, V], [xV, U]]");
    const auto rule = validate_alpha_rule(*this, kDefaultSeed);
    if (!rule.ok()) throw Error(ErrorCode::Invariant, "alpha canonicalization rule disagrees with Groebner normal form");
}

RingMatrix Rp2Context::delta_u(const RingMatrix& f) const {
    require_2x2(f);
    return commutator(u_, f);
}

std::optional<RingMatrix> Rp2Context::delta_u_preimage(const RingMatrix& x) const {
    require_2x2(x);
    const Poly& s = x(0, 0);
    const Poly& t = x(0, 1);
    if (x(1, 1) != s || x(1, 0) != poly("y") * t) return std::nullopt;
    const auto z = Poly::zero(ring_);
    return RingMatrix::from_rows(ring_, {{z, z}, {s, t}});
}

Report Rp2Context::trace_identities_check(const RingMatrix& f) const {
    Report rep("trace identities");
    const auto vf = v_ * f, fv = f * v_;
    const auto tr_rhs = tr(f) + poly("x^-1*y^-1") * at(f);
    const auto at_rhs = at(f) + poly("x^-1") * tr(f);
    rep.check("tr(VF)", tr(vf) == tr_rhs);
    rep.check("tr(FV)", tr(fv) == tr_rhs);
    rep.check("at(VF)", at(vf) == at_rhs);
    rep.check("at(FV)", at(fv) == at_rhs);
    return rep;
}

ClosedDecomposition Rp2Context::decompose_closed(const RingMatrix& f) const {
    if (f.rows() != 4 || f.cols() != 4) throw Error(ErrorCode::DimensionMismatch, "expected a 4x4 endomorphism");
    require_same_ring(f.ring(), ring_);
    if (!differential(mf_, mf_, f).is_zero()) throw Error(ErrorCode::NotClosed, "morphism is not closed");
    const auto [a, b, c, d] = f.blocks();
    const auto t = delta_u_preimage(d + a);
    const auto s = delta_u_preimage(c + b.scaled(poly("x")));
    require(t.has_value(), "D + A lies in the image of delta_U");
    require(s.has_value(), "C + xB lies in the image of delta_U");
    ClosedDecomposition dec{a, b, *s, *t};
    require(dec.reassemble(*this) == f, "f = [[A, B], [xB + [U,S], A + [U,T]]]");
    require(delta_u(a + b.scaled(poly("y^-1"))) == v_ * delta_u(*s), "[U, A + y^-1 B] = V [U,S]");
    require(delta_u(b + a.scaled(poly("x^-1*y^-1"))) == v_ * delta_u(*t), "[U, B + x^-1 y^-1 A] = V [U,T]");
    return dec;
}

AlphaReduction Rp2Context::canonical_alpha(const Poly& alpha) const {
    require_same_ring(alpha.ring(), ring_);
    // y -> x, then x^n -> x^(n mod 3).
    std::vector<Term> sub, canon;
    for (const auto& t : alpha.terms()) {
        Monomial m;
        m.e[0] = t.mono.e[0] + t.mono.e[1];
        sub.push_back({m, t.coeff});
        m.e[0] = ((m.e[0] % 3) + 3) % 3;
        canon.push_back({m, t.coeff});
    }
    const Poly beta = Poly::from_terms(ring_, std::move(sub));
    AlphaReduction out{Poly::from_terms(ring_, std::move(canon)), Poly(ring_), Poly(ring_)};
    const auto p = Poly::exact_divide(alpha + beta, poly("x + y"));
    const auto r = Poly::exact_divide(beta + out.alpha, poly("x^3 + 1"));
    require(p.has_value() && r.has_value(), "alpha reduction divisions are exact");
    // x + y = x dW/dx + y dW/dy and x^3 + 1 = (x^3 + x^2 y) dW/dx + x^2 y dW/dy.
    out.c1 = poly("x") * *p + poly("x^3 + x^2*y") * *r;
    out.c2 = poly("y") * *p + poly("x^2*y") * *r;
    require(alpha == out.alpha + out.c1 * dwx_ + out.c2 * dwy_, "alpha = canonical + c1 dW/dx + c2 dW/dy");
    return out;
}

Poly Rp2Context::multiply_canonical(const Poly& a, const Poly& b) const { return canonical_alpha(a * b).alpha; }

ReductionResult Rp2Context::reduce_endomorphism(const RingMatrix& f) const {
    const auto dec = decompose_closed(f);
    const auto z = Poly::zero(ring_);
    const auto& b = dec.b;
    const Poly &b1 = b(0, 0), &b2 = b(0, 1), &b4 = b(1, 1);

    // b3 = x^-1 (b1 + b4) + y b2 + p dW/dx
    const auto p = Poly::exact_divide(at(b) + poly("x^-1") * tr(b), dwx_);
    require(p.has_value(), "dW/dx divides at(B) + x^-1 tr(B)");

    // Correction whose coboundary has off-diagonal blocks B and xB.
    const auto a1 = RingMatrix::from_rows(ring_, {{z, z}, {poly("y") * b2, b4 + poly("x^-1*y^-1") * *p}});
    const auto b1m = RingMatrix::from_rows(ring_, {{z, z}, {poly("x^-1*y^-1") * *p, z}});
    const auto c1m =
        RingMatrix::from_rows(ring_, {{poly("y^-1") * (b1 + b4) + poly("x^-1*y^-2") * *p, z}, {z, z}});
    const auto d1 = RingMatrix::from_rows(ring_, {{b1, b2}, {*p, z}});
    const auto g1 = RingMatrix::block2(a1, b1m, c1m, d1);
    const auto dg1 = differential(mf_, mf_, g1).blocks();
    require(dg1[1] == b && dg1[2] == b.scaled(poly("x")), "[Q, G1] = [[*, B], [xB, *]]");
    const auto f1 = f + differential(mf_, mf_, g1);

    // Kill the remaining lower-left block [U,S].
    const RingMatrix zero2(ring_, 2, 2);
    const auto g2 = RingMatrix::block2(zero2, zero2, dec.s, zero2);
    const auto f2 = f1 + differential(mf_, mf_, g2);
    const auto bl2 = f2.blocks();
    require(bl2[1].is_zero() && bl2[2].is_zero(), "f + delta(G1 + G2) is block diagonal");
    require(bl2[0] == bl2[3], "diagonal blocks agree");
    const Poly& alpha1 = bl2[0](0, 0);
    const Poly& alpha2 = bl2[0](0, 1);
    require(bl2[0](1, 1) == alpha1 && bl2[0](1, 0) == poly("y") * alpha2, "diagonal block is a1 Id + a2 U");

    // diag(a2 U, a2 U) + a2 x^-1 Id is exact.
    const auto g3 = RingMatrix::block2(zero2, zero2, u_.scaled(alpha2), zero2);
    const auto f3 = f2 + differential(mf_, mf_, g3);
    const Poly alpha0 = alpha1 + poly("x^-1") * alpha2;
    require(f3 == RingMatrix::scalar(ring_, 4, alpha0), "f is cohomologous to (a1 + x^-1 a2) Id");

    const auto red = canonical_alpha(alpha0);
    const auto g4 = mf_.matrix().partial(0).scaled(red.c1) + mf_.matrix().partial(1).scaled(red.c2);
    const auto g = g1 + g2 + g3 + g4;
    const auto claim = f + RingMatrix::scalar(ring_, 4, red.alpha);
    return ReductionResult{red.alpha, HomotopyWitness(endo(claim), g)};
}

Obstruction Rp2Context::obstruction_decomposition(const RingMatrix& f, const Poly& alpha) const {
    if (f.rows() != 4 || f.cols() != 4) throw Error(ErrorCode::DimensionMismatch, "expected a 4x4 endomorphism");
    require_same_ring(alpha.ring(), ring_);
    if (differential(mf_, mf_, f) != RingMatrix::scalar(ring_, 4, alpha))
        throw Error(ErrorCode::InvalidArgument, "precondition fails: delta(f) != alpha * Id");
    const auto [a, b, c, d] = f.blocks();
    const auto t = delta_u_preimage(d + a);
    const auto s = delta_u_preimage(c + b.scaled(poly("x")));
    require(t.has_value() && s.has_value(), "off-diagonal combinations lie in the image of delta_U");
    Obstruction ob{poly("x*y") * (at(*t) + poly("x^-1*y^-1") * at(*s)), poly("x*y") * (at(b) + poly("x^-1") * tr(b))};
    require(alpha == ob.c1 * dwx_ + ob.c2 * dwy_, "alpha = c1 dW/dx + c2 dW/dy");
    return ob;
}

std::pair<RingMatrix, Poly> Rp2Context::random_closed(std::uint64_t seed, int radius) const {
    std::mt19937_64 rng(seed);
    const auto alpha = random_canonical(ring_, rng);
    const auto g = random_matrix(ring_, rng, 4, Window::box(*ring_, radius), 0.3);
    return {RingMatrix::scalar(ring_, 4, alpha) + differential(mf_, mf_, g), alpha};
}

Report validate_alpha_rule(const Rp2Context& ctx, std::uint64_t seed, int samples) {
    Report rep("alpha rule", seed);
    const auto jac = laurent_jacobian_ideal(ctx.w());
    const auto order = TermOrder::lex(*jac.ring, {1, 0});
    const auto q = quotient(jac.ring, buchberger(jac.generators, order), order);
    if (!rep.check("jacobian-finite", !q.infinite() && q.dimension() == 3)) return rep;
    const auto mx = q.mult_matrix(0), my = q.mult_matrix(1);
    const auto mxi = mx.inverse(), myi = my.inverse();
    if (!rep.check("units", mxi.has_value() && myi.has_value(), "x and y invertible in Jac(W)")) return rep;
    const auto one = q.coordinates(Poly::one(jac.ring));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> e(-6, 6);
    int agree = 0;
    for (int i = 0; i < samples; ++i) {
        const int a = e(rng), b = e(rng);
        FieldVector v = one;
        for (int k = 0; k < std::abs(a); ++k) v = (a > 0 ? mx : *mxi).apply(v);
        for (int k = 0; k < std::abs(b); ++k) v = (b > 0 ? my : *myi).apply(v);
        Monomial m;
        m.e[0] = a;
        m.e[1] = b;
        const auto canon = ctx.canonical_alpha(Poly::term(ctx.ring(), m)).alpha;
        std::vector<Term> terms = canon.terms();
        agree += q.coordinates(Poly::from_terms(jac.ring, std::move(terms))) == v;
    }
    rep.check("alpha-rule", agree == samples, std::to_string(agree) + "/" + std::to_string(samples) + " monomials");
    return rep;
}

Report jacobian_report(const Poly& w) {
    Report rep("jacobian");
    const auto jac = laurent_jacobian_ideal(w);
    std::ostringstream gens;
    for (std::size_t i = 0; i < jac.generators.size(); ++i) gens << (i ? "; " : "") << jac.generators[i].to_string();
    rep.record("generators", jac.generators.empty() ? std::string("0") : gens.str());
    // Last variable most significant, so the staircase lives in the first ones.
    std::vector<int> vars(static_cast<std::size_t>(jac.ring->nvars()));
    for (int i = 0; i < jac.ring->nvars(); ++i) vars[static_cast<std::size_t>(i)] = jac.ring->nvars() - 1 - i;
    const auto order = TermOrder::lex(*jac.ring, vars);
    const auto q = quotient(jac.ring, buchberger(jac.generators, order), order);
    if (q.infinite()) {
        rep.record("dimension", "infinite");
        return rep;
    }
    std::ostringstream st;
    for (std::size_t i = 0; i < q.staircase().size(); ++i)
        st << (i ? ", " : "") << Poly::term(jac.ring, q.staircase()[i]).to_string();
    rep.record("dimension", static_cast<long long>(q.dimension()));
    rep.record("staircase", st.str());
    for (int v = 0; v < jac.ring->nvars(); ++v)
        rep.record("minpoly[" + jac.ring->var(v) + "]", minimal_polynomial(q.mult_matrix(v), jac.ring->var(v)).to_string());
    return rep;
}

Report closed_open_certify(std::uint64_t seed, const FieldSpec& field) {
    Report rep("closed-open map", seed);
    const Rp2Context ctx(field);
    const auto& q = ctx.q();
    const auto r = ctx.ring();

    rep.check("homotopy-identity", commutator(q.matrix(), ctx.m()) == ctx.f_alpha() + RingMatrix::scalar(r, 4, ctx.poly("x^-1")),
              "[Q,M] = F_alpha + x^-1 Id");

    // Well-defined: Jacobian-ideal multiples of Id are exact.
    bool welldef = true;
    for (int v = 0; v < 2; ++v) {
        const auto wit = jacobian_action_witness(Morphism::identity(q), v);
        welldef = welldef && wit.reverify() && wit.claim().matrix() == RingMatrix::scalar(r, 4, q.potential().partial(v));
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 5; ++i) {
        const auto c = random_poly(r, rng, Window::box(*r, 2), 0.3);
        const auto g = q.matrix().partial(0).scaled(c);
        welldef = welldef && differential(q, q, g) == RingMatrix::scalar(r, 4, c * ctx.dw_dx());
    }
    rep.check("well-defined", welldef, "c * dW/dz_i * Id = delta(c * dQ/dz_i)");

    const auto fa = ctx.reduce_endomorphism(ctx.f_alpha());
    rep.check("falpha", fa.alpha == ctx.poly("x^2") && fa.witness.reverify(), "F_alpha ~ " + describe(fa.alpha) + " Id");
    const auto f3 = ctx.f_alpha() * ctx.f_alpha() * ctx.f_alpha();
    const auto fa3 = ctx.reduce_endomorphism(f3);
    rep.check("falpha-cubed", fa3.alpha.is_one() && fa3.witness.reverify(), "F_alpha^3 ~ " + describe(fa3.alpha) + " Id");

    const int samples = 20;
    int surj = 0;
    for (int i = 0; i < samples; ++i) {
        const auto [f, alpha] = ctx.random_closed(seed + 100 + static_cast<std::uint64_t>(i));
        const auto res = ctx.reduce_endomorphism(f);
        surj += res.alpha == alpha && res.witness.reverify();
    }
    rep.check("surjective", surj == samples, std::to_string(surj) + "/" + std::to_string(samples) + " closed samples normalized");

    int comp = 0;
    for (int i = 0; i < 5; ++i) {
        const auto [f, a] = ctx.random_closed(seed + 200 + static_cast<std::uint64_t>(i), 1);
        const auto [g, b] = ctx.random_closed(seed + 300 + static_cast<std::uint64_t>(i), 1);
        comp += ctx.reduce_endomorphism(f * g).alpha == ctx.multiply_canonical(a, b);
    }
    rep.check("multiplicative", comp == 5, "reduce(f g) = reduce(f) reduce(g) on 5 pairs");

    // Injective, pointwise: Id, x Id, x^2 Id at the GF(4) critical points.
    const auto q2 = rp2_factorization(FieldSpec::gf2());
    const auto r2 = q2.ring();
    const Field& f4 = Field::get(FieldSpec::standard(2));
    const auto pts = critical_points(q2.potential(), f4);
    rep.check("critical-points", pts.size() == 3, std::to_string(pts.size()) + " points over GF(4)");
    std::vector<Morphism> classes;
    for (const char* c : {"1", "x", "x^2"})
        classes.emplace_back(q2, q2, RingMatrix::scalar(r2, 4, Poly::parse(c, r2)));
    std::vector<LocalCohomologyReport> locals;
    std::size_t width = 0;
    bool id_nonexact = true;
    for (const auto& p : pts) {
        locals.push_back(certify_at_point(q2, q2, p, classes));
        width += locals.back().local_dim;
        const auto& c = locals.back().class_coordinates[0];
        id_nonexact = id_nonexact && std::any_of(c.begin(), c.end(), [](auto v) { return v != 0; });
    }
    rep.check("id-nonexact", id_nonexact && !pts.empty(), "Id has nonzero local class at each critical point");
    FieldMatrix eval(f4, 3, width);
    std::size_t off = 0;
    for (const auto& l : locals) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < l.local_dim; ++k) eval.set(i, off + k, l.class_coordinates[i][k]);
        off += l.local_dim;
    }
    rep.check("injective-points", eval.rank() == 3, "rank " + std::to_string(eval.rank()) + " for {Id, x Id, x^2 Id}");

    // Injective, algebraic: any exact alpha*Id decomposes into the Jacobian ideal.
    int obs = 0;
    for (int i = 0; i < 5; ++i) {
        const auto c1 = random_poly(r, rng, Window::box(*r, 1), 0.4);
        const auto c2 = random_poly(r, rng, Window::box(*r, 1), 0.4);
        const auto [closed, unused] = ctx.random_closed(seed + 400 + static_cast<std::uint64_t>(i), 1);
        (void)unused;
        const auto f = q.matrix().partial(0).scaled(c1) + q.matrix().partial(1).scaled(c2) +
                       (closed + RingMatrix::scalar(r, 4, ctx.reduce_endomorphism(closed).alpha));
        const auto alpha = c1 * ctx.dw_dx() + c2 * ctx.dw_dy();
        try {
            const auto ob = ctx.obstruction_decomposition(f, alpha);
            obs += alpha == ob.c1 * ctx.dw_dx() + ob.c2 * ctx.dw_dy();
        } catch (const Error&) {
        }
    }
    rep.check("injective-obstruction", obs == 5, std::to_string(obs) + "/5 exact scalars decomposed");

    const auto h = cohomology_dims(q, q, 6);
    bool three = true;
    std::ostringstream hs;
    for (int d = 2; d <= 6; ++d) {
        three = three && h[static_cast<std::size_t>(d - 1)] == 3;
        hs << (d > 2 ? "," : "") << h[static_cast<std::size_t>(d - 1)];
        rep.record("h[" + std::to_string(d) + "]", static_cast<long long>(h[static_cast<std::size_t>(d - 1)]));
    }
    rep.check("window-dims", three, "h_2..h_6 = " + hs.str());

    const auto jac = jacobian_report(q.potential());
    bool jac_ok = false;
    for (const auto& [k, v] : jac.records())
        if (k == "minpoly[x]") jac_ok = v == "x^3 + 1";
    for (const auto& [k, v] : jac.records())
        if (k == "dimension") jac_ok = jac_ok && v == "3";
    rep.check("jacobian", jac_ok, "dim Jac(W) = 3, minimal polynomial of x = x^3 + 1");
    rep.record("dimension", rep.ok() ? "3" : "unknown");
    return rep;
}

Report an_corpus(int n, std::uint64_t seed) {
    const std::string id = "an" + std::to_string(n);
    Report rep("A_" + std::to_string(2 * n - 1) + " corpus", seed);
    const auto q = an_q(n);
    const auto r = an_r(n);
    rep.check(id + ".q", verify_mf(q.matrix(), q.potential()).ok, "Q^2 = (x^" + std::to_string(2 * n) + " + y^2 + xyz) Id");
    rep.check(id + ".r", verify_mf(r.matrix(), r.potential()).ok, "R^2 = (x^" + std::to_string(2 * n) + " + y^2) Id");

    const auto j = RingMatrix::parse("0, 1; 1, 0", r.ring());
    rep.check(id + ".j", is_closed(Morphism(r, r, j)) && j * j == RingMatrix::identity(r.ring(), 2), "J closed, J^2 = Id");

    const auto qr = q.ring();
    const bool xz_closed = is_closed(Morphism(q, q, RingMatrix::scalar(qr, 2, Poly::parse("x", qr)))) &&
                           is_closed(Morphism(q, q, RingMatrix::scalar(qr, 2, Poly::parse("z", qr))));
    rep.check(id + ".closed", xz_closed, "x Id and z Id closed for Q");
    rep.check(id + ".xz-exact",
              differential(q, q, q.matrix().partial(1)) == RingMatrix::scalar(qr, 2, Poly::parse("x*z", qr)),
              "xz Id = delta(dQ/dy)");

    const auto jq = laurent_jacobian_ideal(q.potential());
    const auto& jring = jq.ring;
    const auto want = buchberger({Poly::parse("y*z", jring), Poly::parse("x*z", jring), Poly::parse("x*y", jring)},
                                 TermOrder::grevlex(*jring));
    rep.check(id + ".jac-q", jq.generators == want &&
                                 quotient(jq.ring, jq.generators, TermOrder::grevlex(*jq.ring)).infinite(),
              "Jac ideal (yz, xz, xy), infinite quotient");
    const auto jr = laurent_jacobian_ideal(r.potential());
    rep.check(id + ".jac-r", jr.generators.empty(), "Jac ideal of W0 is zero");

    const auto h = cohomology_dims(r, r, 5);
    bool grows = true;
    std::ostringstream hs;
    for (std::size_t d = 1; d < h.size(); ++d) {
        grows = grows && (d < 2 || h[d] > h[d - 1]);
        hs << (d > 1 ? "," : "") << h[d];
    }
    rep.check(id + ".growth", grows, "End(R) window dims h_2..h_5 = " + hs.str());
    return rep;
}

RingMatrix random_vf_traceless(const Rp2Context& ctx, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto r = ctx.ring();
    const Window in = Window::box(*r, 2);
    Monomial lo, hi;
    lo.e[0] = lo.e[1] = -1;
    hi.e[0] = hi.e[1] = 1;
    const Window out = in.expanded(lo, hi);
    const std::size_t s = in.size(), so = out.size();
    FieldMatrix lin(r->field(), 2 * so, 4 * s);
    for (std::size_t e = 0; e < 4; ++e)
        for (std::size_t k = 0; k < s; ++k) {
            RingMatrix f(r, 2, 2);
            f(e / 2, e % 2) = Poly::term(r, in.monomial(k));
            const auto vf = ctx.v() * f;
            const Poly parts[2] = {tr(vf), at(vf)};
            for (std::size_t p = 0; p < 2; ++p)
                for (const auto& t : parts[p].terms()) lin.accumulate(p * so + out.index_of(t.mono), e * s + k, t.coeff);
        }
    const auto ker = lin.kernel_basis();
    std::uniform_int_distribution<std::uint32_t> coeff(0, r->field().order() - 1);
    FieldVector mix(4 * s, 0);
    for (const auto& v : ker) {
        const auto c = coeff(rng);
        for (std::size_t i = 0; i < v.size(); ++i) mix[i] ^= r->field().mul(c, v[i]);
    }
    RingMatrix f(r, 2, 2);
    for (std::size_t e = 0; e < 4; ++e) {
        std::vector<Term> terms;
        for (std::size_t k = 0; k < s; ++k)
            if (mix[e * s + k]) terms.push_back({in.monomial(k), mix[e * s + k]});
        f(e / 2, e % 2) = Poly::from_terms(r, std::move(terms));
    }
    return f;
}

Report run_suite(std::uint64_t seed, const FieldSpec& field) {
    Report rep("suite", seed);
    rep.record("field", field.to_string());
    const Rp2Context ctx(field);
    const auto r = ctx.ring();
    const auto& u = ctx.u();
    const auto& v = ctx.v();
    const auto id2 = RingMatrix::identity(r, 2);

    rep.check("rp2.verify", verify_mf(ctx.q().matrix(), ctx.w()).ok, "Q^2 = W Id");
    rep.check("euler", euler_identity_check(ctx.q(), 0).holds && euler_identity_check(ctx.q(), 1).holds,
              "dQ Q + Q dQ = dW Id");
    rep.check("blocks.squares", u * u == id2.scaled(ctx.poly("y")) && v * v == id2.scaled(ctx.dw_dx()),
              "U^2 = y Id, V^2 = (1 + x^-2 y^-1) Id");
    rep.check("blocks.uv", u * v == v * u && u * v == id2.scaled(ctx.poly("x^-1")) + u, "UV = VU = x^-1 Id + U");

    std::mt19937_64 rng(seed);
    const Window w2 = Window::box(*r, 2);
    int formula = 0, acyclic = 0, traces_ok = 0, kernel_ok = 0;
    for (int i = 0; i < 50; ++i) {
        const auto f = random_matrix(r, rng, 2, w2, 0.3);
        const auto d = ctx.delta_u(f);
        formula += d == RingMatrix::from_rows(r, {{at(f), tr(f)}, {ctx.poly("y") * tr(f), at(f)}});
        const auto pre = ctx.delta_u_preimage(d);
        acyclic += pre.has_value() && ctx.delta_u(*pre) == d;
    }
    rep.check("blocks.delta-u", formula == 50, std::to_string(formula) + "/50 random F");
    rep.check("blocks.acyclic", acyclic == 50, std::to_string(acyclic) + "/50 preimages");
    for (int i = 0; i < 100; ++i) traces_ok += ctx.trace_identities_check(random_matrix(r, rng, 2, w2, 0.3)).ok();
    rep.check("trace-identities", traces_ok == 100, std::to_string(traces_ok) + "/100 random F");
    for (int i = 0; i < 20; ++i) {
        const auto f = random_vf_traceless(ctx, rng());
        kernel_ok += tr(f).is_zero() && at(f).is_zero() && ctx.delta_u(f).is_zero();
    }
    rep.check("vf-kernel", kernel_ok == 20, std::to_string(kernel_ok) + "/20 kernel samples commute with U");

    int dec = 0;
    for (int i = 0; i < 10; ++i) {
        const auto [f, alpha] = ctx.random_closed(seed + 1000 + static_cast<std::uint64_t>(i));
        (void)alpha;
        dec += ctx.decompose_closed(f).reassemble(ctx) == f;
    }
    rep.check("closed-decomposition", dec == 10, std::to_string(dec) + "/10 closed samples");

    rep.merge(validate_alpha_rule(ctx, seed));
    rep.merge(closed_open_certify(seed, field));
    for (int n = 1; n <= 4; ++n) rep.merge(an_corpus(n, seed));
    return rep;
}

}  // namespace umf
