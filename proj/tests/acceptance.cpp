// One line per acceptance criterion: PASS/FAIL, elapsed time against its limit.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "umf/cohomwin.hpp"
#include "umf/error.hpp"
#include "umf/groebner.hpp"
#include "umf/corpus.hpp"

using namespace umf;

namespace {

constexpr std::uint64_t kSeed = 1729;

struct Outcome {
    bool pass = true;
    std::string note;
    void expect(bool cond, const std::string& what) {
        if (!cond && pass) note = what;
        pass = pass && cond;
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > limit_s) out.expect(false, "over time limit");
    failures += !out.pass;
    std::printf("%s criterion %d: %s (%.3fs / %.0fs)%s%s\n", out.pass ? "PASS" : "FAIL", id, name, secs, limit_s,
                out.note.empty() ? "" : " - ", out.note.c_str());
    std::fflush(stdout);
}

Poly random_poly(const RingPtr& r, std::mt19937_64& rng, int lo, int hi, double density) {
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<std::uint32_t> coeff(1, r->field().order() - 1);
    std::vector<Term> terms;
    for (int a = lo; a <= hi; ++a)
        for (int b = lo; b <= hi; ++b)
            if (keep(rng)) {
                Monomial m;
                m.e[0] = a;
                m.e[1] = b;
                if (r->admits(m)) terms.push_back({m, coeff(rng)});
            }
    return Poly::from_terms(r, std::move(terms));
}

RingMatrix random_matrix(const RingPtr& r, std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo,
                         int hi, double density = 0.3) {
    RingMatrix m(r, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_poly(r, rng, lo, hi, density);
    return m;
}

// Oracle: Q^2 by explicit product.
bool squares_to(const UngradedMF& q) {
    const auto& m = q.matrix();
    return m * m == RingMatrix::scalar(q.ring(), q.size(), q.potential());
}

}  // namespace

int main() {
    const Rp2Context ctx;
    const auto r = ctx.ring();
    const auto& q = ctx.q();

    criterion(1, "factorization verification", 1, [&](Outcome& o) {
        o.expect(verify_mf(q.matrix(), q.potential()).ok && squares_to(q), "RP^2");
        for (int n = 1; n <= 4; ++n) {
            const auto qn = an_q(n), rn = an_r(n);
            o.expect(verify_mf(qn.matrix(), qn.potential()).ok && squares_to(qn), "Q(" + std::to_string(n) + ")");
            o.expect(verify_mf(rn.matrix(), rn.potential()).ok && squares_to(rn), "R(" + std::to_string(n) + ")");
        }
    });

    criterion(2, "2x2 block identities", 5, [&](Outcome& o) {
        const auto id2 = RingMatrix::identity(r, 2);
        const auto& u = ctx.u();
        const auto& v = ctx.v();
        o.expect(u * u == id2.scaled(ctx.poly("y")), "U^2");
        o.expect(v * v == id2.scaled(ctx.poly("1 + x^-2*y^-1")), "V^2");
        o.expect(u * v == v * u && u * v == id2.scaled(ctx.poly("x^-1")) + u, "UV");
        std::mt19937_64 rng(kSeed);
        for (int i = 0; i < 100; ++i) {
            const auto f = random_matrix(r, rng, 2, 2, -2, 2);
            const auto d = u * f + f * u;
            const Poly a = f(0, 0), b = f(0, 1), c = f(1, 0), e = f(1, 1);
            const Poly trf = a + e, atf = ctx.poly("y") * b + c;
            o.expect(ctx.delta_u(f) == d, "delta_U");
            o.expect(d == RingMatrix::from_rows(r, {{atf, trf}, {ctx.poly("y") * trf, atf}}), "delta_U formula");
            const auto pre = ctx.delta_u_preimage(d);
            o.expect(pre && u * *pre + *pre * u == d, "acyclicity");
        }
        for (int i = 0; i < 100; ++i) o.expect(ctx.trace_identities_check(random_matrix(r, rng, 2, 2, -2, 2)).ok(), "traces");
    });

    criterion(3, "Jacobian ring dimension and minimal polynomial", 5, [&](Outcome& o) {
        const auto jac = laurent_jacobian_ideal(ctx.w());
        const auto order = TermOrder::lex(*jac.ring, {1, 0});
        const auto qr = quotient(jac.ring, buchberger(jac.generators, order), order);
        o.expect(!qr.infinite() && qr.dimension() == 3, "dimension");
        if (!qr.infinite()) {
            const auto mp = minimal_polynomial(qr.mult_matrix(0), "x");
            o.expect(mp.to_string() == "x^3 + 1", "minimal polynomial " + mp.to_string());
            // Oracle: M_x^3 = Id and no lower-degree relation (dimension 3, cyclic).
            const auto& mx = qr.mult_matrix(0);
            o.expect(mx * mx * mx == FieldMatrix::identity(mx.field(), 3), "M_x^3");
        }
    });

    criterion(4, "normalization of random closed endomorphisms", 60, [&](Outcome& o) {
        std::mt19937_64 rng(kSeed + 4);
        std::uniform_int_distribution<int> bit(0, 1);
        for (int i = 0; i < 100; ++i) {
            Poly alpha(r);
            for (int e = 0; e < 3; ++e)
                if (bit(rng)) alpha += Poly::var(r, 0, e);
            const auto g = random_matrix(r, rng, 4, 4, -2, 2);
            const auto f = RingMatrix::scalar(r, 4, alpha) + differential(q, q, g);
            const auto res = ctx.reduce_endomorphism(f);
            o.expect(res.alpha == alpha, "alpha mismatch at sample " + std::to_string(i));
            o.expect(res.witness.reverify(), "witness");
            o.expect(differential(q, q, res.witness.g()) == f + RingMatrix::scalar(r, 4, res.alpha), "delta(g)");
        }
    });

    criterion(5, "exactness obstruction on Euler instances", 5, [&](Outcome& o) {
        for (int v = 0; v < 2; ++v) {
            const auto dw = v == 0 ? ctx.poly("1 + x^-2*y^-1") : ctx.poly("1 + x^-1*y^-2");
            const auto ob = ctx.obstruction_decomposition(q.matrix().partial(v), dw);
            o.expect(dw == ob.c1 * ctx.poly("1 + x^-2*y^-1") + ob.c2 * ctx.poly("1 + x^-1*y^-2"), "decomposition");
        }
    });

    criterion(6, "support certification over GF(4)", 10, [&](Outcome& o) {
        const Field& f4 = Field::get(FieldSpec::standard(2));
        const auto pts = critical_points(q.potential(), f4);
        // Oracle: brute force over (GF(4)^*)^2.
        std::set<std::pair<std::uint32_t, std::uint32_t>> want, got;
        std::vector<std::vector<FieldElem>> regular;
        for (std::uint32_t a = 1; a < 4; ++a)
            for (std::uint32_t b = 1; b < 4; ++b) {
                const std::vector<FieldElem> p{f4.elem(a), f4.elem(b)};
                if (q.potential().partial(0).evaluate(p).is_zero() && q.potential().partial(1).evaluate(p).is_zero())
                    want.insert({a, b});
                else
                    regular.push_back(p);
            }
        for (const auto& p : pts) got.insert({p[0].value(), p[1].value()});
        o.expect(pts.size() == 3 && got == want, "critical set");
        for (const auto& p : pts) {
            o.expect(p[0] == p[1] && p[0].pow(3).is_one(), "x = y = cube root of unity");
            const auto l = certify_at_point(q, q, p, {Morphism::identity(q)});
            o.expect(l.local_dim > 0, "local cohomology nonzero");
            const auto& c = l.class_coordinates[0];
            o.expect(std::any_of(c.begin(), c.end(), [](auto x) { return x != 0; }), "Id non-exact");
        }
        std::mt19937_64 rng(kSeed + 6);
        std::shuffle(regular.begin(), regular.end(), rng);
        for (std::size_t i = 0; i < 5 && i < regular.size(); ++i) {
            const auto& p = regular[i];
            o.expect(certify_at_point(q, q, p, {Morphism::identity(q)}).local_dim == 0, "regular point acyclic");
            const int var = q.potential().partial(0).evaluate(p).is_zero() ? 1 : 0;
            const auto h = contract_at_noncritical(q, p, var);
            const auto qp = q.matrix().specialize(p);
            o.expect(qp * h + h * qp == FieldMatrix::identity(f4, 4), "contraction");
        }
        std::vector<Morphism> classes;
        for (const char* c : {"1", "x", "x^2"}) classes.emplace_back(q, q, RingMatrix::scalar(r, 4, ctx.poly(c)));
        std::vector<LocalCohomologyReport> locals;
        std::size_t width = 0;
        for (const auto& p : pts) {
            locals.push_back(certify_at_point(q, q, p, classes));
            width += locals.back().local_dim;
        }
        FieldMatrix eval(f4, 3, width);
        std::size_t off = 0;
        for (const auto& l : locals) {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t k = 0; k < l.local_dim; ++k) eval.set(i, off + k, l.class_coordinates[i][k]);
            off += l.local_dim;
        }
        o.expect(eval.rank() == 3, "evaluation rank " + std::to_string(eval.rank()));
    });

    criterion(7, "window cohomology dimensions", 120, [&](Outcome& o) {
        const auto h = cohomology_dims(q, q, 6);
        for (int d = 2; d <= 6; ++d) o.expect(h[static_cast<std::size_t>(d - 1)] == 3, "RP^2 h_d != 3");
        const auto rp = Ring::polynomial(FieldSpec::gf2(), {"x", "y"});
        const UngradedMF line(Poly::parse("x^2 + y^2", rp), RingMatrix::parse("x + y", rp));
        const auto r1 = an_r(1);
        for (const auto* x : {&line, &r1}) {
            const auto hx = cohomology_dims(*x, *x, 6);
            for (std::size_t d = 2; d < 6; ++d) o.expect(hx[d] > hx[d - 1], "growth");
        }
    });

    criterion(8, "homotopy identity and F_alpha normalization", 10, [&](Outcome& o) {
        const auto& m = ctx.m();
        o.expect(q.matrix() * m + m * q.matrix() == ctx.f_alpha() + RingMatrix::scalar(r, 4, ctx.poly("x^-1")),
                 "[Q,M]");
        o.expect(ctx.reduce_endomorphism(ctx.f_alpha()).alpha == ctx.poly("x^2"), "F_alpha");
        const auto f3 = ctx.f_alpha() * ctx.f_alpha() * ctx.f_alpha();
        o.expect(ctx.reduce_endomorphism(f3).alpha.is_one(), "F_alpha^3");
    });

    criterion(9, "doubling, forgetting and adjunction round trips", 10, [&](Outcome& o) {
        const auto rp = Ring::polynomial(FieldSpec::gf2(), {"x", "y"});
        const UngradedMF y(Poly::parse("x^2 + y^2", rp), RingMatrix::parse("x, y; y, x", rp));
        const GradedMF x = double_mf(y);
        const UngradedMF fx = forget(x);
        o.expect(x.q0() == y.matrix() && x.q1() == y.matrix(), "double");
        o.expect(fx.size() == 2 * y.size() && verify_mf(fx.matrix(), fx.potential()).ok, "forget");
        const auto dq = forget(double_mf(q));
        o.expect(dq.size() == 8 && squares_to(dq), "forget(double(Q_RP2))");
        std::mt19937_64 rng(kSeed + 9);
        for (int i = 0; i < 20; ++i)
            for (auto dir : {Adjunction::ForgetDouble, Adjunction::DoubleForget}) {
                const bool fd = dir == Adjunction::ForgetDouble;
                const auto mat = fd ? random_matrix(rp, rng, 2, 4, 0, 2) : random_matrix(rp, rng, 4, 2, 0, 2);
                const Morphism phi = fd ? Morphism(fx, y, mat) : Morphism(y, fx, mat);
                for (auto parity : {Parity::Even, Parity::Odd}) {
                    const auto g = adjunction_transport(dir, x, y, phi, parity);
                    Parity seen;
                    o.expect(adjunction_untransport(dir, x, y, g, &seen).matrix() == phi.matrix() && seen == parity,
                             "round trip");
                    const Parity flip = parity == Parity::Even ? Parity::Odd : Parity::Even;
                    o.expect(differential(g).matrix() == adjunction_transport(dir, x, y, differential(phi), flip).matrix(),
                             "intertwining");
                }
            }
    });

    criterion(10, "factorization search", 30, [&](Outcome& o) {
        const auto rp = Ring::polynomial(FieldSpec::gf2(), {"x", "y"});
        const auto w = Poly::parse("x^2 + y^2", rp);
        Monomial mx, my;
        mx.e[0] = 1;
        my.e[1] = 1;
        const auto r1 = search_factorizations(w, 1, {mx, my});
        o.expect(r1.size() == 1 && r1[0] == RingMatrix::parse("x + y", rp), "size 1");
        const auto r2 = search_factorizations(w, 2, {mx, my});
        o.expect(std::find(r2.begin(), r2.end(), RingMatrix::parse("x, y; y, x", rp)) != r2.end(), "size 2");
        for (const auto& m : r1) o.expect(m * m == RingMatrix::scalar(rp, 1, w), "verify");
        for (const auto& m : r2) o.expect(m * m == RingMatrix::scalar(rp, 2, w), "verify");
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures ? 1 : 0;
}
