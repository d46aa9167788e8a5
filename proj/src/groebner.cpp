#include "umf/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "umf/error.hpp"

namespace umf {

namespace {

std::vector<int> default_vars(const Ring& ring, std::vector<int> vars) {
    if (vars.empty()) {
        vars.resize(static_cast<std::size_t>(ring.nvars()));
        std::iota(vars.begin(), vars.end(), 0);
    }
    auto sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (static_cast<int>(sorted.size()) != ring.nvars() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= ring.nvars())))
        throw Error(ErrorCode::InvalidArgument, "term order must list every variable once");
    return vars;
}

}  // namespace

TermOrder::TermOrder(Kind kind, std::vector<int> vars, std::size_t block)
    : kind_(kind), vars_(std::move(vars)), block_(block) {}

TermOrder TermOrder::lex(const Ring& ring, std::vector<int> vars) {
    return TermOrder(Kind::Lex, default_vars(ring, std::move(vars)), 0);
}

TermOrder TermOrder::grevlex(const Ring& ring, std::vector<int> vars) {
    return TermOrder(Kind::Grevlex, default_vars(ring, std::move(vars)), 0);
}

TermOrder TermOrder::elimination(const Ring& ring, std::size_t block, std::vector<int> vars) {
    auto v = default_vars(ring, std::move(vars));
    if (block > v.size()) throw Error(ErrorCode::InvalidArgument, "elimination block larger than variable count");
    return TermOrder(Kind::Elimination, std::move(v), block);
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, const std::vector<int>& vars, std::size_t lo,
                  std::size_t hi) noexcept {
    std::int64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.e[vars[i]];
        db += b.e[vars[i]];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        const int v = vars[i];
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind_) {
        case Kind::Lex:
            for (int v : vars_)
                if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
            return 0;
        case Kind::Grevlex:
            return grevlex_range(a, b, vars_, 0, vars_.size());
        case Kind::Elimination:
            if (int c = grevlex_range(a, b, vars_, 0, block_)) return c;
            return grevlex_range(a, b, vars_, block_, vars_.size());
    }
    return 0;
}

std::string TermOrder::to_string() const {
    std::ostringstream os;
    os << (kind_ == Kind::Lex ? "lex" : kind_ == Kind::Grevlex ? "grevlex" : "elimination") << '(';
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (kind_ == Kind::Elimination && i == block_ && i) os << " |";
        os << (i ? " " : "") << vars_[i];
    }
    os << ')';
    return os.str();
}

namespace {

using Terms = std::vector<Term>;

// Polynomial whose terms are sorted descending under a TermOrder.
struct Ordered {
    Terms t;
    bool zero() const { return t.empty(); }
    const Term& lt() const { return t.front(); }
};

void require_polynomial_ring(const Ring& ring) {
    if (ring.any_laurent()) throw Error(ErrorCode::InvalidArgument, "clear denominators first");
}

Ordered ordered(const Poly& p, const TermOrder& order) {
    Ordered o{p.terms()};
    std::sort(o.t.begin(), o.t.end(), [&](const Term& a, const Term& b) { return order.less(b.mono, a.mono); });
    return o;
}

Poly unordered(const RingPtr& ring, const Ordered& o) { return Poly::from_terms(ring, o.t); }

// a + c * m * g
Ordered add_multiple(const Ordered& a, const Ordered& g, std::uint32_t c, const Monomial& m, const Field& f,
                     const TermOrder& order) {
    Terms out;
    out.reserve(a.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() || j < g.t.size()) {
        if (j == g.t.size()) {
            out.push_back(a.t[i++]);
            continue;
        }
        const Term gt{m * g.t[j].mono, f.mul(c, g.t[j].coeff)};
        const int cmp = i == a.t.size() ? -1 : order.compare(a.t[i].mono, gt.mono);
        if (cmp > 0) {
            out.push_back(a.t[i++]);
        } else if (cmp < 0) {
            out.push_back(gt);
            ++j;
        } else {
            if (auto s = a.t[i].coeff ^ gt.coeff) out.push_back({gt.mono, s});
            ++i;
            ++j;
        }
    }
    return {std::move(out)};
}

Ordered monic(Ordered p, const Field& f) {
    if (p.zero() || p.lt().coeff == 1) return p;
    const auto inv = f.inv(p.lt().coeff);
    for (auto& t : p.t) t.coeff = f.mul(t.coeff, inv);
    return p;
}

Ordered reduce_full(Ordered p, const std::vector<Ordered>& divisors, const Field& f, const TermOrder& order) {
    Terms rem;
    while (!p.zero()) {
        const Term lt = p.lt();
        const Ordered* div = nullptr;
        for (const auto& g : divisors)
            if (!g.zero() && g.lt().mono.divides(lt.mono)) {
                div = &g;
                break;
            }
        if (div) {
            const auto c = f.mul(lt.coeff, f.inv(div->lt().coeff));
            p = add_multiple(p, *div, c, lt.mono / div->lt().mono, f, order);
        } else {
            rem.push_back(lt);
            p.t.erase(p.t.begin());
        }
    }
    return {std::move(rem)};
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

Ordered spoly(const Ordered& f, const Ordered& g, const Field& fld, const TermOrder& order) {
    const auto l = lcm(f.lt().mono, g.lt().mono);
    const Ordered a = add_multiple({}, f, fld.inv(f.lt().coeff), l / f.lt().mono, fld, order);
    return add_multiple(a, g, fld.inv(g.lt().coeff), l / g.lt().mono, fld, order);
}

}  // namespace

Term leading_term(const Poly& p, const TermOrder& order) {
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "leading term of zero polynomial");
    const Term* best = &p.terms().front();
    for (const auto& t : p.terms())
        if (order.less(best->mono, t.mono)) best = &t;
    return *best;
}

Poly s_polynomial(const Poly& f, const Poly& g, const TermOrder& order) {
    require_same_ring(f.ring(), g.ring());
    if (f.is_zero() || g.is_zero()) return Poly::zero(f.ring());
    return unordered(f.ring(), spoly(ordered(f, order), ordered(g, order), f.ring()->field(), order));
}

Poly normal_form(const Poly& p, const std::vector<Poly>& divisors, const TermOrder& order) {
    require_polynomial_ring(*p.ring());
    std::vector<Ordered> divs;
    for (const auto& g : divisors) {
        require_same_ring(p.ring(), g.ring());
        divs.push_back(ordered(g, order));
    }
    return unordered(p.ring(), reduce_full(ordered(p, order), divs, p.ring()->field(), order));
}

std::vector<Poly> buchberger(const std::vector<Poly>& gens, const TermOrder& order) {
    if (gens.empty()) return {};
    const RingPtr ring = gens.front().ring();
    require_polynomial_ring(*ring);
    const Field& f = ring->field();

    std::vector<Ordered> g;
    for (const auto& p : gens) {
        require_same_ring(ring, p.ring());
        if (!p.is_zero()) g.push_back(monic(ordered(p, order), f));
    }

    struct Pair {
        std::size_t i, j;
        std::int64_t degree;
        std::size_t seq;
    };
    std::vector<Pair> pairs;
    std::size_t seq = 0;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pairs.push_back({i, j, lcm(g[i].lt().mono, g[j].lt().mono).degree(), seq++});
    };
    for (std::size_t j = 1; j < g.size(); ++j) add_pairs(j);

    while (!pairs.empty()) {
        // Normal strategy: lowest lcm degree, then insertion order.
        auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            return a.degree != b.degree ? a.degree < b.degree : a.seq < b.seq;
        });
        const Pair p = *it;
        pairs.erase(it);
        if (coprime(g[p.i].lt().mono, g[p.j].lt().mono)) continue;
        auto r = reduce_full(spoly(g[p.i], g[p.j], f, order), g, f, order);
        if (r.zero()) continue;
        g.push_back(monic(std::move(r), f));
        add_pairs(g.size() - 1);
    }

    // Minimal basis, then interreduce.
    std::vector<Ordered> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j || !g[j].lt().mono.divides(g[i].lt().mono)) continue;
            redundant = g[j].lt().mono != g[i].lt().mono || j < i;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<Ordered> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Ordered> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(monic(reduce_full(minimal[i], others, f, order), f));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Ordered& a, const Ordered& b) { return order.less(a.lt().mono, b.lt().mono); });
    std::vector<Poly> out;
    for (const auto& r : reduced) out.push_back(unordered(ring, r));
    return out;
}

JacobianIdeal laurent_jacobian_ideal(const Poly& w) {
    const Ring& src = *w.ring();
    JacobianIdeal out;
    out.ring = src.polynomial_part();
    const int n = src.nvars();
    if (n + 1 > kMaxVars) throw Error(ErrorCode::InvalidArgument, "too many variables for saturation");

    for (int i = 0; i < n; ++i) {
        const Poly d = w.partial(i);
        if (d.is_zero()) continue;
        Monomial shift;
        const auto lo = d.min_exponents();
        for (int v = 0; v < n; ++v) shift.e[v] = std::max(0, -lo.e[v]);
        std::vector<Term> terms;
        for (const auto& t : d.terms()) terms.push_back({t.mono * shift, t.coeff});
        out.cleared.push_back(Poly::from_terms(out.ring, std::move(terms)));
    }
    const auto grev = TermOrder::grevlex(*out.ring);
    if (out.cleared.empty() || !src.any_laurent()) {
        out.generators = buchberger(out.cleared, grev);
        return out;
    }

    // Adjoin t with t * prod(Laurent vars) + 1 and eliminate t.
    std::string tname = "t";
    while (src.index_of(tname)) tname += "_";
    std::vector<std::string> vars{tname};
    vars.insert(vars.end(), src.vars().begin(), src.vars().end());
    const auto ext = Ring::polynomial(src.field_spec(), vars);
    auto lift = [&](const Poly& p) {
        std::vector<Term> terms;
        for (const auto& t : p.terms()) {
            Term u{Monomial{}, t.coeff};
            for (int v = 0; v < n; ++v) u.mono.e[v + 1] = t.mono.e[v];
            terms.push_back(u);
        }
        return Poly::from_terms(ext, std::move(terms));
    };
    std::vector<Poly> gens;
    for (const auto& c : out.cleared) gens.push_back(lift(c));
    Monomial tz;
    tz.e[0] = 1;
    for (int v = 0; v < n; ++v)
        if (src.is_laurent(v)) tz.e[v + 1] = 1;
    gens.push_back(Poly::term(ext, tz) + Poly::one(ext));

    std::vector<Poly> kept;
    for (const auto& g : buchberger(gens, TermOrder::elimination(*ext, 1))) {
        if (g.max_exponents().e[0] != 0) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            Term u{Monomial{}, t.coeff};
            for (int v = 0; v < n; ++v) u.mono.e[v] = t.mono.e[v + 1];
            terms.push_back(u);
        }
        kept.push_back(Poly::from_terms(out.ring, std::move(terms)));
    }
    out.generators = buchberger(kept, grev);
    return out;
}

QuotientRing::QuotientRing(RingPtr ring, std::vector<Poly> gb, TermOrder order)
    : ring_(std::move(ring)), gb_(std::move(gb)), order_(std::move(order)) {
    require_polynomial_ring(*ring_);
    const int n = ring_->nvars();
    std::vector<Monomial> leads;
    for (const auto& g : gb_) {
        require_same_ring(ring_, g.ring());
        if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero element in Groebner basis");
        leads.push_back(leading_term(g, order_).mono);
    }
    const bool unit = std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); });

    // Pure-power bound per variable.
    std::vector<int> bound(static_cast<std::size_t>(n), -1);
    for (const auto& m : leads)
        for (int v = 0; v < n; ++v) {
            bool pure = m.e[v] > 0;
            for (int u = 0; u < n && pure; ++u) pure = u == v || m.e[u] == 0;
            if (pure && (bound[v] < 0 || m.e[v] < bound[v])) bound[v] = m.e[v];
        }
    infinite_ = !unit && std::any_of(bound.begin(), bound.end(), [](int b) { return b < 0; });
    if (infinite_) return;

    if (!unit) {
        double box = 1;
        for (int b : bound) box *= b;
        if (box > 1e7) throw Error(ErrorCode::BudgetExceeded, "staircase enumeration exceeds budget");
        Monomial m;
        while (true) {
            if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); }))
                staircase_.push_back(m);
            int v = n - 1;
            while (v >= 0 && ++m.e[v] == bound[v]) m.e[v--] = 0;
            if (v < 0) break;
        }
        std::sort(staircase_.begin(), staircase_.end(),
                  [&](const Monomial& a, const Monomial& b) { return order_.less(a, b); });
    }

    const std::size_t d = staircase_.size();
    for (int v = 0; v < n; ++v) {
        FieldMatrix m(ring_->field(), d, d);
        for (std::size_t j = 0; j < d; ++j) {
            const auto c = coordinates(Poly::term(ring_, staircase_[j]) * Poly::var(ring_, v));
            for (std::size_t i = 0; i < d; ++i) m.set(i, j, c[i]);
        }
        mult_.push_back(std::move(m));
    }
}

std::size_t QuotientRing::dimension() const { return staircase().size(); }

const std::vector<Monomial>& QuotientRing::staircase() const {
    if (infinite_) throw Error(ErrorCode::InvalidArgument, "quotient ring is infinite-dimensional");
    return staircase_;
}

const FieldMatrix& QuotientRing::mult_matrix(int var) const {
    if (infinite_) throw Error(ErrorCode::InvalidArgument, "quotient ring is infinite-dimensional");
    return mult_.at(static_cast<std::size_t>(var));
}

Poly QuotientRing::normal_form(const Poly& p) const { return umf::normal_form(p, gb_, order_); }

FieldVector QuotientRing::coordinates(const Poly& p) const {
    const auto& basis = staircase();
    FieldVector c(basis.size(), 0);
    const Poly nf = normal_form(p);
    for (const auto& t : nf.terms()) {
        const auto it = std::find(basis.begin(), basis.end(), t.mono);
        if (it == basis.end()) throw Error(ErrorCode::Invariant, "normal form leaves the staircase");
        c[static_cast<std::size_t>(it - basis.begin())] = t.coeff;
    }
    return c;
}

QuotientRing quotient(const RingPtr& ring, const std::vector<Poly>& gb, const TermOrder& order) {
    return QuotientRing(ring, gb, order);
}

Poly minimal_polynomial(const FieldMatrix& m, const std::string& var) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "minimal polynomial of a non-square matrix");
    const Field& f = m.field();
    const auto ring = Ring::polynomial(f.spec(), {var});
    const std::size_t n = m.rows();
    auto flat = [&](const FieldMatrix& a) {
        FieldVector v(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v[i * n + j] = a.at(i, j);
        return v;
    };
    std::vector<FieldVector> powers{flat(FieldMatrix::identity(f, n))};
    FieldMatrix p = FieldMatrix::identity(f, n);
    for (std::size_t d = 1;; ++d) {
        p = p * m;
        const auto target = flat(p);
        FieldMatrix a(f, n * n, powers.size());
        for (std::size_t c = 0; c < powers.size(); ++c)
            for (std::size_t r = 0; r < n * n; ++r) a.set(r, c, powers[c][r]);
        if (auto sol = a.solve(target)) {
            Poly out = Poly::var(ring, 0, static_cast<std::int32_t>(d));
            for (std::size_t i = 0; i < sol->size(); ++i)
                if ((*sol)[i]) out += Poly::var(ring, 0, static_cast<std::int32_t>(i)).scaled((*sol)[i]);
            return out;
        }
        powers.push_back(target);
    }
}

FieldMatrix poly_at_matrices(const Poly& p, std::span<const FieldMatrix> mats) {
    const Ring& ring = *p.ring();
    if (static_cast<int>(mats.size()) != ring.nvars())
        throw Error(ErrorCode::DimensionMismatch, "one matrix per variable required");
    if (mats.empty()) throw Error(ErrorCode::InvalidArgument, "no matrices given");
    const Field& f = mats.front().field();
    const std::size_t n = mats.front().rows();
    FieldMatrix sum(f, n, n);
    for (const auto& t : p.terms()) {
        FieldMatrix prod = FieldMatrix::identity(f, n).scaled(t.coeff);
        for (int v = 0; v < ring.nvars(); ++v) {
            if (t.mono.e[v] < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
            for (int k = 0; k < t.mono.e[v]; ++k) prod = prod * mats[v];
        }
        sum = sum + prod;
    }
    return sum;
}

}  // namespace umf
