#include "umf/cohomwin.hpp"

#include <cmath>
#include <future>
#include <sstream>

#include "umf/error.hpp"

namespace umf {

Window::Window(const Ring& ring, std::vector<std::pair<int, int>> bounds) : bounds_(std::move(bounds)) {
    if (static_cast<int>(bounds_.size()) != ring.nvars())
        throw Error(ErrorCode::InvalidArgument, "window has wrong number of variables");
    for (int i = 0; i < ring.nvars(); ++i)
        if (!ring.is_laurent(i) && bounds_[i].first < 0 && bounds_[i].first <= bounds_[i].second)
            throw Error(ErrorCode::InvalidArgument, "negative window bound for polynomial variable " + ring.var(i));
}

Window Window::box(const Ring& ring, int d) {
    std::vector<std::pair<int, int>> b;
    for (int i = 0; i < ring.nvars(); ++i) b.emplace_back(ring.is_laurent(i) ? -d : 0, d);
    return Window(ring, std::move(b));
}

bool Window::empty() const noexcept {
    for (auto [lo, hi] : bounds_)
        if (lo > hi) return true;
    return false;
}

std::size_t Window::size() const noexcept {
    if (empty()) return 0;
    std::size_t n = 1;
    for (auto [lo, hi] : bounds_) n *= static_cast<std::size_t>(hi - lo + 1);
    return n;
}

bool Window::contains(const Monomial& m) const noexcept {
    for (std::size_t i = 0; i < bounds_.size(); ++i)
        if (m.e[i] < bounds_[i].first || m.e[i] > bounds_[i].second) return false;
    return true;
}

bool Window::contains(const Window& other) const noexcept {
    if (other.empty()) return true;
    for (std::size_t i = 0; i < bounds_.size(); ++i)
        if (other.bounds_[i].first < bounds_[i].first || other.bounds_[i].second > bounds_[i].second)
            return false;
    return true;
}

std::size_t Window::index_of(const Monomial& m) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        const auto [lo, hi] = bounds_[i];
        idx = idx * static_cast<std::size_t>(hi - lo + 1) + static_cast<std::size_t>(m.e[i] - lo);
    }
    return idx;
}

Monomial Window::monomial(std::size_t index) const {
    Monomial m;
    for (std::size_t i = bounds_.size(); i-- > 0;) {
        const auto [lo, hi] = bounds_[i];
        const auto w = static_cast<std::size_t>(hi - lo + 1);
        m.e[i] = lo + static_cast<int>(index % w);
        index /= w;
    }
    return m;
}

Window Window::expanded(const Monomial& lo, const Monomial& hi) const {
    Window w = *this;
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        w.bounds_[i].first += lo.e[i];
        w.bounds_[i].second += hi.e[i];
    }
    return w;
}

Window Window::shrunk(const Monomial& lo, const Monomial& hi) const {
    Window w = *this;
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        w.bounds_[i].first -= lo.e[i];
        w.bounds_[i].second -= hi.e[i];
    }
    return w;
}

std::string Window::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        if (i) os << 'x';
        os << '[' << bounds_[i].first << ',' << bounds_[i].second << ']';
    }
    return os.str();
}

std::pair<Monomial, Monomial> exponent_support(const UngradedMF& q, const UngradedMF& r) {
    auto lo = q.matrix().min_exponents();
    auto hi = q.matrix().max_exponents();
    const auto lo2 = r.matrix().min_exponents();
    const auto hi2 = r.matrix().max_exponents();
    for (int i = 0; i < kMaxVars; ++i) {
        lo.e[i] = std::min(lo.e[i], lo2.e[i]);
        hi.e[i] = std::max(hi.e[i], hi2.e[i]);
    }
    return {lo, hi};
}

FieldMatrix delta_as_field_matrix(const UngradedMF& q, const UngradedMF& r, const Window& win_in,
                                  const Window& win_out) {
    require_same_ring(q.ring(), r.ring());
    const auto [lo, hi] = exponent_support(q, r);
    if (!win_out.contains(win_in.expanded(lo, hi))) throw Error(ErrorCode::WindowOverflow, "window overflow");

    const std::size_t nq = q.size(), nr = r.size();
    const std::size_t sin = win_in.size(), sout = win_out.size();
    FieldMatrix d(q.ring()->field(), nr * nq * sout, nr * nq * sin);
    const auto& qm = q.matrix();
    const auto& rm = r.matrix();
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nq; ++j)
            for (std::size_t mi = 0; mi < sin; ++mi) {
                const std::size_t col = (i * nq + j) * sin + mi;
                const Monomial m = win_in.monomial(mi);
                // R * (m E_ij) fills column j from column i of R.
                for (std::size_t k = 0; k < nr; ++k)
                    for (const auto& t : rm(k, i).terms())
                        d.accumulate((k * nq + j) * sout + win_out.index_of(m * t.mono), col, t.coeff);
                // (m E_ij) * Q fills row i from row j of Q.
                for (std::size_t l = 0; l < nq; ++l)
                    for (const auto& t : qm(j, l).terms())
                        d.accumulate((i * nq + l) * sout + win_out.index_of(m * t.mono), col, t.coeff);
            }
    return d;
}

FieldVector window_coordinates(const RingMatrix& f, const Window& win) {
    const std::size_t s = win.size();
    FieldVector v(f.rows() * f.cols() * s, 0);
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j)
            for (const auto& t : f(i, j).terms()) {
                if (!win.contains(t.mono)) throw Error(ErrorCode::WindowOverflow, "window overflow");
                v[(i * f.cols() + j) * s + win.index_of(t.mono)] = t.coeff;
            }
    return v;
}

RingMatrix window_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols, const Window& win,
                         std::span<const std::uint32_t> coords) {
    const std::size_t s = win.size();
    if (coords.size() != rows * cols * s) throw Error(ErrorCode::DimensionMismatch, "coordinate length mismatch");
    RingMatrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<Term> terms;
            for (std::size_t k = 0; k < s; ++k)
                if (auto c = coords[(i * cols + j) * s + k]) terms.push_back({win.monomial(k), c});
            m(i, j) = Poly::from_terms(ring, std::move(terms));
        }
    return m;
}

namespace {

std::size_t window_h(const UngradedMF& q, const UngradedMF& r, int d) {
    const auto [lo, hi] = exponent_support(q, r);
    const Window bd = Window::box(*q.ring(), d);
    const auto dk = delta_as_field_matrix(q, r, bd, bd.expanded(lo, hi));
    const std::size_t ker = dk.cols() - dk.rank();

    // dim(image ∩ B_d) = rank(D) - rank(rows of D outside B_d).
    const Window src = Window::box(*q.ring(), d + kImageMargin);
    const Window out = src.expanded(lo, hi);
    const auto di = delta_as_field_matrix(q, r, src, out);
    std::vector<std::size_t> outside;
    for (std::size_t i = 0; i < di.rows(); ++i)
        if (!bd.contains(out.monomial(i % out.size()))) outside.push_back(i);
    FieldMatrix p(di.field(), outside.size(), di.cols());
    for (std::size_t a = 0; a < outside.size(); ++a)
        for (std::size_t c = 0; c < di.cols(); ++c) p.set(a, c, di.at(outside[a], c));
    const std::size_t im = di.rank() - p.rank();
    if (im > ker) throw Error(ErrorCode::Invariant, "window image exceeds kernel");
    return ker - im;
}

}  // namespace

std::vector<std::size_t> cohomology_dims(const UngradedMF& q, const UngradedMF& r, int d_max) {
    if (d_max < 1) throw Error(ErrorCode::InvalidArgument, "d_max must be positive");
    if (q.potential() != r.potential()) throw Error(ErrorCode::RingMismatch, "factorizations of different potentials");
    std::vector<std::future<std::size_t>> jobs;
    for (int d = 1; d <= d_max; ++d) jobs.push_back(std::async(std::launch::async, window_h, q, r, d));
    std::vector<std::size_t> h;
    for (auto& j : jobs) h.push_back(j.get());
    return h;
}

std::optional<HomotopyWitness> solve_exactness(const Morphism& f, const Window& win) {
    const auto& q = f.source();
    const auto& r = f.target();
    if (f.matrix().is_zero()) return HomotopyWitness(f, RingMatrix(q.ring(), r.size(), q.size()));
    if (!is_closed(f) || win.empty()) return std::nullopt;
    const auto [lo, hi] = exponent_support(q, r);
    const Window out = win.expanded(lo, hi);
    FieldVector rhs;
    try {
        rhs = window_coordinates(f.matrix(), out);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::WindowOverflow) throw;
        return std::nullopt;  // delta of anything in win stays inside out
    }
    const auto sol = delta_as_field_matrix(q, r, win, out).solve(rhs);
    if (!sol) return std::nullopt;
    return HomotopyWitness(f, window_matrix(q.ring(), r.size(), q.size(), win, *sol));
}

std::string point_to_string(std::span<const FieldElem> point) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < point.size(); ++i) os << (i ? "," : "") << point[i].to_string();
    os << ')';
    return os.str();
}

std::string LocalCohomologyReport::to_string() const {
    std::ostringstream os;
    os << "point=" << point_to_string(point) << " dim=" << local_dim;
    for (std::size_t i = 0; i < class_coordinates.size(); ++i) {
        os << " class[" << i << "]=[";
        for (std::size_t k = 0; k < class_coordinates[i].size(); ++k) os << (k ? "," : "") << class_coordinates[i][k];
        os << ']';
    }
    return os.str();
}

namespace {

FieldMatrix from_columns(const Field& f, std::size_t rows, const std::vector<FieldVector>& cols) {
    FieldMatrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
    return m;
}

FieldVector flatten(const FieldMatrix& m) {
    FieldVector v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
    return v;
}

}  // namespace

LocalCohomologyReport certify_at_point(const UngradedMF& q, const UngradedMF& r, std::span<const FieldElem> point,
                                       const std::vector<Morphism>& classes) {
    require_same_ring(q.ring(), r.ring());
    const Field& fld = point_field(*q.ring(), point);
    const auto qp = q.matrix().specialize(point);
    const auto rp = r.matrix().specialize(point);
    const std::size_t nq = q.size(), nr = r.size(), n = nq * nr;

    // Column (i, j) is the image of the matrix unit E_ij.
    FieldMatrix d(fld, n, n);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nq; ++j) {
            const std::size_t col = i * nq + j;
            for (std::size_t k = 0; k < nr; ++k) d.accumulate(k * nq + j, col, rp.at(k, i));
            for (std::size_t l = 0; l < nq; ++l) d.accumulate(i * nq + l, col, qp.at(j, l));
        }
    if (!(d * d).is_zero()) throw Error(ErrorCode::Invariant, "specialized differential does not square to zero");

    // Basis of the image, then kernel vectors completing it to a basis of the kernel.
    std::vector<FieldVector> basis;
    std::size_t rank = 0;
    auto try_add = [&](FieldVector v) {
        basis.push_back(std::move(v));
        const auto r2 = from_columns(fld, n, basis).rank();
        if (r2 == rank) {
            basis.pop_back();
            return false;
        }
        rank = r2;
        return true;
    };
    for (std::size_t c = 0; c < n; ++c) try_add(d.column(c));
    const std::size_t image_rank = rank;
    for (auto& v : d.kernel_basis()) try_add(std::move(v));

    LocalCohomologyReport rep;
    rep.point.assign(point.begin(), point.end());
    rep.local_dim = rank - image_rank;
    if (rep.local_dim != n - 2 * image_rank) throw Error(ErrorCode::Invariant, "local cohomology dimension mismatch");

    const auto system = from_columns(fld, n, basis);
    for (const auto& cls : classes) {
        if (!same_ring(cls.matrix().ring(), q.ring()) || cls.source() != q || cls.target() != r)
            throw Error(ErrorCode::InvalidArgument, "class is not a morphism between the given factorizations");
        if (!is_closed(cls)) throw Error(ErrorCode::NotClosed, "class is not closed");
        const auto x = system.solve(flatten(cls.matrix().specialize(point)));
        if (!x) throw Error(ErrorCode::Invariant, "specialized class is not a cycle");
        rep.class_coordinates.emplace_back(x->begin() + static_cast<std::ptrdiff_t>(image_rank), x->end());
    }
    return rep;
}

std::vector<std::vector<FieldElem>> critical_points(const Poly& w, const Field& ext) {
    const Ring& ring = *w.ring();
    if (!ext.contains(ring.field())) throw Error(ErrorCode::FieldMismatch, "field mismatch");
    const int n = ring.nvars();
    const double count = std::pow(static_cast<double>(ext.order()), n);
    if (count > double(1 << 24)) throw Error(ErrorCode::BudgetExceeded, "critical point search exceeds budget");
    std::vector<Poly> partials;
    for (int i = 0; i < n; ++i) partials.push_back(w.partial(i));
    const auto elems = ext.enumerate();
    std::vector<std::vector<FieldElem>> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<FieldElem> p(static_cast<std::size_t>(n));
    while (true) {
        bool pole = false;
        for (int i = 0; i < n; ++i) {
            p[i] = elems[idx[i]];
            pole = pole || (ring.is_laurent(i) && p[i].is_zero());
        }
        if (!pole) {
            bool crit = true;
            for (const auto& dp : partials)
                if (!dp.evaluate(p).is_zero()) {
                    crit = false;
                    break;
                }
            if (crit) out.push_back(p);
        }
        int i = n - 1;
        while (i >= 0 && ++idx[i] == elems.size()) idx[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

}  // namespace umf
