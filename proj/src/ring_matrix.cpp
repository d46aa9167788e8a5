#include <algorithm>
#include <sstream>

#include "umf/ringmat.hpp"

namespace umf {

namespace {

void require_shape(bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::DimensionMismatch, std::string("dimension mismatch: ") + what);
}

}  // namespace

RingMatrix::RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring_)) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
}

RingMatrix RingMatrix::identity(const RingPtr& ring, std::size_t n) {
    return scalar(ring, n, Poly::one(ring));
}

RingMatrix RingMatrix::scalar(const RingPtr& ring, std::size_t n, const Poly& c) {
    require_same_ring(ring, c.ring());
    RingMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

RingMatrix RingMatrix::from_rows(const RingPtr& ring, const std::vector<std::vector<Poly>>& rows) {
    require_shape(!rows.empty() && !rows[0].empty(), "empty matrix");
    RingMatrix m(ring, rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_shape(rows[r].size() == m.cols_, "ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            require_same_ring(ring, rows[r][c].ring());
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

RingMatrix RingMatrix::parse(std::string_view text, const RingPtr& ring) {
    std::vector<std::vector<Poly>> rows;
    int line = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find_first_of(";\n", pos);
        if (end == std::string_view::npos) end = text.size();
        const auto row_text = text.substr(pos, end - pos);
        if (row_text.find_first_not_of(" \t\r") != std::string_view::npos) {
            std::vector<Poly> row;
            std::size_t epos = 0;
            for (;;) {
                const auto comma = row_text.find(',', epos);
                const auto entry = row_text.substr(epos, comma == std::string_view::npos
                                                             ? std::string_view::npos
                                                             : comma - epos);
                try {
                    row.push_back(Poly::parse(entry, ring));
                } catch (const ParseError& e) {
                    // Re-anchor the entry-relative location to the matrix text.
                    throw ParseError(e.detail(), line + e.line() - 1,
                                     static_cast<int>(epos) + e.column());
                }
                if (comma == std::string_view::npos) break;
                epos = comma + 1;
            }
            rows.push_back(std::move(row));
        }
        if (end < text.size() && text[end] == '\n') ++line;
        pos = end + 1;
    }
    if (rows.empty()) throw ParseError("empty matrix", line, 1);
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw ParseError("ragged matrix rows", line, 1);
    return from_rows(ring, rows);
}

RingMatrix RingMatrix::block2(const RingMatrix& a, const RingMatrix& b, const RingMatrix& c,
                              const RingMatrix& d) {
    const std::size_t n = a.rows_;
    for (const auto* m : {&a, &b, &c, &d}) {
        require_shape(m->rows_ == n && m->cols_ == n, "block2 needs equal square blocks");
        require_same_ring(a.ring_, m->ring_);
    }
    RingMatrix out(a.ring_, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = a(i, j);
            out(i, j + n) = b(i, j);
            out(i + n, j) = c(i, j);
            out(i + n, j + n) = d(i, j);
        }
    return out;
}

bool RingMatrix::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::size_t RingMatrix::term_count() const noexcept {
    std::size_t n = 0;
    for (const auto& p : entries_) n += p.size();
    return n;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
    require_same_ring(ring_, o.ring_);
    require_shape(rows_ == o.rows_ && cols_ == o.cols_, "sum");
    RingMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
    return r;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
    require_same_ring(ring_, o.ring_);
    require_shape(cols_ == o.rows_, "product");
    RingMatrix r(ring_, rows_, o.cols_);
    const Field& f = ring_->field();
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            std::vector<Term> acc;
            for (std::size_t k = 0; k < cols_; ++k) {
                const auto& a = (*this)(i, k);
                const auto& b = o(k, j);
                for (const auto& ta : a.terms())
                    for (const auto& tb : b.terms())
                        acc.push_back({ta.mono * tb.mono, f.mul(ta.coeff, tb.coeff)});
            }
            r(i, j) = Poly::from_terms(ring_, std::move(acc));
        }
    return r;
}

RingMatrix RingMatrix::scaled(const Poly& c) const {
    require_same_ring(ring_, c.ring());
    RingMatrix r = *this;
    for (auto& e : r.entries_) e = c * e;
    return r;
}

RingMatrix RingMatrix::partial(int var) const {
    RingMatrix r = *this;
    for (auto& e : r.entries_) e = e.partial(var);
    return r;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

RingMatrix RingMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    require_shape(r0 + nr <= rows_ && c0 + nc <= cols_, "submatrix");
    RingMatrix r(ring_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
}

std::array<RingMatrix, 4> RingMatrix::blocks() const {
    require_shape(is_square() && rows_ % 2 == 0, "blocks need an even square matrix");
    const std::size_t n = rows_ / 2;
    return {submatrix(0, 0, n, n), submatrix(0, n, n, n), submatrix(n, 0, n, n), submatrix(n, n, n, n)};
}

FieldMatrix RingMatrix::specialize(std::span<const FieldElem> point) const {
    const Field& f = point_field(*ring_, point);
    FieldMatrix m(f, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, (*this)(i, j).evaluate(point).value());
    return m;
}

Monomial RingMatrix::min_exponents() const {
    Monomial r;
    bool first = true;
    for (const auto& e : entries_) {
        if (e.is_zero()) continue;
        const auto m = e.min_exponents();
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = first ? m.e[i] : std::min(r.e[i], m.e[i]);
        first = false;
    }
    return r;
}

Monomial RingMatrix::max_exponents() const {
    Monomial r;
    bool first = true;
    for (const auto& e : entries_) {
        if (e.is_zero()) continue;
        const auto m = e.max_exponents();
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = first ? m.e[i] : std::max(r.e[i], m.e[i]);
        first = false;
    }
    return r;
}

std::string RingMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
        os << '\n';
    }
    return os.str();
}

RingMatrix commutator(const RingMatrix& a, const RingMatrix& b) { return a * b + b * a; }

}  // namespace umf
