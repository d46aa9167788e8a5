#include <algorithm>
#include <sstream>

#include "umf/ringmat.hpp"

namespace umf {

namespace {

/// Row-reduced form: the first pivots.size() rows of `rows` are the nonzero
/// rows, each with a leading 1 in its pivot column.
struct Reduced {
    std::vector<std::size_t> pivots;
    std::vector<FieldVector> rows;
};

Reduced reduce_gf2(const FieldMatrix& m, bool full) {
    const std::size_t nr = m.rows(), nc = m.cols();
    const std::size_t words = (nc + 63) / 64;
    std::vector<std::uint64_t> bits(nr * words, 0);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            if (m.at(r, c)) bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
    auto row = [&](std::size_t r) { return bits.data() + r * words; };

    Reduced out;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nc && rank < nr; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        std::size_t piv = rank;
        while (piv < nr && !(row(piv)[w] & mask)) ++piv;
        if (piv == nr) continue;
        if (piv != rank) std::swap_ranges(row(piv), row(piv) + words, row(rank));
        const std::uint64_t* p = row(rank);
        for (std::size_t r = full ? 0 : rank + 1; r < nr; ++r) {
            if (r == rank) continue;
            std::uint64_t* q = row(r);
            if (q[w] & mask)
                for (std::size_t k = w; k < words; ++k) q[k] ^= p[k];
        }
        out.pivots.push_back(c);
        ++rank;
    }
    out.rows.resize(rank, FieldVector(nc, 0));
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < nc; ++c) out.rows[r][c] = (row(r)[c / 64] >> (c % 64)) & 1u;
    return out;
}

Reduced reduce_gfq(const FieldMatrix& m, bool full) {
    const Field& f = m.field();
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<FieldVector> rows(nr, FieldVector(nc));
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) rows[r][c] = m.at(r, c);

    Reduced out;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nc && rank < nr; ++c) {
        std::size_t piv = rank;
        while (piv < nr && rows[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(rows[piv], rows[rank]);
        auto& p = rows[rank];
        const auto inv = f.inv(p[c]);
        for (std::size_t k = c; k < nc; ++k) p[k] = f.mul(p[k], inv);
        for (std::size_t r = full ? 0 : rank + 1; r < nr; ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const auto factor = rows[r][c];
            auto& q = rows[r];
            for (std::size_t k = c; k < nc; ++k)
                if (p[k]) q[k] ^= f.mul(factor, p[k]);
        }
        out.pivots.push_back(c);
        ++rank;
    }
    rows.resize(rank);
    out.rows = std::move(rows);
    return out;
}

Reduced reduce(const FieldMatrix& m, bool full) {
    return m.field().degree() == 1 ? reduce_gf2(m, full) : reduce_gfq(m, full);
}

}  // namespace

FieldMatrix::FieldMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix FieldMatrix::identity(const Field& field, std::size_t n) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

bool FieldMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](auto v) { return v == 0; });
}

FieldVector FieldMatrix::column(std::size_t c) const {
    FieldVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

FieldVector FieldMatrix::apply(std::span<const std::uint32_t> v) const {
    if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "dimension mismatch");
    FieldVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint32_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc ^= field_->mul(at(r, c), v[c]);
        out[r] = acc;
    }
    return out;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
    if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "field mismatch");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "dimension mismatch");
    FieldMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] ^= o.data_[i];
    return r;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "field mismatch");
    if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "dimension mismatch");
    FieldMatrix r(*field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto a = at(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.accumulate(i, j, field_->mul(a, o.at(k, j)));
        }
    return r;
}

FieldMatrix FieldMatrix::scaled(std::uint32_t c) const {
    FieldMatrix r = *this;
    for (auto& v : r.data_) v = static_cast<std::uint16_t>(field_->mul(v, c));
    return r;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix r(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

std::size_t FieldMatrix::rank() const { return reduce(*this, false).pivots.size(); }

std::vector<FieldVector> FieldMatrix::kernel_basis() const {
    const auto red = reduce(*this, true);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : red.pivots) is_pivot[p] = true;
    std::vector<FieldVector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        FieldVector v(cols_, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = red.rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<FieldVector> FieldMatrix::solve(std::span<const std::uint32_t> b) const {
    if (b.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "dimension mismatch");
    FieldMatrix aug(*field_, rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.set(r, c, at(r, c));
        aug.set(r, cols_, b[r]);
    }
    const auto red = reduce(aug, true);
    if (!red.pivots.empty() && red.pivots.back() == cols_) return std::nullopt;
    FieldVector x(cols_, 0);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = red.rows[i][cols_];
    return x;
}

std::optional<FieldMatrix> FieldMatrix::inverse() const {
    if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = rows_;
    FieldMatrix aug(*field_, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.set(r, c, at(r, c));
        aug.set(r, n + r, 1);
    }
    const auto red = reduce(aug, true);
    if (red.pivots.size() < n || red.pivots[n - 1] != n - 1) return std::nullopt;
    FieldMatrix inv(*field_, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.set(r, c, red.rows[r][n + c]);
    return inv;
}

std::string FieldMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << elem(r, c).to_string();
        os << ']';
        if (r + 1 < rows_) os << ';';
    }
    return os.str();
}

}  // namespace umf
