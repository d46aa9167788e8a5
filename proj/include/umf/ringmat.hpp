#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "umf/gf2k.hpp"
#include "umf/ringpoly.hpp"

namespace umf {

/// Raw coordinates of a vector over a FieldMatrix's field.
using FieldVector = std::vector<std::uint32_t>;

/// Dense matrix over GF(2^k). Elimination over GF(2) runs on bit-packed rows;
/// larger fields use log/antilog tables.
class FieldMatrix {
public:
    FieldMatrix(const Field& field, std::size_t rows, std::size_t cols);

    static FieldMatrix identity(const Field& field, std::size_t n);

    const Field& field() const noexcept { return *field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v) {
        data_[r * cols_ + c] = static_cast<std::uint16_t>(v);
    }
    /// Adds v into entry (r, c).
    void accumulate(std::size_t r, std::size_t c, std::uint32_t v) {
        data_[r * cols_ + c] ^= static_cast<std::uint16_t>(v);
    }
    FieldElem elem(std::size_t r, std::size_t c) const { return field_->elem(at(r, c)); }

    bool is_zero() const noexcept;
    FieldVector column(std::size_t c) const;
    FieldVector apply(std::span<const std::uint32_t> v) const;

    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix scaled(std::uint32_t c) const;
    FieldMatrix transpose() const;

    std::size_t rank() const;
    /// Basis of {v : M v = 0}; one vector per free column of the reduced echelon form.
    std::vector<FieldVector> kernel_basis() const;
    /// Solution of M v = b with every free variable set to zero, or nullopt.
    std::optional<FieldVector> solve(std::span<const std::uint32_t> b) const;
    std::optional<FieldMatrix> inverse() const;

    std::string to_string() const;

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) noexcept {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    const Field* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint16_t> data_;
};

/// Matrix of (Laurent) polynomials over one ring.
class RingMatrix {
public:
    RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

    static RingMatrix identity(const RingPtr& ring, std::size_t n);
    static RingMatrix scalar(const RingPtr& ring, std::size_t n, const Poly& c);
    static RingMatrix from_rows(const RingPtr& ring, const std::vector<std::vector<Poly>>& rows);
    /// Rows separated by ';' or newlines, entries by ','.
    static RingMatrix parse(std::string_view text, const RingPtr& ring);
    /// Square block matrix [[a, b], [c, d]].
    static RingMatrix block2(const RingMatrix& a, const RingMatrix& b, const RingMatrix& c,
                             const RingMatrix& d);

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Poly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Poly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    bool is_zero() const noexcept;
    /// Total number of nonzero terms over all entries.
    std::size_t term_count() const noexcept;

    RingMatrix operator+(const RingMatrix& o) const;
    RingMatrix operator-(const RingMatrix& o) const { return *this + o; }
    RingMatrix operator*(const RingMatrix& o) const;
    RingMatrix& operator+=(const RingMatrix& o) { return *this = *this + o; }
    RingMatrix scaled(const Poly& c) const;
    RingMatrix partial(int var) const;
    RingMatrix transpose() const;
    RingMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    /// (A, B, C, D) of a square matrix of even size split into equal blocks.
    std::array<RingMatrix, 4> blocks() const;

    FieldMatrix specialize(std::span<const FieldElem> point) const;

    /// Per-variable exponent range over all entries (zero matrix: all 0).
    Monomial min_exponents() const;
    Monomial max_exponents() const;

    /// One row per line, entries joined by ", ".
    std::string to_string() const;

    friend bool operator==(const RingMatrix& a, const RingMatrix& b) noexcept {
        return same_ring(a.ring_, b.ring_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.entries_ == b.entries_;
    }

private:
    RingPtr ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Poly> entries_;
};

/// A*B + B*A; in characteristic two this is the commutator.
RingMatrix commutator(const RingMatrix& a, const RingMatrix& b);

}  // namespace umf
