#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "umf/mfcore.hpp"

namespace umf {

/// Per-variable exponent box [lo_i, hi_i]. An empty window (some lo_i > hi_i)
/// is allowed and spans nothing.
class Window {
public:
    Window() = default;
    Window(const Ring& ring, std::vector<std::pair<int, int>> bounds);

    /// [-d, d] for Laurent variables, [0, d] otherwise.
    static Window box(const Ring& ring, int d);

    int nvars() const noexcept { return static_cast<int>(bounds_.size()); }
    const std::vector<std::pair<int, int>>& bounds() const noexcept { return bounds_; }
    bool empty() const noexcept;
    /// Number of monomials in the box.
    std::size_t size() const noexcept;
    bool contains(const Monomial& m) const noexcept;
    /// Position of m in the box; m must be contained.
    std::size_t index_of(const Monomial& m) const;
    Monomial monomial(std::size_t index) const;

    /// Minkowski sum with the exponent range [lo, hi] (per variable).
    Window expanded(const Monomial& lo, const Monomial& hi) const;
    /// Largest window whose expansion by [lo, hi] stays inside this one.
    Window shrunk(const Monomial& lo, const Monomial& hi) const;
    bool contains(const Window& other) const noexcept;

    std::string to_string() const;

private:
    std::vector<std::pair<int, int>> bounds_;
};

/// Combined exponent range of the entries of both factorizations.
std::pair<Monomial, Monomial> exponent_support(const UngradedMF& q, const UngradedMF& r);

/// Matrix of f -> R f + f Q restricted to morphisms with entries in win_in.
/// Basis order: (row, column, monomial index) with the monomial fastest.
FieldMatrix delta_as_field_matrix(const UngradedMF& q, const UngradedMF& r, const Window& win_in,
                                  const Window& win_out);

/// Coordinates of a morphism matrix in the window basis.
FieldVector window_coordinates(const RingMatrix& f, const Window& win);
/// Inverse of window_coordinates.
RingMatrix window_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols, const Window& win,
                         std::span<const std::uint32_t> coords);

/// Source margin for the image term of cohomology_dims.
inline constexpr int kImageMargin = 1;

/// h_1..h_{d_max}: dim(ker delta on B_d) - dim(delta(B_{d+margin}) ∩ B_d).
/// Never below the dimension of the classes represented in B_d; equal to it
/// once the margin covers their primitives.
std::vector<std::size_t> cohomology_dims(const UngradedMF& q, const UngradedMF& r, int d_max);

/// Witness g supported in `win` with delta(g) = f, or nullopt (inconclusive).
std::optional<HomotopyWitness> solve_exactness(const Morphism& f, const Window& win);

struct LocalCohomologyReport {
    std::vector<FieldElem> point;
    std::size_t local_dim = 0;
    /// One coordinate vector (length local_dim) per input class.
    std::vector<FieldVector> class_coordinates;

    /// `point=(a,b) dim=n class[i]=[..]` on one line.
    std::string to_string() const;
};

/// Local cohomology of the specialized complex at `point` and the local
/// coordinates of each (closed) class.
LocalCohomologyReport certify_at_point(const UngradedMF& q, const UngradedMF& r,
                                       std::span<const FieldElem> point,
                                       const std::vector<Morphism>& classes);

/// Points of ext^n (Laurent coordinates nonzero) where every partial of W vanishes.
std::vector<std::vector<FieldElem>> critical_points(const Poly& w, const Field& ext);

std::string point_to_string(std::span<const FieldElem> point);

}  // namespace umf
