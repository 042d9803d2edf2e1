#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "occ132/algebraic.hpp"
#include "occ132/series.hpp"
#include "occ132/shapes.hpp"

namespace occ132 {

/// Shapes that contribute identically to Psi_r: same size, capacity and
/// number of feasible cells.
struct ShapeGroup {
    int size = 0;
    int capacity = 0;
    int feasible = 0;
    std::int64_t multiplicity = 0;
};

/// Shapes that contribute identically to Phi_r(x; k): additionally the same
/// LIS and the same multiset of north-east LIS lengths.
struct RestrictedGroup {
    int size = 0;
    int capacity = 0;
    int lis = 0;
    std::vector<int> lis_ne;  // sorted
    std::int64_t multiplicity = 0;
};

std::vector<ShapeGroup> group_shapes(const ShapeCatalog& catalog);
std::vector<RestrictedGroup> group_restricted_shapes(const ShapeCatalog& catalog);

/// Memoizing solver for Psi_r(x) (series and closed form) and Phi_r(x; k).
/// Not safe for concurrent use; results are immutable once computed.
class PsiSolver {
public:
    static constexpr int default_order = 32;

    explicit PsiSolver(ShapeCatalog catalog, int order = default_order);

    int order() const { return order_; }
    const ShapeCatalog& catalog() const { return catalog_; }
    const std::vector<ShapeGroup>& groups() const { return groups_; }

    /// Psi_r through x^order. Asserts nonnegative integer coefficients.
    const PowerSeries& psi_series(int r);

    /// Psi_r as an element of Q(x)[sqrt(1 - 4x)].
    const AlgebraicFunction& psi_closed_form(int r);

    /// Phi_r(x; k): permutations with r occurrences of 132 avoiding 12...k.
    const PowerSeries& phi_series(int r, int k);

    /// Contribution of exceptional_shape(r) computed from its catalog record
    /// (first) and from x^{2r+1} Psi_0^{r+2} (second).
    std::pair<PowerSeries, PowerSeries> exceptional_contribution_series(int r);
    std::pair<AlgebraicFunction, AlgebraicFunction> exceptional_contribution_closed_form(int r);

private:
    void require_level(int r) const;

    ShapeCatalog catalog_;
    int order_;
    std::vector<ShapeGroup> groups_;
    std::vector<RestrictedGroup> restricted_groups_;
    std::vector<PowerSeries> series_;
    std::vector<AlgebraicFunction> closed_;
    std::map<std::pair<int, int>, PowerSeries> phi_;
};

}  // namespace occ132
