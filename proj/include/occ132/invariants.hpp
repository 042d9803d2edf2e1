#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "occ132/shapes.hpp"

namespace occ132 {

struct PropertyResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::string counterexample;  // smallest offending input, if any

    bool passed() const { return violations == 0 && checked > 0; }
};

/// Structural properties over every permutation of size 1..max_n:
///   component_size_bound     t1 <= 2 t3 + 1 for every component
///   kernel_size_bound        kernel size <= 2r + 1
///   southwest_infeasibility  one-sided criterion implies infeasible
///   cell_total_order         feasible cells of every kernel met are totally ordered
///   row_dominance            same-row cells: left cell's entries are larger
///   column_dominance         same-column cells: higher cell's entries lie left
///   components_in_cells      non-kernel components sit inside one feasible cell
///   roundtrip_assemble       assemble(decompose(pi)) = pi
///   roundtrip_decompose      decompose(assemble(rho, a)) = (rho, a), size <= max_n
std::vector<PropertyResult> check_invariants(int max_n, int threads = 0);

/// Total order of the feasible cells for every record of a catalog (re-derived from the shape).
PropertyResult check_catalog_order(const ShapeCatalog& catalog);

/// Re-derives each record from its shape and compares field by field.
PropertyResult check_catalog_records(const ShapeCatalog& catalog);

}  // namespace occ132
