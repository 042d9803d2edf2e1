#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "occ132/permutation.hpp"

namespace occ132 {

/// A connected component of the occurrence graph: entry positions (V_1 side)
/// and indices into OccurrenceGraph::occurrences (V_3 side).
struct Component {
    std::vector<int> positions;
    std::vector<int> occurrences;

    int entry_count() const { return static_cast<int>(positions.size()); }
    int occurrence_count() const { return static_cast<int>(occurrences.size()); }
};

/// Bipartite graph joining each entry of a permutation to every 132
/// occurrence it takes part in. Occurrence vertices always have degree 3.
struct OccurrenceGraph {
    int entry_count = 0;
    std::vector<Occurrence> occurrences;
    /// incidence[p - 1]: occurrence indices containing position p.
    std::vector<std::vector<int>> incidence;

    int degree(int position) const { return static_cast<int>(incidence[static_cast<std::size_t>(position - 1)].size()); }

    /// Components in order of their smallest position.
    std::vector<Component> components() const;
};

OccurrenceGraph build_occurrence_graph(const Permutation& pi);

struct Kernel {
    std::vector<int> positions;  // increasing
    std::vector<int> values;     // pi at those positions
    Permutation shape;
    int size = 0;
    std::int64_t capacity = 0;
};

/// Entries in the component containing the maximal entry n. Requires n >= 1.
Kernel kernel_of(const Permutation& pi);

bool is_kernel_permutation(const Permutation& rho);

/// Cell C_{ml}: value band m (between kernel values m-1 and m), position band
/// l (between kernel positions l-1 and l). 1 <= m <= s, 1 <= l <= s + 1.
struct Cell {
    int m = 0;
    int l = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// C_{ml} precedes C_{m'l'} when m >= m' and l <= l'.
inline bool precedes(const Cell& a, const Cell& b) { return a.m >= b.m && a.l <= b.l; }

class CellDecomposition {
public:
    CellDecomposition() = default;
    CellDecomposition(Permutation shape, std::vector<char> feasible);

    const Permutation& shape() const { return shape_; }
    int size() const { return shape_.size(); }

    bool feasible(Cell c) const { return feasible_[index(c)] != 0; }
    /// Feasible cells in row-major (m, l) order.
    std::vector<Cell> feasible_cells() const;

    bool has_contents() const { return !contents_.empty(); }
    /// Entries of a concrete permutation in cell c, in position order.
    std::span<const int> contents(Cell c) const { return contents_[index(c)]; }
    /// Positions of those entries.
    std::span<const int> content_positions(Cell c) const { return positions_[index(c)]; }

    void set_contents(std::vector<std::vector<int>> values, std::vector<std::vector<int>> positions);

private:
    std::size_t index(Cell c) const {
        return static_cast<std::size_t>(c.m - 1) * static_cast<std::size_t>(size() + 1) + static_cast<std::size_t>(c.l - 1);
    }

    Permutation shape_;
    std::vector<char> feasible_;
    std::vector<std::vector<int>> contents_;
    std::vector<std::vector<int>> positions_;
};

/// Feasibility by direct search: a cell is infeasible iff a point inside it
/// completes a 132 with some pair of kernel entries. Rejects non-kernel shapes.
CellDecomposition cell_decomposition(const Permutation& rho);

/// Cell contents of a concrete permutation. Entries are bucketed by the
/// strict inequalities of their cell; populated infeasible cells are kept so
/// callers can detect them.
CellDecomposition cell_contents(const Permutation& pi, const Kernel& kernel);

/// The one-sided sufficient criterion: some kernel entry k has k < l and
/// rho(k) < m. Used only as a cross-check of cell_decomposition.
bool southwest_infeasible(const Permutation& rho, Cell c);

/// Feasible cells sorted by (l ascending, m descending); throws
/// ErrorCode::order_violation if two of them are incomparable.
std::vector<Cell> order_feasible_cells(const CellDecomposition& dec);

/// LIS of the kernel entries weakly north-east of each ordered cell.
std::vector<int> lis_northeast(const Permutation& rho, std::span<const Cell> ordered_cells);
std::vector<int> lis_northeast(const Permutation& rho);

struct KernelShapeRecord {
    Permutation shape;
    int size = 0;
    int capacity = 0;
    std::vector<Cell> cells;  // feasible, in precedence order
    std::vector<int> lis_ne;
    int lis = 0;              // LIS of the shape itself

    int feasible_count() const { return static_cast<int>(cells.size()); }

    friend bool operator==(const KernelShapeRecord&, const KernelShapeRecord&) = default;
};

KernelShapeRecord make_shape_record(const Permutation& rho);

struct Decomposition {
    Permutation shape;
    std::vector<Permutation> contents;  // one per feasible cell, precedence order
};

/// Throws ErrorCode::structure_violation if a non-kernel entry lands in an
/// infeasible cell or a non-kernel component spans several cells.
Decomposition decompose(const Permutation& pi);

/// Inverse of decompose for a kernel shape and one pattern per feasible cell.
Permutation assemble(const Permutation& rho, std::span<const Permutation> contents);
Permutation assemble(const KernelShapeRecord& record, std::span<const Permutation> contents);

}  // namespace occ132
