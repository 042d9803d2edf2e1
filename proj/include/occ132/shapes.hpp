#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "occ132/kernel.hpp"

namespace occ132 {

/// Every kernel shape of capacity <= max_occ, sorted by (size, shape).
struct ShapeCatalog {
    int max_occ = 0;
    std::vector<KernelShapeRecord> records;

    /// The sub-catalog for a smaller budget (capacity <= r).
    ShapeCatalog restricted_to(int r) const;
};

struct EnumerationOptions {
    int threads = 0;  // <= 0: default_thread_count()
};

/// Kernel permutations of size <= 2r and capacity <= r found by pruned
/// backtracking, plus the constructed size-(2r+1) exceptional shape.
ShapeCatalog enumerate_kernel_shapes(int r, const EnumerationOptions& options = {});

/// All kernel permutations of exactly `size` with capacity <= max_capacity,
/// by the same pruned search. Sorted lexicographically.
std::vector<Permutation> search_kernel_permutations(int size, int max_capacity, int threads = 0);

/// The unique kernel permutation of capacity r and size 2r + 1 (r >= 1).
Permutation exceptional_shape(int r);

/// Exhaustively searches size 2r + 1 and checks that exceptional_shape(r) is
/// the only kernel permutation found there. Returns the shapes found.
std::vector<Permutation> verify_exceptional(int r, int threads = 0);

/// Kernel shapes of every permutation of size <= max_size (capacity <=
/// max_capacity), collected by scanning the symmetric groups directly.
std::vector<Permutation> kernel_shapes_by_scan(int max_size, int max_capacity);

struct Census {
    /// (size, capacity) -> number of catalogued shapes.
    std::map<std::pair<int, int>, std::int64_t> by_size_capacity;
    /// Index r (1..max_occ): shapes of capacity exactly r other than
    /// exceptional_shape(r), i.e. the shapes first needed at level r.
    std::vector<std::int64_t> new_nonexceptional;
};

Census census(const ShapeCatalog& catalog);

}  // namespace occ132
