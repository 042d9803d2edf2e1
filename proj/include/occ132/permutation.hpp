#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace occ132 {

/// A permutation of {1..n} in one-line notation. Positions and values are
/// 1-based in every public accessor; n = 0 is the empty permutation.
class Permutation {
public:
    Permutation() = default;

    /// Validates that `values` is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(values_.size()); }
    bool empty() const noexcept { return values_.empty(); }

    /// Value at 1-based position i.
    int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

    std::span<const int> values() const noexcept { return values_; }

    Permutation inverse() const;

    /// Digit string for n <= 9 ("57614283"), comma-separated otherwise.
    std::string to_string() const;

    /// Accepts either serialization; an empty string is the empty permutation.
    static Permutation parse(std::string_view text);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct Unchecked {};
    Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}
    friend Permutation reduce_to_pattern(std::span<const int> values);

    std::vector<int> values_;
};

/// Canonical catalog order: by size, then lexicographically.
struct ShapeLess {
    bool operator()(const Permutation& a, const Permutation& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// An occurrence of 132: positions i < j < k with pi(i) < pi(k) < pi(j).
struct Occurrence {
    int i = 0;
    int j = 0;
    int k = 0;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
    friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

Permutation make_permutation(std::vector<int> values);

/// All occurrences in lexicographic (i, j, k) order; O(n^3).
std::vector<Occurrence> occurrences_132(const Permutation& pi);

/// Number of 132 occurrences among distinct values; O(n^2).
std::int64_t count_132(std::span<const int> values);
inline std::int64_t count_132(const Permutation& pi) { return count_132(pi.values()); }

/// The order-isomorphic permutation of S_{|values|}. Rejects duplicates.
Permutation reduce_to_pattern(std::span<const int> values);

/// Longest strictly increasing subsequence length.
int lis_length(std::span<const int> values);

/// True iff pi has no increasing subsequence of length k. Always false for k <= 0.
bool avoids_monotone(const Permutation& pi, int k);

}  // namespace occ132
