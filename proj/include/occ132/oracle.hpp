#pragma once

#include <cstdint>
#include <vector>

namespace occ132 {

struct OracleOptions {
    int threads = 0;     // <= 0: default_thread_count()
    int max_n = 10;      // desk-scale guard
};

/// Number of permutations of S_n by 132-occurrence count.
struct DistributionTable {
    int n = 0;
    std::vector<std::uint64_t> counts;  // index r

    std::uint64_t at(int r) const { return r >= 0 && r < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(r)] : 0; }
    std::uint64_t total() const;
};

/// Joint table over (occurrence count r, LIS length).
struct JointDistribution {
    int n = 0;
    std::vector<std::vector<std::uint64_t>> counts;  // [r][lis]

    std::uint64_t at(int r, int lis) const;
    /// Permutations with r occurrences and LIS < k.
    std::uint64_t restricted(int r, int k) const;
    DistributionTable marginal() const;
};

/// Full sweep of S_n partitioned by leading value; the O(n^2) counter is
/// spot-checked against the O(n^3) listing on every 100th permutation.
JointDistribution joint_distribution(int n, const OracleOptions& options = {});
DistributionTable distribution(int n, const OracleOptions& options = {});
std::uint64_t count_exact(int n, int r, const OracleOptions& options = {});
std::uint64_t count_exact_restricted(int n, int r, int k, const OracleOptions& options = {});

}  // namespace occ132
