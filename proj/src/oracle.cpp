#include "occ132/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "occ132/error.hpp"
#include "occ132/parallel.hpp"
#include "occ132/permutation.hpp"

namespace occ132 {

std::uint64_t DistributionTable::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

std::uint64_t JointDistribution::at(int r, int lis) const {
    if (r < 0 || r >= static_cast<int>(counts.size())) return 0;
    const auto& row = counts[static_cast<std::size_t>(r)];
    return lis >= 0 && lis < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(lis)] : 0;
}

std::uint64_t JointDistribution::restricted(int r, int k) const {
    std::uint64_t total = 0;
    for (int lis = 0; lis < k && lis <= n; ++lis) total += at(r, lis);
    return total;
}

DistributionTable JointDistribution::marginal() const {
    DistributionTable t;
    t.n = n;
    for (const auto& row : counts) t.counts.push_back(std::accumulate(row.begin(), row.end(), std::uint64_t{0}));
    return t;
}

namespace {

void check_guard(int n, const OracleOptions& options) {
    if (n < 0) fail(ErrorCode::invalid_argument, "n must be >= 0");
    if (n > options.max_n) {
        fail(ErrorCode::guard_violation, "n = " + std::to_string(n) + " exceeds the oracle guard " + std::to_string(options.max_n));
    }
}

}  // namespace

JointDistribution joint_distribution(int n, const OracleOptions& options) {
    check_guard(n, options);
    const std::size_t max_r = n >= 3 ? static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 2) / 6 : 0;
    const auto blank = std::vector<std::vector<std::uint64_t>>(max_r + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    JointDistribution out;
    out.n = n;
    out.counts = blank;
    if (n == 0) {
        out.counts[0][0] = 1;
        return out;
    }

    const int threads = resolve_threads(options.threads);
    std::vector<std::vector<std::vector<std::uint64_t>>> partial(static_cast<std::size_t>(threads), blank);
    parallel_for(static_cast<std::size_t>(n), threads, [&](int worker, std::size_t lead) {
        auto& table = partial[static_cast<std::size_t>(worker)];
        std::vector<int> v;
        v.push_back(static_cast<int>(lead) + 1);
        for (int x = 1; x <= n; ++x) {
            if (x != static_cast<int>(lead) + 1) v.push_back(x);
        }
        std::uint64_t index = 0;
        do {
            const auto r = count_132(v);
            if (index++ % 100 == 0) {
                const auto listed = occurrences_132(Permutation(v)).size();
                if (static_cast<std::int64_t>(listed) != r) {
                    fail(ErrorCode::internal, "occurrence counters disagree on " + Permutation(v).to_string());
                }
            }
            ++table[static_cast<std::size_t>(r)][static_cast<std::size_t>(lis_length(v))];
        } while (std::next_permutation(v.begin() + 1, v.end()));
    });
    for (const auto& table : partial) {
        for (std::size_t r = 0; r < table.size(); ++r) {
            for (std::size_t l = 0; l < table[r].size(); ++l) out.counts[r][l] += table[r][l];
        }
    }
    return out;
}

DistributionTable distribution(int n, const OracleOptions& options) {
    DistributionTable t = joint_distribution(n, options).marginal();
    while (t.counts.size() > 1 && t.counts.back() == 0) t.counts.pop_back();
    return t;
}

std::uint64_t count_exact(int n, int r, const OracleOptions& options) {
    return joint_distribution(n, options).marginal().at(r);
}

std::uint64_t count_exact_restricted(int n, int r, int k, const OracleOptions& options) {
    if (k < 1) fail(ErrorCode::invalid_argument, "k must be >= 1");
    return joint_distribution(n, options).restricted(r, k);
}

}  // namespace occ132
