#include "occ132/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "occ132/error.hpp"

namespace occ132 {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : values_) {
        if (v < 1 || v > n) {
            fail(ErrorCode::invalid_argument,
                 "value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            fail(ErrorCode::invalid_argument, "duplicate value " + std::to_string(v));
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv), Unchecked{});
}

std::string Permutation::to_string() const {
    std::string out;
    if (size() <= 9) {
        for (int v : values_) out.push_back(static_cast<char>('0' + v));
        return out;
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(values_[i]);
    }
    return out;
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> values;
    if (text.find(',') == std::string_view::npos) {
        for (char ch : text) {
            if (ch < '0' || ch > '9') {
                fail(ErrorCode::invalid_argument, "bad permutation character '" + std::string(1, ch) + "'");
            }
            values.push_back(ch - '0');
        }
        return Permutation(std::move(values));
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto token = text.substr(start, end - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
            fail(ErrorCode::invalid_argument, "bad permutation token '" + std::string(token) + "'");
        }
        values.push_back(v);
        start = end + 1;
    }
    return Permutation(std::move(values));
}

Permutation make_permutation(std::vector<int> values) { return Permutation(std::move(values)); }

std::vector<Occurrence> occurrences_132(const Permutation& pi) {
    std::vector<Occurrence> out;
    const int n = pi.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (pi(j) < pi(i)) continue;
            for (int k = j + 1; k <= n; ++k) {
                if (pi(i) < pi(k) && pi(k) < pi(j)) out.push_back({i, j, k});
            }
        }
    }
    return out;
}

std::int64_t count_132(std::span<const int> values) {
    // For each k playing the role of "2", sweep j < k: every j with a larger
    // value closes one occurrence per smaller value seen strictly before it.
    std::int64_t total = 0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        const int v = values[k];
        std::int64_t smaller = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (values[j] > v) {
                total += smaller;
            } else {
                ++smaller;
            }
        }
    }
    return total;
}

Permutation reduce_to_pattern(std::span<const int> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<int> ranks(values.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 && values[order[r]] == values[order[r - 1]]) {
            fail(ErrorCode::invalid_argument, "duplicate value " + std::to_string(values[order[r]]));
        }
        ranks[order[r]] = static_cast<int>(r) + 1;
    }
    return Permutation(std::move(ranks), Permutation::Unchecked{});
}

int lis_length(std::span<const int> values) {
    std::vector<int> tails;
    for (int v : values) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end()) {
            tails.push_back(v);
        } else {
            *it = v;
        }
    }
    return static_cast<int>(tails.size());
}

bool avoids_monotone(const Permutation& pi, int k) {
    if (k <= 0) return false;
    return lis_length(pi.values()) < k;
}

}  // namespace occ132
