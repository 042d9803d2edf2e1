// Brute-force references used only by the tests. Deliberately naive.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace testing_support {

inline std::int64_t naive_count_132(const std::vector<int>& v) {
    std::int64_t c = 0;
    const auto n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (v[i] < v[k] && v[k] < v[j]) ++c;
    return c;
}

// Longest increasing subsequence by trying every subset.
inline int naive_lis(const std::vector<int>& v) {
    const auto n = v.size();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int last = 0, len = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1u)) continue;
            if (len > 0 && v[i] <= last) ok = false;
            last = v[i];
            ++len;
        }
        if (ok) best = std::max(best, len);
    }
    return best;
}

template <class F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do f(v);
    while (std::next_permutation(v.begin(), v.end()));
}

inline mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline mpz_class factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// GMP leaves a two-argument mpq_class unreduced.
inline mpq_class ratio(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline mpz_class catalan(long n) { return binomial(2 * n, n) / (n + 1); }

// Evaluates an integer polynomial given by descending coefficients.
inline mpz_class horner(const std::vector<long long>& desc, const mpz_class& x) {
    mpz_class acc = 0;
    for (long long c : desc) acc = acc * x + mpz_class(std::to_string(c));
    return acc;
}

}  // namespace testing_support
