#include "occ132/series.hpp"

#include <algorithm>

#include "occ132/error.hpp"

namespace occ132 {

PowerSeries::PowerSeries(int order) {
    if (order < 0) fail(ErrorCode::invalid_argument, "series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, mpq_class(0));
}

PowerSeries::PowerSeries(int order, const std::vector<mpq_class>& coefficients) : PowerSeries(order) {
    const std::size_t n = std::min(coeffs_.size(), coefficients.size());
    std::copy_n(coefficients.begin(), n, coeffs_.begin());
}

PowerSeries PowerSeries::constant(int order, const mpq_class& c) {
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

PowerSeries PowerSeries::monomial(int order, int k, const mpq_class& c) {
    PowerSeries s(order);
    if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
    return s;
}

PowerSeries PowerSeries::truncated(int order) const {
    PowerSeries s(order);
    const std::size_t n = std::min(coeffs_.size(), s.coeffs_.size());
    std::copy_n(coeffs_.begin(), n, s.coeffs_.begin());
    return s;
}

PowerSeries PowerSeries::shifted(int k) const {
    PowerSeries s(order());
    for (int n = order(); n >= k; --n) s[n] = (*this)[n - k];
    return s;
}

bool PowerSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

bool PowerSeries::is_counting_series() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpq_class& c) { return c.get_den() == 1 && sgn(c) >= 0; });
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
    if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
    if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const mpq_class& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order(), b.order());
    PowerSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (sgn(b[j]) == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order(), b.order());
    for (int n = 0; n <= order; ++n) {
        if (a[n] != b[n]) return false;
    }
    return true;
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) { return a + b; }
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) { return a - b; }
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }

PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b) {
    if (sgn(b[0]) == 0) fail(ErrorCode::math, "series division by a divisor with zero constant term");
    const int order = std::min(a.order(), b.order());
    PowerSeries c(order);
    const mpq_class inv = 1 / b[0];
    for (int n = 0; n <= order; ++n) {
        mpq_class acc = a[n];
        for (int k = 1; k <= n; ++k) {
            if (sgn(b[k]) != 0) acc -= b[k] * c[n - k];
        }
        c[n] = acc * inv;
    }
    return c;
}

PowerSeries sqrt_one_minus_4x(int order) {
    // Ratio of consecutive terms of sum binom(1/2, n) (-4x)^n:
    // a_{n+1} / a_n = (1/2 - n)(-4) / (n + 1) = 2(2n - 1) / (n + 1).
    PowerSeries s(order);
    s[0] = 1;
    for (int n = 0; n < order; ++n) {
        mpq_class ratio(2 * (2 * n - 1), n + 1);
        ratio.canonicalize();
        s[n + 1] = s[n] * ratio;
    }
    return s;
}

}  // namespace occ132
