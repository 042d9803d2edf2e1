#pragma once

#include <gmpxx.h>

#include <vector>

namespace occ132 {

/// Truncated formal power series with exact rational coefficients of
/// x^0..x^order. Binary operations truncate to the smaller order.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(int order);
    PowerSeries(int order, const std::vector<mpq_class>& coefficients);

    static PowerSeries constant(int order, const mpq_class& c);
    /// c * x^k.
    static PowerSeries monomial(int order, int k, const mpq_class& c = 1);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpq_class& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    mpq_class& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }

    PowerSeries truncated(int order) const;
    /// Multiplication by x^k (k >= 0), keeping the order.
    PowerSeries shifted(int k) const;
    bool is_zero() const;
    /// Every coefficient is an integer >= 0.
    bool is_counting_series() const;

    PowerSeries& operator+=(const PowerSeries& other);
    PowerSeries& operator-=(const PowerSeries& other);
    PowerSeries& operator*=(const mpq_class& c);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(PowerSeries a, const mpq_class& c) { return a *= c; }
    friend PowerSeries operator*(const mpq_class& c, PowerSeries a) { return a *= c; }

    /// Coefficientwise equality up to the shared order.
    friend bool operator==(const PowerSeries& a, const PowerSeries& b);

private:
    std::vector<mpq_class> coeffs_;
};

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
/// c with c * b = a; requires b[0] != 0.
PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b);

/// Binomial expansion of (1 - 4x)^{1/2}.
PowerSeries sqrt_one_minus_4x(int order);

}  // namespace occ132
