#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace occ132 {

/// Dense univariate polynomial, ascending coefficients, no trailing zeros
/// (the zero polynomial has no coefficients).
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
    Polynomial(std::initializer_list<long> coefficients) {
        for (long v : coefficients) c_.emplace_back(v);
        trim();
    }

    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
    static Polynomial monomial(int k, const T& v = T(1)) {
        std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
        c.back() = v;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coefficients() const { return c_; }
    T operator[](int k) const { return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : T(0); }
    const T& leading() const { return c_.back(); }

    /// Lowest k with a nonzero coefficient; -1 for zero.
    int valuation() const {
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (sgn(c_[k]) != 0) return static_cast<int>(k);
        }
        return -1;
    }

    T evaluate(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = T(acc * x + *it);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const T& v) {
        for (auto& x : c_) x *= v;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= T(-1); }
    friend Polynomial operator*(Polynomial a, const T& v) { return a *= v; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Polynomial<mpz_class>;
using RatPoly = Polynomial<mpq_class>;

RatPoly to_rational(const IntPoly& p);

/// Quotient and remainder over Q. Throws on a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Monic gcd over Q; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Scales a family of rational polynomials by a common positive factor so all
/// become integral with jointly coprime coefficients.
std::vector<IntPoly> primitive_integer_family(const std::vector<RatPoly>& polys);

/// Integer content (gcd of coefficients, >= 0).
mpz_class content(const IntPoly& p);

/// Integral iff every coefficient has denominator 1.
bool is_integral(const RatPoly& p);

/// Ascending-degree text like "2x^4 - 4x^3 + 29x^2 - 15x + 2".
std::string to_string(const RatPoly& p, const std::string& var = "x");

}  // namespace occ132
