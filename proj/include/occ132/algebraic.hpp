#pragma once

#include <optional>

#include "occ132/polynomial.hpp"
#include "occ132/series.hpp"

namespace occ132 {

/// An element (p(x) + q(x) y) / d(x) of Q(x)[y] / (y^2 - (1 - 4x)), i.e. a
/// rational function of x and sqrt(1 - 4x). Stored with integer polynomials
/// whose common polynomial gcd and integer content are removed and with a
/// positive leading coefficient of d.
class AlgebraicFunction {
public:
    AlgebraicFunction() : AlgebraicFunction(IntPoly{}, IntPoly{}, IntPoly{1}) {}
    AlgebraicFunction(IntPoly p, IntPoly q, IntPoly d);

    static AlgebraicFunction rational(const IntPoly& p, const IntPoly& d = IntPoly{1}) { return {p, IntPoly{}, d}; }
    /// y = sqrt(1 - 4x).
    static AlgebraicFunction sqrt_one_minus_4x() { return {IntPoly{}, IntPoly{1}, IntPoly{1}}; }
    /// x^k.
    static AlgebraicFunction x_power(int k) { return rational(IntPoly::monomial(k)); }

    const IntPoly& p() const { return p_; }
    const IntPoly& q() const { return q_; }
    const IntPoly& d() const { return d_; }
    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    AlgebraicFunction conjugate() const { return {p_, -q_, d_}; }
    /// Multiplication by x^k.
    AlgebraicFunction shifted(int k) const;

    friend AlgebraicFunction operator+(const AlgebraicFunction& a, const AlgebraicFunction& b);
    friend AlgebraicFunction operator-(const AlgebraicFunction& a, const AlgebraicFunction& b);
    friend AlgebraicFunction operator*(const AlgebraicFunction& a, const AlgebraicFunction& b);
    friend AlgebraicFunction operator*(const AlgebraicFunction& a, const mpz_class& c);
    /// Rationalizes through the conjugate; throws ErrorCode::math on b == 0.
    friend AlgebraicFunction operator/(const AlgebraicFunction& a, const AlgebraicFunction& b);
    AlgebraicFunction& operator+=(const AlgebraicFunction& b) { return *this = *this + b; }

    /// Decided by cross-multiplication, independent of representation.
    friend bool operator==(const AlgebraicFunction& a, const AlgebraicFunction& b);

private:
    IntPoly p_;
    IntPoly q_;
    IntPoly d_;
};

enum class ArithOp { add, sub, mul, div };
AlgebraicFunction af_arith(const AlgebraicFunction& a, const AlgebraicFunction& b, ArithOp op);

/// Taylor expansion through x^order. Throws ErrorCode::math ("pole at
/// origin") if negative powers survive the cancellation of x-factors in d.
PowerSeries af_to_series(const AlgebraicFunction& a, int order);

/// A reduced rational function num / den over Q.
struct RationalFunction {
    RatPoly num;
    RatPoly den;
};

/// a = (P + Q (1 - 4x)^{-r + 1/2}) / 2, i.e. P = 2p/d, Q = 2q (1 - 4x)^r / d.
struct PQForm {
    int r = 0;
    bool polynomial = false;  // both divisions exact
    RationalFunction P;
    RationalFunction Q;

    /// Set only when `polynomial`.
    std::optional<RatPoly> P_poly() const;
    std::optional<RatPoly> Q_poly() const;
};

PQForm extract_PQ(const AlgebraicFunction& a, int r);

/// Inverse of extract_PQ.
AlgebraicFunction reassemble_PQ(const PQForm& form);

}  // namespace occ132
