#include "occ132/algebraic.hpp"

#include <sstream>

#include "occ132/error.hpp"

namespace occ132 {

RatPoly to_rational(const IntPoly& p) {
    std::vector<mpq_class> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) fail(ErrorCode::math, "polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPoly{}, a};
    std::vector<mpq_class> rem = a.coefficients();
    std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, mpq_class(0));
    const mpq_class lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const mpq_class factor = rem[static_cast<std::size_t>(k + b.degree())] / lead;
        quot[static_cast<std::size_t>(k)] = factor;
        if (sgn(factor) == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= factor * b[j];
    }
    rem.resize(static_cast<std::size_t>(b.degree()));
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly u = a;
    RatPoly v = b;
    while (!v.is_zero()) {
        RatPoly r = divmod(u, v).second;
        u = std::move(v);
        v = std::move(r);
    }
    if (u.is_zero()) return u;
    const mpq_class inv = 1 / u.leading();
    return u * inv;
}

mpz_class content(const IntPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p.coefficients()) g = ::gcd(g, c);
    return g;
}

std::vector<IntPoly> primitive_integer_family(const std::vector<RatPoly>& polys) {
    mpz_class den = 1;
    for (const auto& p : polys) {
        for (const auto& c : p.coefficients()) den = lcm(den, mpz_class(c.get_den()));
    }
    std::vector<IntPoly> out;
    mpz_class g = 0;
    for (const auto& p : polys) {
        std::vector<mpz_class> c;
        for (const auto& v : p.coefficients()) {
            c.emplace_back(mpz_class(v.get_num() * (den / v.get_den())));
            g = ::gcd(g, c.back());
        }
        out.emplace_back(std::move(c));
    }
    if (g > 1) {
        for (auto& p : out) {
            std::vector<mpz_class> c = p.coefficients();
            for (auto& v : c) v /= g;
            p = IntPoly(std::move(c));
        }
    }
    return out;
}

bool is_integral(const RatPoly& p) {
    for (const auto& c : p.coefficients()) {
        if (c.get_den() != 1) return false;
    }
    return true;
}

std::string to_string(const RatPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        mpq_class c = p[k];
        if (sgn(c) == 0) continue;
        if (first) {
            if (sgn(c) < 0) out << "-";
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        c = abs(c);
        if (k == 0 || c != 1) out << c.get_str();
        if (k >= 1) out << var;
        if (k >= 2) out << "^" << k;
        first = false;
    }
    return out.str();
}

namespace {

const IntPoly& one_minus_4x() {
    static const IntPoly p{1, -4};
    return p;
}

}  // namespace

AlgebraicFunction::AlgebraicFunction(IntPoly p, IntPoly q, IntPoly d) {
    if (d.is_zero()) fail(ErrorCode::math, "zero denominator");
    if (p.is_zero() && q.is_zero()) {
        p_ = {};
        q_ = {};
        d_ = IntPoly{1};
        return;
    }
    const RatPoly rp = to_rational(p), rq = to_rational(q), rd = to_rational(d);
    const RatPoly g = gcd(gcd(rp, rq), rd);
    auto family = primitive_integer_family({divmod(rp, g).first, divmod(rq, g).first, divmod(rd, g).first});
    if (sgn(family[2].leading()) < 0) {
        for (auto& f : family) f = -f;
    }
    p_ = std::move(family[0]);
    q_ = std::move(family[1]);
    d_ = std::move(family[2]);
}

AlgebraicFunction AlgebraicFunction::shifted(int k) const {
    const IntPoly xk = IntPoly::monomial(k);
    return {p_ * xk, q_ * xk, d_};
}

AlgebraicFunction operator+(const AlgebraicFunction& a, const AlgebraicFunction& b) {
    if (a.d_ == b.d_) return {a.p_ + b.p_, a.q_ + b.q_, a.d_};
    return {a.p_ * b.d_ + b.p_ * a.d_, a.q_ * b.d_ + b.q_ * a.d_, a.d_ * b.d_};
}

AlgebraicFunction operator-(const AlgebraicFunction& a, const AlgebraicFunction& b) {
    if (a.d_ == b.d_) return {a.p_ - b.p_, a.q_ - b.q_, a.d_};
    return {a.p_ * b.d_ - b.p_ * a.d_, a.q_ * b.d_ - b.q_ * a.d_, a.d_ * b.d_};
}

AlgebraicFunction operator*(const AlgebraicFunction& a, const AlgebraicFunction& b) {
    return {a.p_ * b.p_ + a.q_ * b.q_ * one_minus_4x(), a.p_ * b.q_ + a.q_ * b.p_, a.d_ * b.d_};
}

AlgebraicFunction operator*(const AlgebraicFunction& a, const mpz_class& c) { return {a.p_ * c, a.q_ * c, a.d_}; }

AlgebraicFunction operator/(const AlgebraicFunction& a, const AlgebraicFunction& b) {
    if (b.is_zero()) fail(ErrorCode::math, "division by the zero element");
    // (pa + qa y)(pb - qb y) db / (da (pb^2 - qb^2 (1 - 4x)))
    const IntPoly norm = b.p_ * b.p_ - b.q_ * b.q_ * one_minus_4x();
    const IntPoly p = (a.p_ * b.p_ - a.q_ * b.q_ * one_minus_4x()) * b.d_;
    const IntPoly q = (a.q_ * b.p_ - a.p_ * b.q_) * b.d_;
    return {p, q, a.d_ * norm};
}

bool operator==(const AlgebraicFunction& a, const AlgebraicFunction& b) {
    return a.p_ * b.d_ == b.p_ * a.d_ && a.q_ * b.d_ == b.q_ * a.d_;
}

AlgebraicFunction af_arith(const AlgebraicFunction& a, const AlgebraicFunction& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    fail(ErrorCode::invalid_argument, "unknown operation");
}

namespace {

PowerSeries series_of(const IntPoly& p, int order) {
    PowerSeries s(order);
    for (int k = 0; k <= std::min(order, p.degree()); ++k) s[k] = mpq_class(p[k]);
    return s;
}

}  // namespace

PowerSeries af_to_series(const AlgebraicFunction& a, int order) {
    const int v = a.d().valuation();
    const int work = order + v;
    const PowerSeries num = series_of(a.p(), work) + series_of(a.q(), work) * sqrt_one_minus_4x(work);
    for (int k = 0; k < v; ++k) {
        if (sgn(num[k]) != 0) fail(ErrorCode::math, "pole at origin");
    }
    PowerSeries top(order), bottom(order);
    for (int k = 0; k <= order; ++k) {
        top[k] = num[k + v];
        bottom[k] = mpq_class(a.d()[k + v]);
    }
    return ps_div(top, bottom);
}

namespace {

RationalFunction reduce(const RatPoly& num, const RatPoly& den) {
    const RatPoly g = gcd(num, den);
    if (g.is_zero() || g.degree() == 0) return {num * (1 / den.leading()), den * (1 / den.leading())};
    RatPoly n = divmod(num, g).first;
    RatPoly d = divmod(den, g).first;
    const mpq_class lead = d.leading();
    return {n * (1 / lead), d * (1 / lead)};
}

RatPoly power(const RatPoly& base, int e) {
    RatPoly out = RatPoly{1};
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
}

}  // namespace

std::optional<RatPoly> PQForm::P_poly() const {
    if (!polynomial) return std::nullopt;
    return P.num;
}

std::optional<RatPoly> PQForm::Q_poly() const {
    if (!polynomial) return std::nullopt;
    return Q.num;
}

PQForm extract_PQ(const AlgebraicFunction& a, int r) {
    PQForm out;
    out.r = r;
    const RatPoly d = to_rational(a.d());
    const RatPoly twice_p = to_rational(a.p()) * mpq_class(2);
    RatPoly twice_q = to_rational(a.q()) * mpq_class(2);
    if (r >= 0) {
        twice_q = twice_q * power(RatPoly{1, -4}, r);
        out.Q = reduce(twice_q, d);
    } else {
        out.Q = reduce(twice_q, d * power(RatPoly{1, -4}, -r));
    }
    out.P = reduce(twice_p, d);
    out.polynomial = out.P.den.degree() == 0 && out.Q.den.degree() == 0;
    return out;
}

AlgebraicFunction reassemble_PQ(const PQForm& form) {
    // (P/Pd + (Q/Qd) y (1 - 4x)^{-r}) / 2
    const int r = form.r;
    const RatPoly w = power(RatPoly{1, -4}, r >= 0 ? r : 0);
    const RatPoly wneg = power(RatPoly{1, -4}, r < 0 ? -r : 0);
    const RatPoly p = form.P.num * form.Q.den * w;
    const RatPoly q = form.Q.num * form.P.den * wneg;
    const RatPoly d = form.P.den * form.Q.den * w * mpq_class(2);
    auto family = primitive_integer_family({p, q, d});
    return {family[0], family[1], family[2]};
}

}  // namespace occ132
