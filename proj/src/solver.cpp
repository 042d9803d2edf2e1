#include "occ132/solver.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "occ132/error.hpp"

namespace occ132 {

std::vector<ShapeGroup> group_shapes(const ShapeCatalog& catalog) {
    std::map<std::tuple<int, int, int>, std::int64_t> counts;
    for (const auto& rec : catalog.records) ++counts[{rec.size, rec.capacity, rec.feasible_count()}];
    std::vector<ShapeGroup> out;
    for (const auto& [key, mult] : counts) out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), mult});
    return out;
}

std::vector<RestrictedGroup> group_restricted_shapes(const ShapeCatalog& catalog) {
    std::map<std::tuple<int, int, int, std::vector<int>>, std::int64_t> counts;
    for (const auto& rec : catalog.records) {
        std::vector<int> ls = rec.lis_ne;
        std::sort(ls.begin(), ls.end());
        ++counts[{rec.size, rec.capacity, rec.lis, ls}];
    }
    std::vector<RestrictedGroup> out;
    for (const auto& [key, mult] : counts) {
        out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key), mult});
    }
    return out;
}

namespace {

struct SeriesRing {
    using Value = PowerSeries;
    int order;

    Value zero() const { return PowerSeries(order); }
    Value one() const { return PowerSeries::constant(order, 1); }
    Value shift(const Value& v, int k) const { return v.shifted(k); }
    Value scale(const Value& v, std::int64_t m) const { return v * mpq_class(mpz_class(static_cast<long>(m))); }
    Value divide(const Value& a, const Value& b) const { return ps_div(a, b); }
};

struct FieldRing {
    using Value = AlgebraicFunction;

    Value zero() const { return {}; }
    Value one() const { return AlgebraicFunction::rational(IntPoly{1}); }
    Value shift(const Value& v, int k) const { return v.shifted(k); }
    Value scale(const Value& v, std::int64_t m) const { return v * mpz_class(static_cast<long>(m)); }
    Value divide(const Value& a, const Value& b) const { return a / b; }
};

template <class Ring>
typename Ring::Value power_of(const Ring& ring, const typename Ring::Value& base, int e) {
    auto out = ring.one();
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
}

// [t^j] (sum_{i < r} lower[i] t^i)^f for f = 0..max_f, j = 0..r.
template <class Ring>
std::vector<std::vector<typename Ring::Value>> composition_powers(const Ring& ring,
                                                                   const std::vector<typename Ring::Value>& lower, int r,
                                                                   int max_f) {
    using V = typename Ring::Value;
    std::vector<std::vector<V>> pw(static_cast<std::size_t>(max_f) + 1, std::vector<V>(static_cast<std::size_t>(r) + 1, ring.zero()));
    pw[0][0] = ring.one();
    for (int f = 1; f <= max_f; ++f) {
        for (int j = 0; j <= r; ++j) {
            V acc = ring.zero();
            bool any = false;
            for (int i = 0; i <= std::min(j, r - 1); ++i) {
                const V& prev = pw[static_cast<std::size_t>(f - 1)][static_cast<std::size_t>(j - i)];
                if (prev.is_zero()) continue;
                acc = any ? acc + lower[static_cast<std::size_t>(i)] * prev : lower[static_cast<std::size_t>(i)] * prev;
                any = true;
            }
            pw[static_cast<std::size_t>(f)][static_cast<std::size_t>(j)] = std::move(acc);
        }
    }
    return pw;
}

// Psi_r for r >= 1 from Psi_0..Psi_{r-1}: every shape except rho_1 = 1 only
// draws on lower levels, and rho_1 contributes 2x Psi_0 Psi_r plus lower
// terms, so Psi_r (1 - 2x Psi_0) = (all remaining terms).
template <class Ring>
typename Ring::Value solve_level(const Ring& ring, const std::vector<ShapeGroup>& groups,
                                 const std::vector<typename Ring::Value>& lower, int r) {
    int max_f = 0;
    for (const auto& g : groups) {
        if (g.capacity <= r) max_f = std::max(max_f, g.feasible);
    }
    const auto pw = composition_powers(ring, lower, r, max_f);
    auto total = ring.zero();
    for (const auto& g : groups) {
        if (g.capacity > r) continue;
        const auto& term = pw[static_cast<std::size_t>(g.feasible)][static_cast<std::size_t>(r - g.capacity)];
        if (term.is_zero()) continue;
        total = total + ring.scale(ring.shift(term, g.size), g.multiplicity);
    }
    const auto divisor = ring.one() - ring.scale(ring.shift(lower[0], 1), 2);
    return ring.divide(total, divisor);
}

void check_rho1_group(const std::vector<ShapeGroup>& groups) {
    for (const auto& g : groups) {
        if (g.capacity == 0 && (g.size != 1 || g.feasible != 2 || g.multiplicity != 1)) {
            fail(ErrorCode::internal, "catalog has an unexpected capacity-0 shape");
        }
    }
}

}  // namespace

PsiSolver::PsiSolver(ShapeCatalog catalog, int order)
    : catalog_(std::move(catalog)),
      order_(order),
      groups_(group_shapes(catalog_)),
      restricted_groups_(group_restricted_shapes(catalog_)) {
    if (order < 0) fail(ErrorCode::invalid_argument, "order must be >= 0");
    check_rho1_group(groups_);
}

void PsiSolver::require_level(int r) const {
    if (r < 0) fail(ErrorCode::invalid_argument, "occurrence count must be >= 0");
    if (r > catalog_.max_occ) {
        fail(ErrorCode::missing_shapes, "catalog covers r <= " + std::to_string(catalog_.max_occ) + ", requested " + std::to_string(r));
    }
}

const PowerSeries& PsiSolver::psi_series(int r) {
    require_level(r);
    const SeriesRing ring{order_};
    if (series_.empty()) {
        // Psi_0 - 1 = x Psi_0^2: Catalan numbers.
        PowerSeries c(order_);
        c[0] = 1;
        for (int n = 0; n < order_; ++n) {
            mpq_class acc = 0;
            for (int i = 0; i <= n; ++i) acc += c[i] * c[n - i];
            c[n + 1] = acc;
        }
        series_.push_back(std::move(c));
    }
    while (static_cast<int>(series_.size()) <= r) {
        const int level = static_cast<int>(series_.size());
        PowerSeries next = solve_level(ring, groups_, series_, level);
        if (!next.is_counting_series()) {
            fail(ErrorCode::internal, "Psi_" + std::to_string(level) + " has a non-integral or negative coefficient");
        }
        series_.push_back(std::move(next));
    }
    return series_[static_cast<std::size_t>(r)];
}

const AlgebraicFunction& PsiSolver::psi_closed_form(int r) {
    require_level(r);
    const FieldRing ring;
    if (closed_.empty()) {
        // (1 - y) / (2x)
        closed_.emplace_back(IntPoly{1}, IntPoly{-1}, IntPoly{0, 2});
    }
    while (static_cast<int>(closed_.size()) <= r) {
        const int level = static_cast<int>(closed_.size());
        closed_.push_back(solve_level(ring, groups_, closed_, level));
    }
    return closed_[static_cast<std::size_t>(r)];
}

const PowerSeries& PsiSolver::phi_series(int r, int k) {
    require_level(r);
    if (k <= 0) {
        auto [it, inserted] = phi_.try_emplace({r, 0}, order_);
        return it->second;
    }
    if (auto it = phi_.find({r, k}); it != phi_.end()) return it->second;

    // Lower occurrence counts at this k and everything at smaller k first.
    for (int i = 0; i < r; ++i) phi_series(i, k);
    const PowerSeries& prev0 = phi_series(0, k - 1);

    PowerSeries total = PowerSeries::constant(order_, r == 0 ? 1 : 0);
    for (const auto& g : restricted_groups_) {
        // A shape whose own LIS reaches k already contains 12...k.
        if (g.capacity > r || g.lis >= k) continue;
        const int budget = r - g.capacity;
        std::vector<PowerSeries> conv{PowerSeries::constant(order_, 1)};
        for (int l : g.lis_ne) {
            std::vector<PowerSeries> next(static_cast<std::size_t>(budget) + 1, PowerSeries(order_));
            for (int i = 0; i <= budget; ++i) {
                // Phi_r(x; k) itself appears only through rho_1's right cell.
                if (l == 0 && i == r) continue;
                const PowerSeries& cell = phi_series(i, k - l);
                if (cell.is_zero()) continue;
                for (std::size_t a = 0; a < conv.size() && a + static_cast<std::size_t>(i) <= static_cast<std::size_t>(budget); ++a) {
                    if (conv[a].is_zero()) continue;
                    next[a + static_cast<std::size_t>(i)] += conv[a] * cell;
                }
            }
            conv = std::move(next);
        }
        if (static_cast<int>(conv.size()) > budget) {
            total += conv[static_cast<std::size_t>(budget)].shifted(g.size) * mpq_class(mpz_class(static_cast<long>(g.multiplicity)));
        }
    }
    const PowerSeries divisor = PowerSeries::constant(order_, 1) - prev0.shifted(1);
    PowerSeries result = ps_div(total, divisor);
    if (!result.is_counting_series()) {
        fail(ErrorCode::internal, "Phi_" + std::to_string(r) + "(x;" + std::to_string(k) + ") is not a counting series");
    }
    return phi_.emplace(std::make_pair(r, k), std::move(result)).first->second;
}

std::pair<PowerSeries, PowerSeries> PsiSolver::exceptional_contribution_series(int r) {
    require_level(r);
    const Permutation shape = exceptional_shape(r);
    const auto it = std::find_if(catalog_.records.begin(), catalog_.records.end(), [&](const auto& rec) { return rec.shape == shape; });
    if (it == catalog_.records.end()) fail(ErrorCode::missing_shapes, "exceptional shape missing from catalog");
    const SeriesRing ring{order_};
    std::vector<PowerSeries> lower;
    for (int i = 0; i < std::max(r, 1); ++i) lower.push_back(psi_series(i));
    const auto pw = composition_powers(ring, lower, r, it->feasible_count());
    PowerSeries from_record = pw[static_cast<std::size_t>(it->feasible_count())][static_cast<std::size_t>(r - it->capacity)].shifted(it->size);
    PowerSeries from_formula = power_of(ring, psi_series(0), r + 2).shifted(2 * r + 1);
    return {std::move(from_record), std::move(from_formula)};
}

std::pair<AlgebraicFunction, AlgebraicFunction> PsiSolver::exceptional_contribution_closed_form(int r) {
    require_level(r);
    const Permutation shape = exceptional_shape(r);
    const auto it = std::find_if(catalog_.records.begin(), catalog_.records.end(), [&](const auto& rec) { return rec.shape == shape; });
    if (it == catalog_.records.end()) fail(ErrorCode::missing_shapes, "exceptional shape missing from catalog");
    const FieldRing ring;
    std::vector<AlgebraicFunction> lower;
    for (int i = 0; i < std::max(r, 1); ++i) lower.push_back(psi_closed_form(i));
    const auto pw = composition_powers(ring, lower, r, it->feasible_count());
    AlgebraicFunction from_record = pw[static_cast<std::size_t>(it->feasible_count())][static_cast<std::size_t>(r - it->capacity)].shifted(it->size);
    AlgebraicFunction from_formula = power_of(ring, psi_closed_form(0), r + 2).shifted(2 * r + 1);
    return {std::move(from_record), std::move(from_formula)};
}

}  // namespace occ132
