#include "occ132/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "occ132/error.hpp"
#include "occ132/parallel.hpp"

namespace occ132 {

namespace {

enum Prop {
    component_bound,
    kernel_bound,
    southwest,
    total_order,
    rows,
    columns,
    in_cells,
    roundtrip_assemble,
    roundtrip_decompose,
    prop_count
};

const char* const prop_names[prop_count] = {
    "component_size_bound", "kernel_size_bound",  "southwest_infeasibility",
    "cell_total_order",     "row_dominance",      "column_dominance",
    "components_in_cells",  "roundtrip_assemble", "roundtrip_decompose",
};

struct Tally {
    std::vector<PropertyResult> results;
    std::vector<Permutation> worst;  // smallest counterexample per property

    Tally() : results(prop_count), worst(prop_count) {
        for (int p = 0; p < prop_count; ++p) results[static_cast<std::size_t>(p)].name = prop_names[p];
    }

    void check(Prop p, bool ok, const Permutation& witness) {
        auto& res = results[static_cast<std::size_t>(p)];
        ++res.checked;
        if (ok) return;
        ++res.violations;
        auto& w = worst[static_cast<std::size_t>(p)];
        if (res.violations == 1 || ShapeLess{}(witness, w)) w = witness;
    }

    void merge(const Tally& other) {
        for (int p = 0; p < prop_count; ++p) {
            auto& res = results[static_cast<std::size_t>(p)];
            const auto& o = other.results[static_cast<std::size_t>(p)];
            if (o.violations > 0) {
                auto& w = worst[static_cast<std::size_t>(p)];
                const auto& ow = other.worst[static_cast<std::size_t>(p)];
                if (res.violations == 0 || ShapeLess{}(ow, w)) w = ow;
            }
            res.checked += o.checked;
            res.violations += o.violations;
        }
    }
};

struct ShapeInfo {
    bool ordered = false;
    KernelShapeRecord record;
    CellDecomposition cells;
};

class ShapeCache {
public:
    const ShapeInfo& get(const Permutation& rho, Tally& tally) {
        auto it = cache_.find(rho);
        if (it != cache_.end()) return it->second;
        ShapeInfo info;
        info.cells = cell_decomposition(rho);
        bool southwest_ok = true;
        for (int m = 1; m <= rho.size(); ++m) {
            for (int l = 1; l <= rho.size() + 1; ++l) {
                if (southwest_infeasible(rho, {m, l}) && info.cells.feasible({m, l})) southwest_ok = false;
            }
        }
        tally.check(southwest, southwest_ok, rho);
        try {
            info.record = make_shape_record(rho);
            info.ordered = true;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::order_violation) throw;
        }
        tally.check(total_order, info.ordered, rho);
        return cache_.emplace(rho, std::move(info)).first->second;
    }

private:
    std::map<Permutation, ShapeInfo> cache_;
};

void check_permutation(const Permutation& pi, ShapeCache& cache, Tally& tally) {
    const OccurrenceGraph graph = build_occurrence_graph(pi);
    bool ok = true;
    for (const auto& comp : graph.components()) {
        if (comp.entry_count() > 2 * comp.occurrence_count() + 1) ok = false;
    }
    tally.check(component_bound, ok, pi);

    const Kernel ker = kernel_of(pi);
    const auto r = static_cast<std::int64_t>(graph.occurrences.size());
    tally.check(kernel_bound, ker.size <= 2 * r + 1, pi);

    const ShapeInfo& info = cache.get(ker.shape, tally);
    if (!info.ordered) return;
    const CellDecomposition dec = cell_contents(pi, ker);
    const int s = ker.size;

    bool rows_ok = true;
    for (int m = 1; m <= s; ++m) {
        for (int l = 1; l <= s + 1; ++l) {
            for (int l2 = l + 1; l2 <= s + 1; ++l2) {
                const auto a = dec.contents({m, l});
                const auto b = dec.contents({m, l2});
                if (a.empty() || b.empty() || !dec.feasible({m, l}) || !dec.feasible({m, l2})) continue;
                if (*std::min_element(a.begin(), a.end()) < *std::max_element(b.begin(), b.end())) rows_ok = false;
            }
        }
    }
    tally.check(rows, rows_ok, pi);

    bool cols_ok = true;
    for (int l = 1; l <= s + 1; ++l) {
        for (int m = 1; m <= s; ++m) {
            for (int m2 = m + 1; m2 <= s; ++m2) {
                const auto a = dec.content_positions({m, l});
                const auto b = dec.content_positions({m2, l});
                if (a.empty() || b.empty() || !dec.feasible({m, l}) || !dec.feasible({m2, l})) continue;
                if (a.front() < b.back()) cols_ok = false;
            }
        }
    }
    tally.check(columns, cols_ok, pi);

    Decomposition d;
    bool decomposed = true;
    try {
        d = decompose(pi);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::structure_violation) throw;
        decomposed = false;
    }
    tally.check(in_cells, decomposed, pi);
    if (!decomposed) return;
    tally.check(roundtrip_assemble, assemble(info.record, d.contents) == pi, pi);
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        visit(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

// All tuples of patterns with the given sizes, in lexicographic order.
void for_each_tuple(const std::vector<int>& sizes, std::vector<Permutation>& current, std::size_t slot,
                    const std::function<void(const std::vector<Permutation>&)>& visit) {
    if (slot == sizes.size()) {
        visit(current);
        return;
    }
    std::vector<int> v(static_cast<std::size_t>(sizes[slot]));
    std::iota(v.begin(), v.end(), 1);
    do {
        current[slot] = Permutation(v);
        for_each_tuple(sizes, current, slot + 1, visit);
    } while (std::next_permutation(v.begin(), v.end()));
}

void for_each_composition(int total, int parts, std::vector<int>& current, int slot,
                          const std::function<void(const std::vector<int>&)>& visit) {
    if (slot == parts - 1) {
        current[static_cast<std::size_t>(slot)] = total;
        visit(current);
        return;
    }
    for (int a = 0; a <= total; ++a) {
        current[static_cast<std::size_t>(slot)] = a;
        for_each_composition(total - a, parts, current, slot + 1, visit);
    }
}

void check_assembled(const KernelShapeRecord& rec, int max_n, Tally& tally) {
    const int f = rec.feasible_count();
    for (int extra = 0; extra + rec.size <= max_n; ++extra) {
        std::vector<int> sizes(static_cast<std::size_t>(f));
        for_each_composition(extra, f, sizes, 0, [&](const std::vector<int>& parts) {
            std::vector<Permutation> contents(parts.size());
            for_each_tuple(parts, contents, 0, [&](const std::vector<Permutation>& alpha) {
                const Permutation pi = assemble(rec, alpha);
                bool ok = false;
                try {
                    const Decomposition d = decompose(pi);
                    ok = d.shape == rec.shape && d.contents == alpha;
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::structure_violation) throw;
                }
                tally.check(roundtrip_decompose, ok, pi);
            });
        });
    }
}

}  // namespace

std::vector<PropertyResult> check_invariants(int max_n, int threads) {
    if (max_n < 1) fail(ErrorCode::invalid_argument, "max_n must be >= 1");
    const int workers = resolve_threads(threads);

    // Work items: (n, leading value) classes of S_n, then one item per
    // kernel shape for the assemble-first roundtrip.
    std::vector<std::pair<int, int>> classes;
    for (int n = 1; n <= max_n; ++n) {
        for (int lead = 1; lead <= n; ++lead) classes.emplace_back(n, lead);
    }
    std::vector<Tally> tallies(static_cast<std::size_t>(workers));
    std::vector<ShapeCache> caches(static_cast<std::size_t>(workers));
    parallel_for(classes.size(), workers, [&](int w, std::size_t idx) {
        const auto [n, lead] = classes[idx];
        std::vector<int> v{lead};
        for (int x = 1; x <= n; ++x) {
            if (x != lead) v.push_back(x);
        }
        do {
            check_permutation(Permutation(v), caches[static_cast<std::size_t>(w)], tallies[static_cast<std::size_t>(w)]);
        } while (std::next_permutation(v.begin() + 1, v.end()));
    });

    std::vector<Permutation> kernels;
    for (int s = 1; s <= max_n; ++s) {
        for_each_permutation(s, [&](const Permutation& p) {
            if (is_kernel_permutation(p)) kernels.push_back(p);
        });
    }
    parallel_for(kernels.size(), workers, [&](int w, std::size_t idx) {
        auto& tally = tallies[static_cast<std::size_t>(w)];
        const ShapeInfo& info = caches[static_cast<std::size_t>(w)].get(kernels[idx], tally);
        if (info.ordered) check_assembled(info.record, max_n, tally);
    });

    Tally total;
    for (const auto& t : tallies) total.merge(t);
    for (int p = 0; p < prop_count; ++p) {
        if (total.results[static_cast<std::size_t>(p)].violations > 0) {
            total.results[static_cast<std::size_t>(p)].counterexample = total.worst[static_cast<std::size_t>(p)].to_string();
        }
    }
    return total.results;
}

PropertyResult check_catalog_order(const ShapeCatalog& catalog) {
    PropertyResult res{"catalog_cell_order", 0, 0, {}};
    for (const auto& rec : catalog.records) {
        ++res.checked;
        try {
            order_feasible_cells(cell_decomposition(rec.shape));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::order_violation) throw;
            if (res.violations++ == 0) res.counterexample = rec.shape.to_string();
        }
    }
    return res;
}

PropertyResult check_catalog_records(const ShapeCatalog& catalog) {
    PropertyResult res{"catalog_records_rederived", 0, 0, {}};
    for (const auto& rec : catalog.records) {
        ++res.checked;
        const bool ok = is_kernel_permutation(rec.shape) && make_shape_record(rec.shape) == rec &&
                        rec.capacity <= catalog.max_occ;
        if (!ok && res.violations++ == 0) res.counterexample = rec.shape.to_string();
    }
    return res;
}

}  // namespace occ132
