#include "occ132/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "occ132/error.hpp"
#include "occ132/parallel.hpp"

namespace occ132 {

ShapeCatalog ShapeCatalog::restricted_to(int r) const {
    if (r > max_occ) {
        fail(ErrorCode::missing_shapes, "catalog covers capacity <= " + std::to_string(max_occ) + ", requested " + std::to_string(r));
    }
    ShapeCatalog out;
    out.max_occ = r;
    for (const auto& rec : records) {
        if (rec.capacity <= r) out.records.push_back(rec);
    }
    return out;
}

Permutation exceptional_shape(int r) {
    if (r < 1) fail(ErrorCode::invalid_argument, "exceptional shape needs r >= 1");
    std::vector<int> v{2 * r - 1, 2 * r + 1};
    for (int j = 0; j <= r - 2; ++j) {
        v.push_back(2 * r - 2 * j - 3);
        v.push_back(2 * r - 2 * j);
    }
    v.push_back(2);
    return Permutation(std::move(v));
}

namespace {

// Depth-first search over one-line prefixes of permutations of {1..size}
// whose 132 count stays within budget. Completed permutations are tested for
// connectivity of their occurrence graph.
class KernelSearch {
public:
    KernelSearch(int size, int budget) : size_(size), budget_(budget) {
        values_.resize(static_cast<std::size_t>(size));
        used_.assign(static_cast<std::size_t>(size) + 1, 0);
    }

    // Explores all completions of the given prefix.
    void run(std::span<const int> prefix, std::vector<Permutation>& out) {
        out_ = &out;
        occurrences_.clear();
        std::fill(used_.begin(), used_.end(), 0);
        int count = 0;
        for (std::size_t d = 0; d < prefix.size(); ++d) {
            const int v = prefix[d];
            if (v < 1 || v > size_ || used_[static_cast<std::size_t>(v)]) return;
            const int added = closing_count(static_cast<int>(d), v);
            count += added;
            if (count > budget_) return;
            values_[d] = v;
            used_[static_cast<std::size_t>(v)] = 1;
            record_occurrences(static_cast<int>(d), v, added);
        }
        if (static_cast<int>(prefix.size()) > 0 && future_lower_bound(static_cast<int>(prefix.size())) + count > budget_) return;
        descend(static_cast<int>(prefix.size()), count);
    }

private:
    // Occurrences in which a value v placed at depth d plays the final role.
    int closing_count(int d, int v) const {
        int smaller = 0;
        int added = 0;
        for (int j = 0; j < d; ++j) {
            if (values_[static_cast<std::size_t>(j)] > v) {
                added += smaller;
            } else {
                ++smaller;
            }
        }
        return added;
    }

    void record_occurrences(int d, int v, int added) {
        if (added == 0) return;
        for (int j = 1; j < d; ++j) {
            if (values_[static_cast<std::size_t>(j)] <= v) continue;
            for (int i = 0; i < j; ++i) {
                if (values_[static_cast<std::size_t>(i)] < v) occurrences_.push_back({i, j, d});
            }
        }
    }

    // Every unused value u will later close an occurrence with each prefix
    // pair i < j having values_[i] < u < values_[j], wherever it is placed.
    int future_lower_bound(int d) const {
        int bound = 0;
        for (int u = 1; u <= size_; ++u) {
            if (used_[static_cast<std::size_t>(u)]) continue;
            int smaller = 0;
            for (int j = 0; j < d; ++j) {
                const int w = values_[static_cast<std::size_t>(j)];
                if (w > u) {
                    bound += smaller;
                } else {
                    ++smaller;
                }
            }
        }
        return bound;
    }

    void descend(int d, int count) {
        if (d == size_) {
            if (connected(count)) out_->push_back(Permutation(values_));
            return;
        }
        for (int v = 1; v <= size_; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            const int added = closing_count(d, v);
            if (count + added > budget_) continue;
            values_[static_cast<std::size_t>(d)] = v;
            used_[static_cast<std::size_t>(v)] = 1;
            if (d + 1 == size_ || count + added + future_lower_bound(d + 1) <= budget_) {
                const std::size_t mark = occurrences_.size();
                record_occurrences(d, v, added);
                descend(d + 1, count + added);
                occurrences_.resize(mark);
            }
            used_[static_cast<std::size_t>(v)] = 0;
        }
    }

    bool connected(int count) const {
        if (size_ == 1) return true;
        if (size_ > 2 * count + 1) return false;
        std::vector<int> parent(static_cast<std::size_t>(size_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
            return a;
        };
        int pieces = size_;
        for (const auto& o : occurrences_) {
            for (int p : {o.i, o.k}) {
                const int a = find(p);
                const int b = find(o.j);
                if (a != b) {
                    parent[static_cast<std::size_t>(a)] = b;
                    --pieces;
                }
            }
        }
        return pieces == 1;
    }

    struct Triple {
        int i, j, k;
    };

    int size_;
    int budget_;
    std::vector<int> values_;
    std::vector<char> used_;
    std::vector<Triple> occurrences_;
    std::vector<Permutation>* out_ = nullptr;
};

}  // namespace

std::vector<Permutation> search_kernel_permutations(int size, int max_capacity, int threads) {
    if (size < 1) return {};
    if (size == 1) return {Permutation::identity(1)};
    // Work units: ordered pairs of leading values.
    std::vector<std::pair<int, int>> prefixes;
    for (int a = 1; a <= size; ++a) {
        for (int b = 1; b <= size; ++b) {
            if (a != b) prefixes.emplace_back(a, b);
        }
    }
    std::vector<std::vector<Permutation>> found(prefixes.size());
    parallel_for(prefixes.size(), resolve_threads(threads), [&](int, std::size_t idx) {
        KernelSearch search(size, max_capacity);
        const int prefix[2] = {prefixes[idx].first, prefixes[idx].second};
        search.run(prefix, found[idx]);
    });
    std::vector<Permutation> out;
    for (auto& part : found) {
        for (auto& p : part) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ShapeCatalog enumerate_kernel_shapes(int r, const EnumerationOptions& options) {
    if (r < 0) fail(ErrorCode::invalid_argument, "max_occ must be nonnegative");
    const int threads = resolve_threads(options.threads);
    std::vector<Permutation> shapes{Permutation::identity(1)};
    for (int t = 2; t <= 2 * r; ++t) {
        auto found = search_kernel_permutations(t, r, threads);
        shapes.insert(shapes.end(), found.begin(), found.end());
    }
    if (r >= 1) shapes.push_back(exceptional_shape(r));
    std::sort(shapes.begin(), shapes.end(), ShapeLess{});
    shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());

    ShapeCatalog catalog;
    catalog.max_occ = r;
    catalog.records.resize(shapes.size());
    parallel_for(shapes.size(), threads, [&](int, std::size_t i) { catalog.records[i] = make_shape_record(shapes[i]); });

    if (r >= 1) {
        const auto& last = catalog.records.back();
        if (last.shape != exceptional_shape(r) || last.capacity != r || last.feasible_count() != r + 2) {
            fail(ErrorCode::structure_violation, "exceptional shape record does not have capacity r and r + 2 feasible cells");
        }
        std::vector<Cell> expected;
        for (int j = 0; j <= r; ++j) expected.push_back({2 * r - 2 * j + 1, 2 * j + 1});
        expected.push_back({1, 2 * r + 2});
        if (last.cells != expected) fail(ErrorCode::structure_violation, "exceptional shape has unexpected feasible cells");
    }
    return catalog;
}

std::vector<Permutation> verify_exceptional(int r, int threads) {
    auto found = search_kernel_permutations(2 * r + 1, r, threads);
    if (found.size() != 1 || found.front() != exceptional_shape(r)) {
        std::string list;
        for (const auto& p : found) list += " " + p.to_string();
        fail(ErrorCode::structure_violation, "kernel permutations of size " + std::to_string(2 * r + 1) +
                                               " and capacity <= " + std::to_string(r) + ":" + list);
    }
    return found;
}

std::vector<Permutation> kernel_shapes_by_scan(int max_size, int max_capacity) {
    std::vector<Permutation> out;
    for (int t = 1; t <= max_size; ++t) {
        std::vector<int> v(static_cast<std::size_t>(t));
        std::iota(v.begin(), v.end(), 1);
        do {
            const Kernel ker = kernel_of(Permutation(v));
            if (ker.capacity <= max_capacity) out.push_back(ker.shape);
        } while (std::next_permutation(v.begin(), v.end()));
    }
    std::sort(out.begin(), out.end(), ShapeLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Census census(const ShapeCatalog& catalog) {
    Census out;
    out.new_nonexceptional.assign(static_cast<std::size_t>(catalog.max_occ) + 1, 0);
    for (const auto& rec : catalog.records) {
        ++out.by_size_capacity[{rec.size, rec.capacity}];
        if (rec.capacity >= 1 && rec.shape != exceptional_shape(rec.capacity)) ++out.new_nonexceptional[static_cast<std::size_t>(rec.capacity)];
    }
    return out;
}

}  // namespace occ132
