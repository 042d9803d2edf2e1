#include "occ132/kernel.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "occ132/error.hpp"

namespace occ132 {

namespace {

struct DisjointSets {
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }

    std::vector<int> parent;
};

std::string cell_name(Cell c) { return "C_{" + std::to_string(c.m) + "," + std::to_string(c.l) + "}"; }

}  // namespace

OccurrenceGraph build_occurrence_graph(const Permutation& pi) {
    OccurrenceGraph g;
    g.entry_count = pi.size();
    g.occurrences = occurrences_132(pi);
    g.incidence.resize(static_cast<std::size_t>(pi.size()));
    for (std::size_t o = 0; o < g.occurrences.size(); ++o) {
        const auto& occ = g.occurrences[o];
        for (int p : {occ.i, occ.j, occ.k}) g.incidence[static_cast<std::size_t>(p - 1)].push_back(static_cast<int>(o));
    }
    return g;
}

std::vector<Component> OccurrenceGraph::components() const {
    DisjointSets sets(entry_count);
    for (const auto& occ : occurrences) {
        sets.unite(occ.i - 1, occ.j - 1);
        sets.unite(occ.k - 1, occ.j - 1);
    }
    std::vector<int> slot(static_cast<std::size_t>(entry_count), -1);
    std::vector<Component> out;
    for (int p = 0; p < entry_count; ++p) {
        const int root = sets.find(p);
        if (slot[static_cast<std::size_t>(root)] < 0) {
            slot[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].positions.push_back(p + 1);
    }
    for (std::size_t o = 0; o < occurrences.size(); ++o) {
        const int root = sets.find(occurrences[o].i - 1);
        out[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].occurrences.push_back(static_cast<int>(o));
    }
    return out;
}

Kernel kernel_of(const Permutation& pi) {
    const int n = pi.size();
    if (n < 1) fail(ErrorCode::invalid_argument, "kernel of the empty permutation is undefined");
    const auto occs = occurrences_132(pi);
    DisjointSets sets(n);
    for (const auto& occ : occs) {
        sets.unite(occ.i - 1, occ.j - 1);
        sets.unite(occ.k - 1, occ.j - 1);
    }
    const int top = pi.inverse()(n) - 1;
    const int root = sets.find(top);
    Kernel ker;
    for (int p = 0; p < n; ++p) {
        if (sets.find(p) == root) {
            ker.positions.push_back(p + 1);
            ker.values.push_back(pi(p + 1));
        }
    }
    ker.shape = reduce_to_pattern(ker.values);
    ker.size = static_cast<int>(ker.positions.size());
    ker.capacity = count_132(ker.shape);
    return ker;
}

bool is_kernel_permutation(const Permutation& rho) {
    if (rho.empty()) return false;
    return kernel_of(rho).size == rho.size();
}

CellDecomposition::CellDecomposition(Permutation shape, std::vector<char> feasible)
    : shape_(std::move(shape)), feasible_(std::move(feasible)) {}

std::vector<Cell> CellDecomposition::feasible_cells() const {
    std::vector<Cell> out;
    for (int m = 1; m <= size(); ++m) {
        for (int l = 1; l <= size() + 1; ++l) {
            if (feasible({m, l})) out.push_back({m, l});
        }
    }
    return out;
}

void CellDecomposition::set_contents(std::vector<std::vector<int>> values, std::vector<std::vector<int>> positions) {
    contents_ = std::move(values);
    positions_ = std::move(positions);
}

namespace {

// Points on a doubled grid: kernel entry k sits at (2k, 2 rho(k)); a
// hypothetical point of cell (m, l) sits at (2l - 1, 2m - 1).
struct Point {
    int x;
    int y;
};

bool forms_132(Point a, Point b, Point c) {
    std::array<Point, 3> t{a, b, c};
    std::sort(t.begin(), t.end(), [](Point p, Point q) { return p.x < q.x; });
    return t[0].y < t[2].y && t[2].y < t[1].y;
}

bool cell_infeasible(const Permutation& rho, Cell c) {
    const int s = rho.size();
    const Point z{2 * c.l - 1, 2 * c.m - 1};
    for (int a = 1; a <= s; ++a) {
        for (int b = a + 1; b <= s; ++b) {
            if (forms_132(z, {2 * a, 2 * rho(a)}, {2 * b, 2 * rho(b)})) return true;
        }
    }
    return false;
}

}  // namespace

CellDecomposition cell_decomposition(const Permutation& rho) {
    if (!is_kernel_permutation(rho)) {
        fail(ErrorCode::invalid_argument, rho.to_string() + " is not a kernel permutation");
    }
    const int s = rho.size();
    std::vector<char> flags(static_cast<std::size_t>(s) * static_cast<std::size_t>(s + 1), 0);
    for (int m = 1; m <= s; ++m) {
        for (int l = 1; l <= s + 1; ++l) {
            flags[static_cast<std::size_t>(m - 1) * static_cast<std::size_t>(s + 1) + static_cast<std::size_t>(l - 1)] =
                cell_infeasible(rho, {m, l}) ? 0 : 1;
        }
    }
    return CellDecomposition(rho, std::move(flags));
}

CellDecomposition cell_contents(const Permutation& pi, const Kernel& kernel) {
    CellDecomposition dec = cell_decomposition(kernel.shape);
    const int s = kernel.size;
    std::vector<int> sorted_values = kernel.values;
    std::sort(sorted_values.begin(), sorted_values.end());
    const std::size_t cells = static_cast<std::size_t>(s) * static_cast<std::size_t>(s + 1);
    std::vector<std::vector<int>> values(cells), positions(cells);
    std::size_t next_kernel = 0;
    for (int j = 1; j <= pi.size(); ++j) {
        if (next_kernel < kernel.positions.size() && kernel.positions[next_kernel] == j) {
            ++next_kernel;
            continue;
        }
        const int l = static_cast<int>(next_kernel) + 1;
        const int v = pi(j);
        const int m = static_cast<int>(std::lower_bound(sorted_values.begin(), sorted_values.end(), v) - sorted_values.begin()) + 1;
        if (m > s) fail(ErrorCode::internal, "entry above the maximal kernel value");
        const std::size_t idx = static_cast<std::size_t>(m - 1) * static_cast<std::size_t>(s + 1) + static_cast<std::size_t>(l - 1);
        values[idx].push_back(v);
        positions[idx].push_back(j);
    }
    dec.set_contents(std::move(values), std::move(positions));
    return dec;
}

bool southwest_infeasible(const Permutation& rho, Cell c) {
    for (int k = 1; k <= rho.size(); ++k) {
        if (c.l > k && c.m > rho(k)) return true;
    }
    return false;
}

std::vector<Cell> order_feasible_cells(const CellDecomposition& dec) {
    std::vector<Cell> cells = dec.feasible_cells();
    std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) { return a.l != b.l ? a.l < b.l : a.m > b.m; });
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            if (!precedes(cells[i], cells[j])) {
                fail(ErrorCode::order_violation, "feasible cells " + cell_name(cells[i]) + " and " + cell_name(cells[j]) +
                                                     " of " + dec.shape().to_string() + " are incomparable");
            }
        }
    }
    return cells;
}

std::vector<int> lis_northeast(const Permutation& rho, std::span<const Cell> ordered_cells) {
    std::vector<int> out;
    out.reserve(ordered_cells.size());
    std::vector<int> region;
    for (Cell c : ordered_cells) {
        region.clear();
        for (int k = c.l; k <= rho.size(); ++k) {
            if (rho(k) >= c.m) region.push_back(rho(k));
        }
        out.push_back(lis_length(region));
    }
    return out;
}

std::vector<int> lis_northeast(const Permutation& rho) {
    const auto cells = order_feasible_cells(cell_decomposition(rho));
    return lis_northeast(rho, cells);
}

KernelShapeRecord make_shape_record(const Permutation& rho) {
    KernelShapeRecord rec;
    rec.shape = rho;
    rec.size = rho.size();
    rec.capacity = static_cast<int>(count_132(rho));
    rec.cells = order_feasible_cells(cell_decomposition(rho));
    rec.lis_ne = lis_northeast(rho, rec.cells);
    rec.lis = lis_length(rho.values());
    return rec;
}

Decomposition decompose(const Permutation& pi) {
    const Kernel ker = kernel_of(pi);
    const CellDecomposition dec = cell_contents(pi, ker);
    const int s = ker.size;

    // Cell index of every non-kernel position, -1 for kernel entries.
    std::vector<Cell> cell_of(static_cast<std::size_t>(pi.size()), Cell{});
    std::vector<char> in_kernel(static_cast<std::size_t>(pi.size()), 0);
    for (int p : ker.positions) in_kernel[static_cast<std::size_t>(p - 1)] = 1;
    for (int m = 1; m <= s; ++m) {
        for (int l = 1; l <= s + 1; ++l) {
            const auto pos = dec.content_positions({m, l});
            if (pos.empty()) continue;
            if (!dec.feasible({m, l})) {
                fail(ErrorCode::structure_violation, pi.to_string() + ": entry in infeasible cell " + cell_name({m, l}));
            }
            for (int p : pos) cell_of[static_cast<std::size_t>(p - 1)] = {m, l};
        }
    }
    for (const auto& comp : build_occurrence_graph(pi).components()) {
        const int first = comp.positions.front();
        if (in_kernel[static_cast<std::size_t>(first - 1)]) continue;
        const Cell home = cell_of[static_cast<std::size_t>(first - 1)];
        for (int p : comp.positions) {
            if (in_kernel[static_cast<std::size_t>(p - 1)] || cell_of[static_cast<std::size_t>(p - 1)] != home) {
                fail(ErrorCode::structure_violation, pi.to_string() + ": component straddles cells");
            }
        }
    }

    Decomposition out;
    out.shape = ker.shape;
    for (Cell c : order_feasible_cells(dec)) out.contents.push_back(reduce_to_pattern(dec.contents(c)));
    return out;
}

namespace {

Permutation assemble_cells(const Permutation& rho, std::span<const Cell> cells, std::span<const Permutation> contents) {
    if (contents.size() != cells.size()) {
        fail(ErrorCode::invalid_argument, "expected " + std::to_string(cells.size()) + " cell patterns for " +
                                              rho.to_string() + ", got " + std::to_string(contents.size()));
    }
    const int s = rho.size();
    int n = s;
    for (const auto& a : contents) n += a.size();

    // Item ids: kernel entry at position k is k - 1; cell j's entry at its
    // own position p is offset[j] + p - 1.
    std::vector<int> offset(cells.size());
    int next = s;
    for (std::size_t j = 0; j < cells.size(); ++j) {
        offset[j] = next;
        next += contents[j].size();
    }
    std::vector<int> position(static_cast<std::size_t>(n)), value(static_cast<std::size_t>(n));

    // Positions: band by band; higher cells sit further left inside a band.
    int cursor = 0;
    for (int l = 1; l <= s + 1; ++l) {
        std::vector<std::size_t> band;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (cells[j].l == l) band.push_back(j);
        }
        std::sort(band.begin(), band.end(), [&](std::size_t a, std::size_t b) { return cells[a].m > cells[b].m; });
        for (std::size_t j : band) {
            for (int p = 1; p <= contents[j].size(); ++p) position[static_cast<std::size_t>(offset[j] + p - 1)] = ++cursor;
        }
        if (l <= s) position[static_cast<std::size_t>(l - 1)] = ++cursor;
    }

    // Values: band by band; cells further right take lower values.
    const Permutation rho_inv = rho.inverse();
    cursor = 0;
    for (int m = 1; m <= s; ++m) {
        std::vector<std::size_t> band;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (cells[j].m == m) band.push_back(j);
        }
        std::sort(band.begin(), band.end(), [&](std::size_t a, std::size_t b) { return cells[a].l > cells[b].l; });
        for (std::size_t j : band) {
            const Permutation inv = contents[j].inverse();
            for (int v = 1; v <= contents[j].size(); ++v) value[static_cast<std::size_t>(offset[j] + inv(v) - 1)] = ++cursor;
        }
        value[static_cast<std::size_t>(rho_inv(m) - 1)] = ++cursor;
    }

    std::vector<int> out(static_cast<std::size_t>(n));
    for (int item = 0; item < n; ++item) out[static_cast<std::size_t>(position[static_cast<std::size_t>(item)] - 1)] = value[static_cast<std::size_t>(item)];
    return Permutation(std::move(out));
}

}  // namespace

Permutation assemble(const KernelShapeRecord& record, std::span<const Permutation> contents) {
    return assemble_cells(record.shape, record.cells, contents);
}

Permutation assemble(const Permutation& rho, std::span<const Permutation> contents) {
    const auto cells = order_feasible_cells(cell_decomposition(rho));
    return assemble_cells(rho, cells, contents);
}

}  // namespace occ132
