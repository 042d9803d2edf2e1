#include "occ132/occ132.h"

#include <filesystem>
#include <new>
#include <sstream>
#include <string>

#include "occ132/error.hpp"
#include "occ132/io.hpp"
#include "occ132/oracle.hpp"
#include "occ132/parallel.hpp"
#include "occ132/solver.hpp"

struct occ132_string {
    std::string text;
};

struct occ132_catalog {
    occ132::ShapeCatalog catalog;
};

struct occ132_solver {
    occ132::PsiSolver solver;
};

namespace {

thread_local std::string last_error;

occ132_status status_of(occ132::ErrorCode code) {
    using occ132::ErrorCode;
    switch (code) {
        case ErrorCode::invalid_argument: return OCC132_E_INVALID_ARGUMENT;
        case ErrorCode::guard_violation: return OCC132_E_GUARD;
        case ErrorCode::io: return OCC132_E_IO;
        case ErrorCode::format: return OCC132_E_FORMAT;
        case ErrorCode::missing_shapes: return OCC132_E_MISSING_SHAPES;
        case ErrorCode::math: return OCC132_E_MATH;
        default: return OCC132_E_INTERNAL;
    }
}

template <class F>
occ132_status guarded(F&& body) {
    last_error.clear();
    try {
        body();
        return OCC132_OK;
    } catch (const occ132::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return OCC132_E_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return OCC132_E_INTERNAL;
    }
}

void require(bool cond, const char* what) {
    if (!cond) occ132::fail(occ132::ErrorCode::invalid_argument, what);
}

void emit(occ132_string** out, std::string text) {
    require(out != nullptr, "null output pointer");
    *out = new occ132_string{std::move(text)};
}

std::string format_series(const occ132::PowerSeries& s, occ132_format format) {
    switch (format) {
        case OCC132_FORMAT_JSON: return occ132::series_to_json(s).dump() + "\n";
        case OCC132_FORMAT_CSV: return occ132::series_to_csv(s);
        default: occ132::fail(occ132::ErrorCode::invalid_argument, "series output supports json or csv");
    }
}

std::string kernel_report(const occ132::Permutation& pi) {
    using nlohmann::json;
    const auto graph = occ132::build_occurrence_graph(pi);
    json comps = json::array();
    for (const auto& c : graph.components()) comps.push_back({{"positions", c.positions}, {"occurrences", c.occurrence_count()}});
    json out{{"permutation", pi.to_string()}, {"occurrences", graph.occurrences.size()}, {"components", comps}};
    if (pi.empty()) return out.dump() + "\n";
    const auto ker = occ132::kernel_of(pi);
    out["kernel"] = {{"positions", ker.positions},
                     {"values", ker.values},
                     {"shape", ker.shape.to_string()},
                     {"size", ker.size},
                     {"capacity", ker.capacity}};
    const auto rec = occ132::make_shape_record(ker.shape);
    out["shape_record"] = occ132::record_to_json(rec);
    try {
        const auto d = occ132::decompose(pi);
        json cells = json::array();
        for (std::size_t j = 0; j < rec.cells.size(); ++j) {
            cells.push_back({{"cell", {rec.cells[j].m, rec.cells[j].l}}, {"pattern", d.contents[j].to_string()}});
        }
        out["decomposition"] = cells;
    } catch (const occ132::Error& e) {
        if (e.code() != occ132::ErrorCode::structure_violation) throw;
        out["decomposition_error"] = e.what();
    }
    return out.dump() + "\n";
}

}  // namespace

extern "C" {

const char* occ132_version(void) { return "1.0.0"; }

const char* occ132_status_string(occ132_status status) {
    switch (status) {
        case OCC132_OK: return "ok";
        case OCC132_E_INVALID_ARGUMENT: return "invalid argument";
        case OCC132_E_GUARD: return "size guard exceeded";
        case OCC132_E_IO: return "i/o error";
        case OCC132_E_FORMAT: return "format error";
        case OCC132_E_MISSING_SHAPES: return "catalog does not cover the requested level";
        case OCC132_E_MATH: return "arithmetic error";
        case OCC132_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* occ132_last_error(void) { return last_error.c_str(); }

int occ132_default_threads(void) { return occ132::default_thread_count(); }

const char* occ132_string_data(const occ132_string* s) { return s ? s->text.c_str() : ""; }
size_t occ132_string_length(const occ132_string* s) { return s ? s->text.size() : 0; }
void occ132_string_free(occ132_string* s) { delete s; }

occ132_status occ132_count_132(const int* values, size_t n, uint64_t* out) {
    return guarded([&] {
        require(out != nullptr && (values != nullptr || n == 0), "null argument");
        const occ132::Permutation pi(std::vector<int>(values, values + n));
        *out = static_cast<uint64_t>(occ132::count_132(pi));
    });
}

occ132_status occ132_kernel_json(const char* permutation, occ132_string** out) {
    return guarded([&] {
        require(permutation != nullptr, "null permutation");
        emit(out, kernel_report(occ132::Permutation::parse(permutation)));
    });
}

occ132_status occ132_catalog_enumerate(int max_occ, int threads, occ132_catalog** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        *out = new occ132_catalog{occ132::enumerate_kernel_shapes(max_occ, {threads})};
    });
}

occ132_status occ132_catalog_obtain(const char* cache_path, int max_occ, int threads, occ132_catalog** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        if (cache_path && std::filesystem::exists(cache_path)) {
            try {
                auto cached = occ132::read_catalog(cache_path);
                if (cached.max_occ >= max_occ) {
                    *out = new occ132_catalog{std::move(cached)};
                    return;
                }
            } catch (const occ132::Error& e) {
                if (e.code() != occ132::ErrorCode::format) throw;
            }
        }
        auto fresh = occ132::enumerate_kernel_shapes(max_occ, {threads});
        if (cache_path) occ132::write_catalog(fresh, cache_path);
        *out = new occ132_catalog{std::move(fresh)};
    });
}

occ132_status occ132_catalog_read(const char* path, occ132_catalog** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "null argument");
        *out = new occ132_catalog{occ132::read_catalog(path)};
    });
}

occ132_status occ132_catalog_write(const occ132_catalog* catalog, const char* path) {
    return guarded([&] {
        require(catalog != nullptr && path != nullptr, "null argument");
        occ132::write_catalog(catalog->catalog, path);
    });
}

occ132_status occ132_catalog_to_jsonl(const occ132_catalog* catalog, occ132_string** out) {
    return guarded([&] {
        require(catalog != nullptr, "null catalog");
        emit(out, occ132::catalog_to_jsonl(catalog->catalog));
    });
}

occ132_status occ132_catalog_census_json(const occ132_catalog* catalog, occ132_string** out) {
    return guarded([&] {
        require(catalog != nullptr, "null catalog");
        emit(out, occ132::census_to_json(occ132::census(catalog->catalog), catalog->catalog.max_occ).dump() + "\n");
    });
}

occ132_status occ132_verify_exceptional(int r, int threads) {
    return guarded([&] { occ132::verify_exceptional(r, threads); });
}

int occ132_catalog_max_occ(const occ132_catalog* catalog) { return catalog ? catalog->catalog.max_occ : -1; }
size_t occ132_catalog_size(const occ132_catalog* catalog) { return catalog ? catalog->catalog.records.size() : 0; }
void occ132_catalog_free(occ132_catalog* catalog) { delete catalog; }

occ132_status occ132_solver_create(const occ132_catalog* catalog, int order, occ132_solver** out) {
    return guarded([&] {
        require(catalog != nullptr && out != nullptr, "null argument");
        *out = new occ132_solver{occ132::PsiSolver(catalog->catalog, order)};
    });
}

void occ132_solver_free(occ132_solver* solver) { delete solver; }

occ132_status occ132_psi_series(occ132_solver* solver, int r, occ132_format format, occ132_string** out) {
    return guarded([&] {
        require(solver != nullptr, "null solver");
        emit(out, format_series(solver->solver.psi_series(r), format));
    });
}

occ132_status occ132_psi_coefficient(occ132_solver* solver, int r, int n, occ132_string** out) {
    return guarded([&] {
        require(solver != nullptr, "null solver");
        require(n >= 0 && n <= solver->solver.order(), "coefficient index outside the series order");
        emit(out, solver->solver.psi_series(r)[n].get_str());
    });
}

occ132_status occ132_psi_closed_form(occ132_solver* solver, int r, occ132_format format, occ132_string** out) {
    return guarded([&] {
        require(solver != nullptr, "null solver");
        const auto& a = solver->solver.psi_closed_form(r);
        switch (format) {
            case OCC132_FORMAT_JSON: emit(out, occ132::closed_form_to_json(a, r).dump() + "\n"); break;
            case OCC132_FORMAT_LATEX: emit(out, occ132::closed_form_to_latex(a, r) + "\n"); break;
            default: occ132::fail(occ132::ErrorCode::invalid_argument, "closed forms support json or latex");
        }
    });
}

occ132_status occ132_phi_series(occ132_solver* solver, int r, int k, occ132_format format, occ132_string** out) {
    return guarded([&] {
        require(solver != nullptr, "null solver");
        emit(out, format_series(solver->solver.phi_series(r, k), format));
    });
}

occ132_status occ132_oracle_count(int n, int r, int k, int threads, uint64_t* out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        occ132::OracleOptions opts;
        opts.threads = threads;
        *out = k > 0 ? occ132::count_exact_restricted(n, r, k, opts) : occ132::count_exact(n, r, opts);
    });
}

occ132_status occ132_oracle_distribution_json(int n, int threads, occ132_string** out) {
    return guarded([&] {
        occ132::OracleOptions opts;
        opts.threads = threads;
        emit(out, occ132::distribution_to_json(occ132::distribution(n, opts)).dump() + "\n");
    });
}

occ132_status occ132_verify(occ132_solver* solver, int r, int max_n, int k, int threads, occ132_string** report,
                            int* mismatches) {
    return guarded([&] {
        require(solver != nullptr && mismatches != nullptr, "null argument");
        require(max_n >= 0 && max_n <= solver->solver.order(), "max_n must lie within the series order");
        occ132::OracleOptions opts;
        opts.threads = threads;
        // Guard first so no partial table is produced.
        if (max_n > opts.max_n) {
            occ132::fail(occ132::ErrorCode::guard_violation, "max_n = " + std::to_string(max_n) + " exceeds the oracle guard " +
                                                                  std::to_string(opts.max_n));
        }
        const auto& series = k > 0 ? solver->solver.phi_series(r, k) : solver->solver.psi_series(r);
        std::ostringstream text;
        text << "# r=" << r;
        if (k > 0) text << " k=" << k;
        text << " max_n=" << max_n << "\n";
        text << "n\tsolver\toracle\tstatus\n";
        int bad = 0;
        for (int n = 0; n <= max_n; ++n) {
            const auto joint = occ132::joint_distribution(n, opts);
            const std::uint64_t oracle = k > 0 ? joint.restricted(r, k) : joint.marginal().at(r);
            const bool ok = series[n] == mpq_class(mpz_class(std::to_string(oracle)));
            if (!ok) ++bad;
            text << n << "\t" << series[n].get_str() << "\t" << oracle << "\t" << (ok ? "ok" : "MISMATCH") << "\n";
        }
        text << "mismatches: " << bad << "\n";
        *mismatches = bad;
        emit(report, text.str());
    });
}

occ132_status occ132_check_invariants(int max_n, int threads, occ132_string** report, int* failures) {
    return guarded([&] {
        require(failures != nullptr, "null argument");
        const auto results = occ132::check_invariants(max_n, threads);
        int bad = 0;
        for (const auto& r : results) bad += r.passed() ? 0 : 1;
        *failures = bad;
        emit(report, occ132::properties_to_text(results));
    });
}

occ132_status occ132_conjectures(occ132_solver* solver, int max_occ, occ132_string** report, int* counterexamples) {
    return guarded([&] {
        using nlohmann::json;
        require(solver != nullptr && counterexamples != nullptr, "null argument");
        int bad = 0;
        json conj1_bad = json::array();
        std::size_t checked = 0;
        for (const auto& rec : solver->solver.catalog().records) {
            if (rec.capacity > max_occ || rec.size == 1) continue;
            ++checked;
            if (rec.size < rec.feasible_count()) {
                conj1_bad.push_back(rec.shape.to_string());
                ++bad;
            }
        }
        json levels = json::array();
        for (int r = 1; r <= max_occ; ++r) {
            const auto form = occ132::extract_PQ(solver->solver.psi_closed_form(r), r);
            json level{{"r", r}, {"polynomial", form.polynomial}};
            if (form.polynomial) {
                const auto P = *form.P_poly();
                const auto Q = *form.Q_poly();
                const bool half_integer = occ132::is_integral(P) && occ132::is_integral(Q);
                const bool divisible = sgn(Q.evaluate(mpq_class(1, 4))) == 0;
                level["two_P_two_Q_integral"] = half_integer;
                level["one_minus_4x_divides_Q"] = divisible;
                if (!half_integer || divisible) ++bad;
            } else {
                ++bad;
            }
            levels.push_back(level);
        }
        *counterexamples = bad;
        json out{{"size_at_least_feasible_cells", {{"checked", checked}, {"counterexamples", conj1_bad}}}, {"levels", levels}};
        emit(report, out.dump(2) + "\n");
    });
}

}  // extern "C"
