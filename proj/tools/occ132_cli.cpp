// Command-line front end over the occ132 C API.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "occ132/occ132.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct Failure {
    occ132_status status;
    std::string message;
};

void check(occ132_status s) {
    if (s != OCC132_OK) throw Failure{s, occ132_last_error()};
}

struct StringDeleter {
    void operator()(occ132_string* s) const { occ132_string_free(s); }
};
struct CatalogDeleter {
    void operator()(occ132_catalog* c) const { occ132_catalog_free(c); }
};
struct SolverDeleter {
    void operator()(occ132_solver* s) const { occ132_solver_free(s); }
};
using String = std::unique_ptr<occ132_string, StringDeleter>;
using Catalog = std::unique_ptr<occ132_catalog, CatalogDeleter>;
using Solver = std::unique_ptr<occ132_solver, SolverDeleter>;

std::string take(occ132_string* raw) {
    String s(raw);
    return std::string(occ132_string_data(s.get()), occ132_string_length(s.get()));
}

struct Options {
    int r = 0;
    int k = 0;
    int order = 32;
    int max_n = 0;
    int max_occ = 6;
    int threads = 0;
    std::string out;
    std::string catalog;
    std::string format = "json";
    bool verify_exceptional = false;
    bool census = false;
};

Catalog load_catalog(const Options& o, int r) {
    occ132_catalog* raw = nullptr;
    check(occ132_catalog_obtain(o.catalog.empty() ? nullptr : o.catalog.c_str(), r, o.threads, &raw));
    return Catalog(raw);
}

Solver make_solver(const Options& o, int r) {
    auto catalog = load_catalog(o, r);
    occ132_solver* raw = nullptr;
    check(occ132_solver_create(catalog.get(), o.order, &raw));
    return Solver(raw);
}

occ132_format parse_format(const std::string& f) {
    if (f == "csv") return OCC132_FORMAT_CSV;
    if (f == "latex") return OCC132_FORMAT_LATEX;
    return OCC132_FORMAT_JSON;
}

void write_output(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    f << text;
    if (!f) throw Failure{OCC132_E_IO, "cannot write " + o.out};
}

int run_shapes(const Options& o) {
    if (o.verify_exceptional) {
        for (int r = 1; r <= o.r; ++r) check(occ132_verify_exceptional(r, o.threads));
        std::cerr << "exceptional shapes verified for r = 1.." << o.r << "\n";
    }
    auto catalog = load_catalog(o, o.r);
    occ132_string* s = nullptr;
    if (o.census) {
        check(occ132_catalog_census_json(catalog.get(), &s));
    } else {
        check(occ132_catalog_to_jsonl(catalog.get(), &s));
    }
    write_output(o, take(s));
    return exit_ok;
}

int run_gf(const Options& o) {
    auto solver = make_solver(o, o.r);
    occ132_string* s = nullptr;
    check(occ132_psi_series(solver.get(), o.r, parse_format(o.format), &s));
    write_output(o, take(s));
    return exit_ok;
}

int run_closed_form(const Options& o) {
    auto solver = make_solver(o, o.r);
    occ132_string* s = nullptr;
    check(occ132_psi_closed_form(solver.get(), o.r, parse_format(o.format), &s));
    write_output(o, take(s));
    return exit_ok;
}

int run_restricted(const Options& o) {
    auto solver = make_solver(o, o.r);
    occ132_string* s = nullptr;
    check(occ132_phi_series(solver.get(), o.r, o.k, parse_format(o.format), &s));
    write_output(o, take(s));
    return exit_ok;
}

int run_verify(const Options& o) {
    Options local = o;
    if (local.order < local.max_n) local.order = local.max_n;
    auto solver = make_solver(local, o.r);
    occ132_string* s = nullptr;
    int mismatches = 0;
    check(occ132_verify(solver.get(), o.r, o.max_n, o.k, o.threads, &s, &mismatches));
    write_output(o, take(s));
    return mismatches == 0 ? exit_ok : exit_mismatch;
}

int run_invariants(const Options& o) {
    occ132_string* s = nullptr;
    int failures = 0;
    check(occ132_check_invariants(o.max_n, o.threads, &s, &failures));
    write_output(o, take(s));
    return failures == 0 ? exit_ok : exit_mismatch;
}

int run_conjectures(const Options& o) {
    auto solver = make_solver(o, o.max_occ);
    occ132_string* s = nullptr;
    int counterexamples = 0;
    check(occ132_conjectures(solver.get(), o.max_occ, &s, &counterexamples));
    write_output(o, take(s));
    // Informational: counterexamples are listed, not treated as failure.
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counting permutations by occurrences of 132"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", occ132_version());
    Options o;
    app.add_option("--catalog", o.catalog, "Shape catalog cache (JSON lines); rebuilt when stale or too small");

    auto threads = [&](CLI::App* sub) {
        sub->add_option("--threads", o.threads, "Worker threads (default: OCC132_THREADS or hardware)")->check(CLI::NonNegativeNumber);
    };
    auto output = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Write output to FILE instead of stdout"); };

    auto* shapes = app.add_subcommand("shapes", "Enumerate kernel shapes of capacity <= R");
    shapes->add_option("--max-occ", o.r, "R")->required()->check(CLI::NonNegativeNumber);
    output(shapes);
    threads(shapes);
    shapes->add_flag("--verify-exceptional", o.verify_exceptional, "Confirm the exceptional shape of each level");
    shapes->add_flag("--census", o.census, "Print shape counts instead of the catalog");

    auto* gf = app.add_subcommand("gf", "Series of Psi_r");
    gf->add_option("--occ", o.r, "r")->required()->check(CLI::NonNegativeNumber);
    gf->add_option("--order", o.order, "Truncation order")->check(CLI::NonNegativeNumber);
    gf->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
    output(gf);
    threads(gf);

    auto* closed = app.add_subcommand("closed-form", "Psi_r as P + Q (1-4x)^(1/2-r)");
    closed->add_option("--occ", o.r, "r")->required()->check(CLI::NonNegativeNumber);
    closed->add_option("--format", o.format)->check(CLI::IsMember({"json", "latex"}));
    output(closed);
    threads(closed);

    auto* restricted = app.add_subcommand("restricted", "Series of Phi_r(x; k), avoiding 12...k");
    restricted->add_option("--occ", o.r, "r")->required()->check(CLI::NonNegativeNumber);
    restricted->add_option("--k", o.k, "k")->required()->check(CLI::PositiveNumber);
    restricted->add_option("--order", o.order, "Truncation order")->check(CLI::NonNegativeNumber);
    restricted->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
    output(restricted);
    threads(restricted);

    auto* verify = app.add_subcommand("verify", "Compare solver output with brute force");
    verify->add_option("--occ", o.r, "r")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--max-n", o.max_n, "Largest n")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--k", o.k, "Also avoid 12...k")->check(CLI::PositiveNumber);
    output(verify);
    threads(verify);

    auto* invariants = app.add_subcommand("check-invariants", "Structural property suites over S_n");
    invariants->add_option("--max-n", o.max_n, "Largest n")->required()->check(CLI::NonNegativeNumber);
    output(invariants);
    threads(invariants);

    auto* conjectures = app.add_subcommand("conjectures", "Report on open structural claims");
    conjectures->add_option("--max-occ", o.max_occ, "R (default 6)")->check(CLI::NonNegativeNumber);
    output(conjectures);
    threads(conjectures);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*shapes) return run_shapes(o);
        if (*gf) return run_gf(o);
        if (*closed) return run_closed_form(o);
        if (*restricted) return run_restricted(o);
        if (*verify) return run_verify(o);
        if (*invariants) return run_invariants(o);
        if (*conjectures) return run_conjectures(o);
    } catch (const Failure& f) {
        std::cerr << "occ132: " << occ132_status_string(f.status) << ": " << f.message << "\n";
        const bool usage = f.status == OCC132_E_INVALID_ARGUMENT || f.status == OCC132_E_GUARD;
        return usage ? exit_usage : exit_mismatch;
    }
    return exit_usage;
}
