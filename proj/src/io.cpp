#include "occ132/io.hpp"

#include <fstream>
#include <sstream>

#include "occ132/error.hpp"

namespace occ132 {

using nlohmann::json;

json record_to_json(const KernelShapeRecord& rec) {
    json cells = json::array();
    for (Cell c : rec.cells) cells.push_back({c.m, c.l});
    return json{{"shape", std::vector<int>(rec.shape.values().begin(), rec.shape.values().end())},
                {"size", rec.size},
                {"capacity", rec.capacity},
                {"cells", cells},
                {"lis_ne", rec.lis_ne}};
}

KernelShapeRecord record_from_json(const json& j) {
    try {
        const Permutation shape(j.at("shape").get<std::vector<int>>());
        KernelShapeRecord rec = make_shape_record(shape);
        if (record_to_json(rec) != j) fail(ErrorCode::format, "stale record for shape " + shape.to_string());
        return rec;
    } catch (const json::exception& e) {
        fail(ErrorCode::format, std::string("malformed shape record: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::format) throw;
        fail(ErrorCode::format, std::string("invalid shape record: ") + e.what());
    }
}

std::string catalog_to_jsonl(const ShapeCatalog& catalog) {
    std::string out = json{{"format", "occ132-shape-catalog"},
                           {"format_version", catalog_format_version},
                           {"max_occ", catalog.max_occ},
                           {"records", catalog.records.size()}}
                          .dump();
    out.push_back('\n');
    for (const auto& rec : catalog.records) {
        out += record_to_json(rec).dump();
        out.push_back('\n');
    }
    return out;
}

ShapeCatalog catalog_from_jsonl(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(ErrorCode::format, "empty catalog");
    json header;
    try {
        header = json::parse(line);
    } catch (const json::exception& e) {
        fail(ErrorCode::format, std::string("bad catalog header: ") + e.what());
    }
    if (header.value("format", "") != "occ132-shape-catalog") fail(ErrorCode::format, "not a shape catalog");
    if (header.value("format_version", -1) != catalog_format_version) fail(ErrorCode::format, "catalog format version mismatch");
    ShapeCatalog catalog;
    catalog.max_occ = header.value("max_occ", -1);
    if (catalog.max_occ < 0) fail(ErrorCode::format, "catalog header lacks max_occ");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            catalog.records.push_back(record_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            fail(ErrorCode::format, std::string("bad catalog line: ") + e.what());
        }
    }
    if (catalog.records.size() != header.value("records", std::size_t{0})) fail(ErrorCode::format, "truncated catalog");
    return catalog;
}

void write_catalog(const ShapeCatalog& catalog, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io, "cannot open " + path + " for writing");
    out << catalog_to_jsonl(catalog);
    if (!out) fail(ErrorCode::io, "failed writing " + path);
}

ShapeCatalog read_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot open " + path);
    return catalog_from_jsonl(in);
}

json series_to_json(const PowerSeries& s) {
    json out = json::array();
    for (const auto& c : s.coefficients()) out.push_back(c.get_str());
    return out;
}

std::string series_to_csv(const PowerSeries& s) {
    std::string out = "n,coefficient\n";
    for (int n = 0; n <= s.order(); ++n) out += std::to_string(n) + "," + s[n].get_str() + "\n";
    return out;
}

json poly_to_json(const IntPoly& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(c.get_str());
    return out;
}

namespace {

json rational_function_json(const RationalFunction& f) {
    auto family = primitive_integer_family({f.num, f.den});
    return json{{"num", poly_to_json(family[0])}, {"den", poly_to_json(family[1])}};
}

}  // namespace

json closed_form_to_json(const AlgebraicFunction& a, int r) {
    const PQForm form = extract_PQ(a, r);
    json out{{"occ", r},
             {"polynomial", form.polynomial},
             {"exponent_num", 1 - 2 * r},
             {"exponent_den", 2},
             {"closed_form", {{"p", poly_to_json(a.p())}, {"q", poly_to_json(a.q())}, {"d", poly_to_json(a.d())}}}};
    if (form.polynomial) {
        // Shared denominator of the coefficients of P and Q (1 when integral).
        mpz_class den = 1;
        for (const auto* poly : {&form.P.num, &form.Q.num}) {
            for (const auto& c : poly->coefficients()) den = lcm(den, mpz_class(c.get_den()));
        }
        json two_p = json::array(), two_q = json::array();
        for (const auto& c : form.P.num.coefficients()) two_p.push_back(mpz_class(c * den).get_str());
        for (const auto& c : form.Q.num.coefficients()) two_q.push_back(mpz_class(c * den).get_str());
        out["denominator"] = den.get_str();
        out["two_P"] = two_p;
        out["two_Q"] = two_q;
    } else {
        out["two_P"] = rational_function_json(form.P);
        out["two_Q"] = rational_function_json(form.Q);
    }
    return out;
}

std::string closed_form_to_latex(const AlgebraicFunction& a, int r) {
    const PQForm form = extract_PQ(a, r);
    auto render = [](const RationalFunction& f) {
        if (f.den.degree() == 0) return to_string(f.num);
        return "\\frac{" + to_string(f.num) + "}{" + to_string(f.den) + "}";
    };
    std::ostringstream out;
    out << "\\Psi_{" << r << "}(x)=\\frac12\\left(" << render(form.P) << "+\\left(" << render(form.Q) << "\\right)(1-4x)^{"
        << (1 - 2 * r) << "/2}\\right)";
    return out.str();
}

json census_to_json(const Census& c, int max_occ) {
    json raw = json::array();
    for (const auto& [key, count] : c.by_size_capacity) raw.push_back({{"size", key.first}, {"capacity", key.second}, {"count", count}});
    json fresh = json::object();
    for (int r = 1; r <= max_occ; ++r) fresh[std::to_string(r)] = c.new_nonexceptional[static_cast<std::size_t>(r)];
    return json{{"max_occ", max_occ}, {"new_nonexceptional", fresh}, {"by_size_capacity", raw}};
}

json distribution_to_json(const DistributionTable& t) {
    json counts = json::object();
    for (std::size_t r = 0; r < t.counts.size(); ++r) {
        if (t.counts[r] != 0) counts[std::to_string(r)] = std::to_string(t.counts[r]);
    }
    return json{{"n", t.n}, {"counts", counts}};
}

std::string properties_to_text(const std::vector<PropertyResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " checked=" << r.checked << " violations=" << r.violations;
        if (!r.counterexample.empty()) out << " counterexample=" << r.counterexample;
        out << "\n";
    }
    return out.str();
}

}  // namespace occ132
