#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "occ132/algebraic.hpp"
#include "occ132/invariants.hpp"
#include "occ132/oracle.hpp"
#include "occ132/series.hpp"
#include "occ132/shapes.hpp"

namespace occ132 {

/// Bumped whenever the catalog line format or record derivation changes;
/// cached files with another version are rebuilt.
inline constexpr int catalog_format_version = 1;

nlohmann::json record_to_json(const KernelShapeRecord& rec);
/// Re-derives the record from its shape and rejects any disagreement.
KernelShapeRecord record_from_json(const nlohmann::json& j);

/// Header line followed by one record per line, in catalog order.
std::string catalog_to_jsonl(const ShapeCatalog& catalog);
ShapeCatalog catalog_from_jsonl(std::istream& in);
void write_catalog(const ShapeCatalog& catalog, const std::string& path);
ShapeCatalog read_catalog(const std::string& path);

/// Coefficients as decimal strings (exact); non-integral ones as "a/b".
nlohmann::json series_to_json(const PowerSeries& s);
std::string series_to_csv(const PowerSeries& s);

/// Ascending coefficients as decimal strings.
nlohmann::json poly_to_json(const IntPoly& p);

nlohmann::json closed_form_to_json(const AlgebraicFunction& a, int r);
std::string closed_form_to_latex(const AlgebraicFunction& a, int r);

nlohmann::json census_to_json(const Census& c, int max_occ);
nlohmann::json distribution_to_json(const DistributionTable& t);
std::string properties_to_text(const std::vector<PropertyResult>& results);

}  // namespace occ132
