#pragma once

// JSON/CSV encodings. Exact values are always strings: rationals as "p/q"
// (or "p"), big integers in decimal. Keys keep insertion order so output is
// byte-stable.

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "wright/asymptotics.hpp"
#include "wright/diagnostics.hpp"
#include "wright/polyasym.hpp"
#include "wright/series.hpp"

namespace wright {

using Json = nlohmann::ordered_json;

Json rats_to_json(std::span<const Rat> values);
Json ints_to_json(std::span<const BigInt> values);
std::vector<Rat> rats_from_json(const Json& j);

Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

/// Coefficients from constant term up.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);
/// Highest power first, e.g. "4 n^3 - 4 n^2".
std::string poly_to_text(const Poly& p);

Json expansion_to_json(const PolyExpansion& e);
PolyExpansion expansion_from_json(const Json& j);

/// [{"s":..,"t":..,"poly":[..]}, ...] ordered by s then t.
Json nu_to_json(const NuTable& nu);

Json ratio_table_to_json(const RatioTable& table);
/// Header "n,ratio"; skipped entries leave the ratio column empty.
std::string ratio_table_to_csv(const RatioTable& table);

Json moment_expansion_to_json(const MomentExpansion& e);
/// {"xi": [...], "tau": [[...],...], "residuals": [{"n","residual","ratio"}]}
Json moment_report_to_json(const MomentExpansion& e, const ResidualReport& report);

}  // namespace wright
