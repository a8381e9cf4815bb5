#include "wright/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace wright {

Json rats_to_json(std::span<const Rat> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json ints_to_json(std::span<const BigInt> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<Rat> rats_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of rational strings");
  std::vector<Rat> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw std::invalid_argument("exact values must be strings, got " + item.dump());
    out.push_back(parse_rat(item.get<std::string>()));
  }
  return out;
}

Json series_to_json(const TruncatedSeries& s) { return rats_to_json(s.coeffs()); }

TruncatedSeries series_from_json(const Json& j) { return TruncatedSeries(rats_from_json(j)); }

Json poly_to_json(const Poly& p) {
  if (p.is_zero()) return Json::array({"0"});
  return rats_to_json(p.coeffs());
}

Poly poly_from_json(const Json& j) { return Poly(rats_from_json(j)); }

std::string poly_to_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    const bool unit = c == 1 && i > 0;
    if (!unit) out += to_string(c);
    if (i > 0) {
      if (!unit) out += " ";
      out += i == 1 ? "n" : "n^" + std::to_string(i);
    }
  }
  return out;
}

Json expansion_to_json(const PolyExpansion& e) {
  Json terms = Json::array();
  for (const auto& p : e.terms()) terms.push_back(poly_to_json(p));
  return Json{{"base", to_string(e.base())}, {"terms", std::move(terms)}};
}

PolyExpansion expansion_from_json(const Json& j) {
  std::vector<Poly> terms;
  for (const auto& t : j.at("terms")) terms.push_back(poly_from_json(t));
  return PolyExpansion(parse_rat(j.at("base").get<std::string>()), std::move(terms));
}

Json nu_to_json(const NuTable& nu) {
  Json out = Json::array();
  for (std::size_t s = 1; s < nu.order(); ++s) {
    for (std::size_t t = 1; t <= s; ++t) {
      out.push_back(Json{{"s", s}, {"t", t}, {"poly", poly_to_json(nu.at(s, t))}});
    }
  }
  return out;
}

Json ratio_table_to_json(const RatioTable& table) {
  Json out = Json::array();
  for (const auto& row : table) {
    Json r{{"n", row.n}};
    r["ratio"] = row.ratio ? Json(to_string(*row.ratio)) : Json(nullptr);
    out.push_back(std::move(r));
  }
  return out;
}

std::string ratio_table_to_csv(const RatioTable& table) {
  std::ostringstream out;
  out << "n,ratio\n";
  for (const auto& row : table) {
    out << row.n << ',';
    if (row.ratio) out << to_string(*row.ratio);
    out << '\n';
  }
  return out.str();
}

namespace {

Json tau_json(const TauExpansion& tau) {
  Json out = Json::array();
  for (const auto& p : tau.tau) out.push_back(poly_to_json(p));
  return out;
}

}  // namespace

Json moment_expansion_to_json(const MomentExpansion& e) {
  return Json{{"psi", expansion_to_json(e.psi)},
              {"nu", nu_to_json(e.nu)},
              {"xi", rats_to_json(e.xi.xi)},
              {"tau", tau_json(e.tau)}};
}

Json moment_report_to_json(const MomentExpansion& e, const ResidualReport& report) {
  Json residuals = Json::array();
  for (const auto& row : report.rows) {
    residuals.push_back(Json{{"n", row.n}, {"residual", to_string(row.residual)}, {"ratio", to_string(row.ratio)}});
  }
  return Json{{"xi", rats_to_json(e.xi.xi)}, {"tau", tau_json(e.tau)}, {"residuals", std::move(residuals)}};
}

}  // namespace wright
