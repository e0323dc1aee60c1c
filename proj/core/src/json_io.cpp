#include "kerov/json_io.hpp"

#include <algorithm>
#include <json.hpp>
#include <stdexcept>

namespace kerov {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rat_json(const Rat& r) {
  return ordered_json{{"num", r.get_num().get_str()},
                      {"den", r.get_den().get_str()}};
}

Rat rat_from_json(const ordered_json& j) {
  Rat num = parse_rational(j.at("num").get<std::string>());
  Rat den = parse_rational(j.at("den").get<std::string>());
  if (den == 0) throw std::invalid_argument("zero denominator");
  return num / den;
}

ordered_json parse(const std::string& text) {
  return ordered_json::parse(text);
}

}  // namespace

std::string series_to_json(const TruncatedSeries& s) {
  ordered_json j;
  j["type"] = "series";
  j["role"] = to_string(s.role());
  j["order"] = s.order();
  ordered_json coeffs = ordered_json::array();
  for (int n = 1; n <= s.order(); ++n) coeffs.push_back(rat_json(s.coeff(n)));
  j["coefficients"] = std::move(coeffs);
  return j.dump(2) + "\n";
}

TruncatedSeries series_from_json(const std::string& text) {
  ordered_json j = parse(text);
  if (j.value("type", "series") != "series")
    throw std::invalid_argument("not a series document");
  SeriesRole role = series_role_from_string(j.at("role").get<std::string>());
  const auto& coeffs = j.at("coefficients");
  if (!coeffs.is_array() || coeffs.empty())
    throw std::invalid_argument("series needs a nonempty coefficient array");
  std::vector<Rat> c;
  for (const auto& item : coeffs) c.push_back(rat_from_json(item));
  if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(c.size()))
    throw std::invalid_argument("declared order disagrees with coefficients");
  return TruncatedSeries(role, std::move(c));
}

std::string polynomial_to_json(const CumulantPolynomial& p,
                               const std::string& symbol) {
  ordered_json j;
  j["type"] = "polynomial";
  j["symbol"] = symbol;
  ordered_json terms = ordered_json::array();
  for (const auto& [mono, c] : p.sorted_terms()) {
    ordered_json t;
    ordered_json exps;
    for (auto [idx, e] : mono) exps[std::to_string(idx)] = e;
    t["exponents"] = std::move(exps);
    t["num"] = c.get_num().get_str();
    t["den"] = c.get_den().get_str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump(2) + "\n";
}

CumulantPolynomial polynomial_from_json(const std::string& text) {
  ordered_json j = parse(text);
  if (j.value("type", "polynomial") != "polynomial")
    throw std::invalid_argument("not a polynomial document");
  CumulantPolynomial p;
  for (const auto& t : j.at("terms")) {
    Monomial m;
    for (const auto& [key, value] : t.at("exponents").items())
      m.emplace_back(std::stoi(key), value.get<int>());
    std::sort(m.begin(), m.end());
    p.add_term(m, rat_from_json(t));
  }
  return p;
}

std::string diagram_to_json(const MultiRectangular& d) {
  ordered_json j;
  j["type"] = "diagram";
  ordered_json p = ordered_json::array(), q = ordered_json::array();
  for (const auto& v : d.heights()) p.push_back(rational_to_string(v));
  for (const auto& v : d.widths()) q.push_back(rational_to_string(v));
  j["p"] = std::move(p);
  j["q"] = std::move(q);
  return j.dump(2) + "\n";
}

MultiRectangular diagram_from_json(const std::string& text) {
  ordered_json j = parse(text);
  if (j.contains("partition")) {
    Partition rows = j.at("partition").get<Partition>();
    return MultiRectangular::from_partition(rows);
  }
  std::vector<Rat> p, q;
  for (const auto& v : j.at("p")) p.push_back(parse_rational(v.get<std::string>()));
  for (const auto& v : j.at("q")) q.push_back(parse_rational(v.get<std::string>()));
  return MultiRectangular(std::move(p), std::move(q));
}

std::string stanley_to_json(const StanleyPolynomial& s) {
  ordered_json j;
  j["type"] = "stanley";
  j["m"] = s.rectangle_count();
  ordered_json terms = ordered_json::array();
  for (const auto& [key, c] : s.terms()) {
    ordered_json t;
    t["p"] = key.first;
    t["q"] = key.second;
    if (is_integral(c))
      t["coeff"] = c.get_num().get_str();
    else
      t["coeff"] = rational_to_string(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump(2) + "\n";
}

std::string kerov_result_to_json(const KerovResult& r) {
  ordered_json j;
  j["type"] = "kerov-result";
  j["cycles"] = r.cycle_lengths;
  j["polynomial"] = ordered_json::parse(polynomial_to_json(r.polynomial));
  j["stats"] = ordered_json{{"factorizations", r.stats.factorizations},
                            {"pruned", r.stats.pruned},
                            {"triples", r.stats.triples}};
  return j.dump(2) + "\n";
}

}  // namespace kerov
