#include "qtoda/json_io.hpp"

#include <set>

#include <json.hpp>

#include "qtoda/errors.hpp"
#include "qtoda/parse.hpp"

namespace qtoda {

namespace {

using json = nlohmann::ordered_json;

std::string finish(const json& doc) { return doc.dump(2) + "\n"; }

std::string q_monomial_key(const DegreeVector& k) {
  std::string out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "Q" + std::to_string(i + 1);
    if (k[i] != 1) out += "^" + std::to_string(k[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::string series_to_json(const TwistedSeries& s) {
  json doc;
  doc["rank"] = s.rank;
  doc["truncation"] = s.truncation;
  json cells = json::array();
  const auto pts = fixed_points(s.rank);
  for (const auto& [d, cls] : s.coeffs)
    for (std::size_t k = 0; k < pts.size(); ++k) {
      json cell;
      cell["degree"] = d;
      cell["sigma"] = pts[k].sigma;
      cell["num"] = cls.values[k].num().str();
      cell["den"] = cls.values[k].den().str();
      cells.push_back(std::move(cell));
    }
  doc["coefficients"] = std::move(cells);
  return finish(doc);
}

TwistedSeries series_from_json(const std::string& text) {
  json doc = json::parse(text, nullptr, true);
  TwistedSeries s;
  s.rank = doc.at("rank").get<int>();
  s.truncation = doc.at("truncation").get<int>();
  if (s.rank < 1 || s.truncation < 0) throw ParseError("bad series header");
  const auto pts = fixed_points(s.rank);
  for (const auto& d : degrees_up_to(s.rank, s.truncation)) {
    LocalizedClass cls;
    cls.rank = s.rank;
    cls.values.assign(pts.size(), QRational(s.rank));
    s.coeffs.emplace(d, std::move(cls));
  }
  std::set<std::pair<DegreeVector, int>> seen;
  for (const auto& cell : doc.at("coefficients")) {
    DegreeVector d = cell.at("degree").get<DegreeVector>();
    FlagPoint p{cell.at("sigma").get<std::vector<int>>()};
    int idx = fixed_point_index(s.rank, p);
    if (!s.coeffs.count(d)) throw ParseError("coefficient degree beyond truncation");
    QRational num = parse_qrational(s.rank, cell.at("num").get<std::string>());
    QRational den = parse_qrational(s.rank, cell.at("den").get<std::string>());
    s.coeffs.at(d).values[idx] = num / den;
    seen.insert({d, idx});
  }
  if (seen.size() != s.coeffs.size() * pts.size())
    throw ParseError("series document is missing coefficient cells");
  return s;
}

std::string euler_to_json(const DegreeVector& d, const std::vector<int>& z,
                          const QRational& character) {
  json doc;
  doc["degree"] = d;
  doc["z"] = z;
  doc["character"] = character.str();
  return finish(doc);
}

std::string census_to_json(int rank, const DegreeVector& d,
                           const std::vector<HQFixedPoint>& points,
                           const std::vector<int>& gaps) {
  if (!gaps.empty() && gaps.size() != points.size())
    throw Error("census gap column does not match the rows");
  json doc;
  doc["rank"] = rank;
  doc["degree"] = d;
  doc["k_d"] = k_d(rank, d);
  json rows = json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    json row;
    row["sigma"] = points[i].sigma.sigma;
    row["delta_plus"] = points[i].delta_plus;
    row["delta_minus"] = points[i].delta_minus;
    if (gaps.empty())
      row["gap"] = nullptr;
    else
      row["gap"] = gaps[i];
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return finish(doc);
}

std::string conservation_to_json(int rank,
                                 const std::vector<DifferenceOperator>& ops,
                                 const std::vector<std::string>& eigenvalues,
                                 const std::vector<bool>& passes) {
  if (eigenvalues.size() != ops.size() || passes.size() != ops.size())
    throw Error("conservation report columns do not match");
  json doc;
  doc["rank"] = rank;
  json arr = json::array();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    json op;
    json terms = json::array();
    for (const auto& [m, coeff] : ops[i].terms) {
      json term;
      term["shift"] = m;
      json cmap;
      for (const auto& [k, c] : coeff) cmap[q_monomial_key(k)] = c.str();
      term["coeff"] = std::move(cmap);
      terms.push_back(std::move(term));
    }
    op["terms"] = std::move(terms);
    op["eigenvalue"] = eigenvalues[i];
    op["pass"] = static_cast<bool>(passes[i]);
    arr.push_back(std::move(op));
  }
  doc["operators"] = std::move(arr);
  return finish(doc);
}

std::string checks_to_json(const std::vector<std::pair<std::string, bool>>& checks) {
  json doc;
  json arr = json::array();
  bool all = true;
  for (const auto& [name, pass] : checks) {
    json c;
    c["name"] = name;
    c["pass"] = pass;
    all = all && pass;
    arr.push_back(std::move(c));
  }
  doc["checks"] = std::move(arr);
  doc["pass"] = all;
  return finish(doc);
}

}  // namespace qtoda
