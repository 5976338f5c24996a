#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtoda/census.hpp"
#include "qtoda/conservation.hpp"
#include "qtoda/series.hpp"

namespace qtoda {

// JSON documents exchanged by the tools.  Output is deterministic: keys keep
// insertion order, every value uses the canonical text format, documents are
// two-space indented and end with a newline.

// {"rank", "truncation", "coefficients": [{"degree", "sigma", "num", "den"}]}
std::string series_to_json(const TwistedSeries& s);

// Reads the same schema back; every degree within the stated truncation must
// carry all fixed points.
TwistedSeries series_from_json(const std::string& text);

// {"degree": [...], "z": [...], "character": str}
std::string euler_to_json(const DegreeVector& d, const std::vector<int>& z,
                          const QRational& character);

// {"rank", "degree", "k_d", "rows": [{"sigma", "delta_plus", "delta_minus",
// "gap"}]}; gaps are optional and parallel to the rows.
std::string census_to_json(int rank, const DegreeVector& d,
                           const std::vector<HQFixedPoint>& points,
                           const std::vector<int>& gaps = {});

// {"rank", "operators": [{"terms": [{"shift", "coeff": {Q-monomial: str}}],
// "eigenvalue", "pass"}]}; eigenvalue strings parallel to the operators.
std::string conservation_to_json(int rank,
                                 const std::vector<DifferenceOperator>& ops,
                                 const std::vector<std::string>& eigenvalues,
                                 const std::vector<bool>& passes);

// {"checks": [{"name", "pass"}], "pass": all}
std::string checks_to_json(const std::vector<std::pair<std::string, bool>>& checks);

}  // namespace qtoda
