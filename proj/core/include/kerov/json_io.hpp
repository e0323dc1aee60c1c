#pragma once

#include <string>

#include "kerov/diagram.hpp"
#include "kerov/kerov.hpp"
#include "kerov/polynomial.hpp"
#include "kerov/series.hpp"
#include "kerov/stanley.hpp"

namespace kerov {

// All output is deterministic: sorted keys, canonical exponent vectors,
// big numbers as decimal strings.

std::string series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& text);

std::string polynomial_to_json(const CumulantPolynomial& p,
                               const std::string& symbol = "R");
CumulantPolynomial polynomial_from_json(const std::string& text);

std::string diagram_to_json(const MultiRectangular& d);
// Accepts {"p": [...], "q": [...]} with rational strings, or
// {"partition": [ints]}.
MultiRectangular diagram_from_json(const std::string& text);

std::string stanley_to_json(const StanleyPolynomial& s);

std::string kerov_result_to_json(const KerovResult& r);

}  // namespace kerov
