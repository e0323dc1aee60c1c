#include <doctest.h>

#include "kerov/json_io.hpp"

using namespace kerov;

TEST_CASE("series roundtrip and role validation") {
  TruncatedSeries s(SeriesRole::moments, 4);
  s.set_coeff(2, Rat(3, 7));
  s.set_coeff(4, Rat(-5));
  std::string text = series_to_json(s);
  TruncatedSeries back = series_from_json(text);
  CHECK(back == s);
  CHECK(series_to_json(back) == text);  // byte-stable

  CHECK_THROWS_AS(series_from_json("{\"type\":\"series\",\"role\":\"nope\","
                                   "\"coefficients\":[]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(series_from_json("{\"type\":\"series\",\"role\":\"moments\","
                                   "\"coefficients\":[]}"),
                  std::invalid_argument);
}

TEST_CASE("polynomial json is canonical") {
  CumulantPolynomial p;
  p.add_term(monomial_from_indices({7}), 1);
  p.add_term(monomial_from_indices({3, 2}), 35);
  p.add_term(monomial_from_indices({3}), Rat(-84));
  std::string text = polynomial_to_json(p);
  CumulantPolynomial back = polynomial_from_json(text);
  CHECK(back == p);
  CHECK(polynomial_to_json(back) == text);
  // exponent keys appear sorted by index
  CHECK(text.find("\"2\": 1") != std::string::npos);
  CHECK(text.find("\"7\": 1") != std::string::npos);
}

TEST_CASE("diagram json") {
  MultiRectangular d({Rat(1), Rat(3, 2)}, {Rat(5, 2), Rat(1)});
  MultiRectangular back = diagram_from_json(diagram_to_json(d));
  CHECK(back == d);

  MultiRectangular from_partition =
      diagram_from_json("{\"partition\": [4, 3, 1]}");
  CHECK(from_partition == MultiRectangular::from_partition({4, 3, 1}));

  CHECK_THROWS(diagram_from_json("{\"p\": [\"1\"], \"q\": [\"x\"]}"));
}

TEST_CASE("golden json formats") {
  CumulantPolynomial k3;
  k3.add_term(monomial_from_indices({4}), 1);
  k3.add_term(monomial_from_indices({2}), 1);
  CHECK(polynomial_to_json(k3) == R"({
  "type": "polynomial",
  "symbol": "R",
  "terms": [
    {
      "exponents": {
        "4": 1
      },
      "num": "1",
      "den": "1"
    },
    {
      "exponents": {
        "2": 1
      },
      "num": "1",
      "den": "1"
    }
  ]
}
)");

  TruncatedSeries s(SeriesRole::moments, 2);
  s.set_coeff(2, Rat(1, 2));
  CHECK(series_to_json(s) == R"({
  "type": "series",
  "role": "moments",
  "order": 2,
  "coefficients": [
    {
      "num": "0",
      "den": "1"
    },
    {
      "num": "1",
      "den": "2"
    }
  ]
}
)");
}

TEST_CASE("stanley and result json") {
  StanleyPolynomial sp = stanley_character({2}, 1);
  std::string text = stanley_to_json(sp);
  CHECK(text.find("\"coeff\": \"-1\"") != std::string::npos);
  CHECK(stanley_to_json(sp) == text);

  KerovResult r = kerov_polynomial(3);
  std::string rj = kerov_result_to_json(r);
  CHECK(rj.find("\"factorizations\": 6") != std::string::npos);
  CHECK(rj.find("\"cycles\"") != std::string::npos);
}
