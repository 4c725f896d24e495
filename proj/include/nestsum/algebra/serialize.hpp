#pragma once

#include <string>

#include "json.hpp"
#include "nestsum/algebra/basis.hpp"
#include "nestsum/algebra/lincomb.hpp"
#include "nestsum/algebra/words.hpp"

// JSON shapes, shared by the library and the command-line tool:
//   harmonic word      [-2, 1, 1]
//   general word       [[exponent, "weight"], ...]
//   cyclotomic word    [[a, b, c, "s"], ...]
//   linear combination {"terms": [{"coeff": "-1/2", "word": <word>}, ...]}
//   basis polynomial   {"terms": [{"coeff": "1/2", "word": [<word>, ...]}, ...]}
// Coefficients and rational weights are fraction strings without decimals.

namespace nestsum {

inline nlohmann::json to_json(const HarmonicIndex& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (int a : w.entries) arr.push_back(a);
  return arr;
}

inline nlohmann::json to_json(const GeneralIndex& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : w.entries) arr.push_back({e.exponent, e.weight.str()});
  return arr;
}

inline nlohmann::json to_json(const CyclotomicIndex& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : w.entries) arr.push_back({e.a, e.b, e.c, e.s.str()});
  return arr;
}

inline nlohmann::json to_json(const BasisMonomial& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& w : m) arr.push_back(to_json(w));
  return arr;
}

template <typename Key>
nlohmann::json to_json(const LinComb<Key>& lc) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : lc.terms())
    terms.push_back({{"coeff", c.str()}, {"word", to_json(k)}});
  return {{"terms", terms}};
}

}  // namespace nestsum
