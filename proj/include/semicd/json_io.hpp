#pragma once

// JSON renderings of the library's value types.  Coefficients travel as
// decimal strings so consumers never face integer-width limits.

#include "semicd/ncpoly.hpp"
#include "semicd/poset.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace semicd {

inline nlohmann::json ncpoly_to_json(const NcPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : p.terms())
    terms.push_back({{"word", w.empty() ? "1" : w}, {"coeff", c.str()}});
  return {{"alphabet", alphabet_name(p.alphabet())}, {"terms", terms}};
}

inline NcPolynomial ncpoly_from_json(const nlohmann::json& j) {
  const std::string alphabet = j.at("alphabet").get<std::string>();
  if (alphabet != "ab" && alphabet != "cd")
    throw PolyParseError("unknown alphabet '" + alphabet + "'");
  NcPolynomial p(alphabet == "ab" ? Alphabet::ab : Alphabet::cd);
  for (const auto& term : j.at("terms")) {
    std::string word = term.at("word").get<std::string>();
    if (word == "1") word.clear();
    const std::string coeff = term.at("coeff").get<std::string>();
    if (p.terms().count(word)) throw PolyParseError("duplicate word '" + word + "'");
    try {
      p.add_term(word, Int(coeff));
    } catch (const std::invalid_argument& e) {
      throw PolyParseError(e.what());
    } catch (const std::runtime_error& e) {
      throw PolyParseError(e.what());
    }
  }
  return p;
}

inline nlohmann::json flag_vector_to_json(const FlagVector& f) {
  nlohmann::json values;
  for (std::uint32_t mask = 0; mask < f.values.size(); ++mask)
    values[subset_to_string(mask)] = f.values[mask].str();
  return values;
}

}  // namespace semicd
