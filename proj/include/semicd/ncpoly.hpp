#pragma once

// Noncommutative polynomials with exact integer coefficients over the two-letter
// alphabets {a,b} and {c,d}.  deg(a) = deg(b) = deg(c) = 1, deg(d) = 2.
//
// Values are immutable in spirit: every operation returns a fresh polynomial,
// no zero coefficient is ever stored, and term maps are kept in the canonical
// order (total degree, then lexicographic), so formatting is deterministic.

#include "semicd/arith.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semicd {

enum class Alphabet { ab, cd };

inline char letter_lo(Alphabet a) { return a == Alphabet::ab ? 'a' : 'c'; }
inline char letter_hi(Alphabet a) { return a == Alphabet::ab ? 'b' : 'd'; }
inline std::string alphabet_name(Alphabet a) { return a == Alphabet::ab ? "ab" : "cd"; }

/// Total degree of a word; 'd' is the only letter of degree 2.
inline int word_degree(const std::string& w) {
  int deg = static_cast<int>(w.size());
  for (char ch : w)
    if (ch == 'd') ++deg;
  return deg;
}

struct AlphabetMismatch : std::invalid_argument {
  explicit AlphabetMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NonHomogeneous : std::invalid_argument {
  explicit NonHomogeneous(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by ab_to_cd when no cd-polynomial expands to the input; the witness
/// is the offending lexicographically least word (a GDS violation certificate).
struct NotCdExpressible : std::runtime_error {
  explicit NotCdExpressible(std::string witness_word)
      : std::runtime_error("polynomial admits no cd-expression; undecodable word '" +
                           witness_word + "'"),
        witness(std::move(witness_word)) {}
  std::string witness;
};

struct PolyParseError : std::runtime_error {
  explicit PolyParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Canonical term order: total degree first, then plain lexicographic
/// comparison (works for both alphabets since 'a' < 'b' and 'c' < 'd').
struct WordOrder {
  bool operator()(const std::string& x, const std::string& y) const {
    const int dx = word_degree(x), dy = word_degree(y);
    if (dx != dy) return dx < dy;
    return x < y;
  }
};

class NcPolynomial {
 public:
  using TermMap = std::map<std::string, Int, WordOrder>;

  explicit NcPolynomial(Alphabet alphabet) : alphabet_(alphabet) {}

  static NcPolynomial zero(Alphabet a) { return NcPolynomial(a); }
  static NcPolynomial one(Alphabet a) { return monomial(a, ""); }
  static NcPolynomial monomial(Alphabet a, const std::string& word, Int coeff = Int(1)) {
    NcPolynomial p(a);
    p.add_term(word, std::move(coeff));
    return p;
  }
  /// x + y over the given alphabet (a+b or c+d).
  static NcPolynomial letter_sum(Alphabet a) {
    NcPolynomial p(a);
    p.add_term(std::string(1, letter_lo(a)), Int(1));
    p.add_term(std::string(1, letter_hi(a)), Int(1));
    return p;
  }

  Alphabet alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Int coeff(const std::string& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Int(0) : it->second;
  }

  /// Largest term degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : word_degree(terms_.rbegin()->first); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = word_degree(terms_.begin()->first);
    return word_degree(terms_.rbegin()->first) == d;
  }

  void add_term(const std::string& word, Int c) {
    check_word(word);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(word, Int(0));
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  NcPolynomial& operator+=(const NcPolynomial& o) {
    require_same_alphabet(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NcPolynomial& operator-=(const NcPolynomial& o) {
    require_same_alphabet(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  NcPolynomial& operator*=(const Int& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend NcPolynomial operator+(NcPolynomial x, const NcPolynomial& y) { return x += y; }
  friend NcPolynomial operator-(NcPolynomial x, const NcPolynomial& y) { return x -= y; }
  friend NcPolynomial operator-(NcPolynomial x) {
    for (auto& [w, c] : x.terms_) c = -c;
    return x;
  }
  friend NcPolynomial operator*(NcPolynomial x, const Int& s) { return x *= s; }
  friend NcPolynomial operator*(const Int& s, NcPolynomial x) { return x *= s; }

  /// Concatenation product, distributed bilinearly.
  friend NcPolynomial operator*(const NcPolynomial& x, const NcPolynomial& y) {
    x.require_same_alphabet(y);
    NcPolynomial r(x.alphabet_);
    for (const auto& [wx, cx] : x.terms_)
      for (const auto& [wy, cy] : y.terms_) r.add_term(wx + wy, cx * cy);
    return r;
  }

  friend bool operator==(const NcPolynomial& x, const NcPolynomial& y) {
    return x.alphabet_ == y.alphabet_ && x.terms_ == y.terms_;
  }

 private:
  void require_same_alphabet(const NcPolynomial& o) const {
    if (alphabet_ != o.alphabet_)
      throw AlphabetMismatch("operands over different alphabets (" + alphabet_name(alphabet_) +
                             " vs " + alphabet_name(o.alphabet_) + ")");
  }
  void check_word(const std::string& word) const {
    for (char ch : word)
      if (ch != letter_lo(alphabet_) && ch != letter_hi(alphabet_))
        throw std::invalid_argument("letter '" + std::string(1, ch) + "' not in alphabet " +
                                    alphabet_name(alphabet_));
  }

  Alphabet alphabet_;
  TermMap terms_;
};

/// The unique algebra homomorphism extending letter -> image, applied term-wise.
/// Both images must live over one common alphabet, which becomes the result's.
inline NcPolynomial substitute(const NcPolynomial& p, const NcPolynomial& image_lo,
                               const NcPolynomial& image_hi) {
  if (image_lo.alphabet() != image_hi.alphabet())
    throw AlphabetMismatch("substitution images over different alphabets");
  const Alphabet target = image_lo.alphabet();
  const char lo = letter_lo(p.alphabet());
  NcPolynomial r(target);
  for (const auto& [w, c] : p.terms()) {
    NcPolynomial prod = NcPolynomial::monomial(target, "", c);
    for (char ch : w) prod = prod * (ch == lo ? image_lo : image_hi);
    r += prod;
  }
  return r;
}

/// Expansion c -> a+b, d -> ab+ba.
inline NcPolynomial cd_to_ab(const NcPolynomial& q) {
  if (q.alphabet() != Alphabet::cd)
    throw AlphabetMismatch("cd_to_ab expects a polynomial over {c,d}");
  NcPolynomial d_image(Alphabet::ab);
  d_image.add_term("ab", Int(1));
  d_image.add_term("ba", Int(1));
  return substitute(q, NcPolynomial::letter_sum(Alphabet::ab), d_image);
}

namespace detail {

// The lexicographically least ab-word in the expansion of a cd-word substitutes
// c -> a and d -> ab.  Decoding scans left to right: an 'a' followed by 'b'
// consumes "ab" as d, a lone 'a' is c, and a 'b' with no pairable 'a' in front
// of it cannot arise from any cd-word.
inline std::optional<std::string> decode_lex_least(const std::string& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    if (w[i] == 'b') return std::nullopt;
    if (i + 1 < w.size() && w[i + 1] == 'b') {
      out += 'd';
      i += 2;
    } else {
      out += 'c';
      i += 1;
    }
  }
  return out;
}

}  // namespace detail

/// Inverse of cd_to_ab where it exists, by lex-least peeling: the least
/// remaining ab-word must be the lex-least expansion of some cd-word w (the
/// map w -> least expansion is injective), so subtract coeff * cd_to_ab(w) and
/// repeat.  Throws NotCdExpressible when the least word fails to decode.
inline NcPolynomial ab_to_cd(const NcPolynomial& p) {
  if (p.alphabet() != Alphabet::ab)
    throw AlphabetMismatch("ab_to_cd expects a polynomial over {a,b}");
  if (!p.is_homogeneous()) throw NonHomogeneous("ab_to_cd requires a homogeneous polynomial");
  NcPolynomial rest = p;
  NcPolynomial q(Alphabet::cd);
  while (!rest.is_zero()) {
    const auto& [word, coeff] = *rest.terms().begin();
    auto decoded = detail::decode_lex_least(word);
    if (!decoded) throw NotCdExpressible(word);
    q.add_term(*decoded, coeff);
    rest -= coeff * cd_to_ab(NcPolynomial::monomial(Alphabet::cd, *decoded));
  }
  return q;
}

/// The derivation with G(c) = d, G(d) = cd, extended by linearity and the
/// Leibniz rule over words.
inline NcPolynomial derivation_g(const NcPolynomial& q) {
  if (q.alphabet() != Alphabet::cd)
    throw AlphabetMismatch("derivation_g expects a polynomial over {c,d}");
  NcPolynomial r(Alphabet::cd);
  for (const auto& [w, c] : q.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::string image = (w[i] == 'c') ? "d" : "cd";
      r.add_term(w.substr(0, i) + image + w.substr(i + 1), c);
    }
  }
  return r;
}

/// Substitute commuting univariate values for c and d and sum.
inline IntPolynomial evaluate_commutative(const NcPolynomial& q, const IntPolynomial& c_value,
                                          const IntPolynomial& d_value) {
  if (q.alphabet() != Alphabet::cd)
    throw AlphabetMismatch("evaluate_commutative expects a polynomial over {c,d}");
  IntPolynomial r;
  for (const auto& [w, c] : q.terms()) {
    IntPolynomial prod(Int(1));
    for (char ch : w) prod *= (ch == 'c') ? c_value : d_value;
    r += c * prod;
  }
  return r;
}

/// Canonical text: terms in (degree, lex) order, each "<signed int>*<word>",
/// joined by " + "; the empty word prints as "1"; the zero polynomial as "0".
inline std::string format(const NcPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    if (!first) os << " + ";
    os << c << '*' << (w.empty() ? "1" : w);
    first = false;
  }
  return os.str();
}

inline NcPolynomial parse_ncpolynomial(const std::string& text, Alphabet alphabet) {
  NcPolynomial p(alphabet);
  if (text == "0") return p;
  if (text.empty()) throw PolyParseError("empty polynomial text");
  std::size_t pos = 0;
  while (pos != std::string::npos) {
    std::size_t next = text.find(" + ", pos);
    const std::string token =
        (next == std::string::npos) ? text.substr(pos) : text.substr(pos, next - pos);
    pos = (next == std::string::npos) ? std::string::npos : next + 3;

    const std::size_t star = token.find('*');
    if (star == std::string::npos || star == 0 || star + 1 == token.size())
      throw PolyParseError("malformed term '" + token + "'");
    const std::string digits = token.substr(0, star);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      const bool ok = (i == 0 && digits[i] == '-' && digits.size() > 1) ||
                      (digits[i] >= '0' && digits[i] <= '9');
      if (!ok) throw PolyParseError("malformed coefficient in term '" + token + "'");
    }
    const Int coeff(digits);
    std::string word = token.substr(star + 1);
    if (word == "1") word.clear();
    for (char ch : word)
      if (ch != letter_lo(alphabet) && ch != letter_hi(alphabet))
        throw PolyParseError("unknown letter '" + std::string(1, ch) + "' in term '" + token +
                             "'");
    if (p.terms().count(word)) throw PolyParseError("duplicate word '" + token + "'");
    p.add_term(word, coeff);
  }
  return p;
}

/// All words of the given total degree, in canonical (lex) order.
inline std::vector<std::string> words_of_degree(Alphabet a, int degree) {
  if (degree < 0) return {};
  if (degree == 0) return {""};
  std::vector<std::string> out;
  const std::string lo(1, letter_lo(a)), hi(1, letter_hi(a));
  const int hi_deg = (a == Alphabet::cd) ? 2 : 1;
  for (const auto& tail : words_of_degree(a, degree - 1)) out.push_back(lo + tail);
  if (degree >= hi_deg)
    for (const auto& tail : words_of_degree(a, degree - hi_deg)) out.push_back(hi + tail);
  return out;
}

}  // namespace semicd
