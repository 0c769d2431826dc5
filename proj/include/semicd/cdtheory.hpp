#pragma once

// The polynomial families and theorem verifiers built on top of the poset,
// simplicial, homology, and permutation layers: Phi-check tables (two
// independent routes), the h-vector expansion of the cd-index, P-polynomials
// with their closed form, identity and recurrence checks, coefficient bound
// suites, Buchsbaum lower bounds, gamma-vectors, and the Charney-Davis
// quantity.

#include "semicd/andre.hpp"
#include "semicd/arith.hpp"
#include "semicd/homology.hpp"
#include "semicd/ncpoly.hpp"
#include "semicd/poset.hpp"
#include "semicd/report.hpp"
#include "semicd/simplicial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semicd {

struct NotApplicable : std::runtime_error {
  explicit NotApplicable(const std::string& what) : std::runtime_error(what) {}
};

struct NonPalindromicH : std::invalid_argument {
  explicit NonPalindromicH(const std::string& what) : std::invalid_argument(what) {}
};

enum class PhiProvenance { FromPosets, FromAndre };

/// Phi-check polynomials for one n: entries 0..n, the last identically zero;
/// all entries homogeneous of degree n with nonnegative coefficients.
struct PhiTable {
  int n = 0;
  PhiProvenance provenance = PhiProvenance::FromPosets;
  std::vector<NcPolynomial> entries;

  const NcPolynomial& at(int i) const {
    if (i < 0 || i > n) throw std::out_of_range("PhiTable index out of range");
    return entries[static_cast<std::size_t>(i)];
  }
};

/// Consecutive cd-index differences along the semisuspension shelling.
inline PhiTable phi_table_from_posets(int n) {
  if (n < 1) throw std::invalid_argument("phi_table_from_posets: n must be positive");
  PhiTable t{n, PhiProvenance::FromPosets, {}};
  NcPolynomial previous(Alphabet::cd);
  for (int i = 0; i <= n - 1; ++i) {
    const NcPolynomial current = cd_index(semisuspension_sphere(n, i));
    t.entries.push_back(current - previous);
    previous = current;
  }
  t.entries.push_back(NcPolynomial(Alphabet::cd));
  return t;
}

/// Permutation-counting route (the independent oracle for the poset route).
inline PhiTable phi_table_from_andre(int n, int limit = 9) {
  if (n < 1) throw std::invalid_argument("phi_table_from_andre: n must be positive");
  PhiTable t{n, PhiProvenance::FromAndre, {}};
  for (int i = 0; i <= n - 1; ++i) t.entries.push_back(phi_check_via_andre(n, i, limit));
  t.entries.push_back(NcPolynomial(Alphabet::cd));
  return t;
}

/// Cached default table: the poset route up to n = 8, the permutation route
/// at n = 9 (where the poset route gets slow and the enumeration stays fast).
inline const PhiTable& phi_table(int n) {
  static std::map<int, PhiTable> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  PhiTable t = (n <= 8) ? phi_table_from_posets(n) : phi_table_from_andre(n, n);
  return cache.emplace(n, std::move(t)).first->second;
}

/// P-polynomials: P^n_j = sum_{i=j}^{n-1} (-1)^(i-j) C(n,i) Phi-check^n_i.
struct PTable {
  int n = 0;
  std::vector<NcPolynomial> entries;  // j = 0..n-1

  const NcPolynomial& at(int j) const {
    if (j < 0 || j > n - 1) throw std::out_of_range("PTable index out of range");
    return entries[static_cast<std::size_t>(j)];
  }
};

inline PTable p_table_from(const PhiTable& phi) {
  PTable t{phi.n, {}};
  for (int j = 0; j <= phi.n - 1; ++j) {
    NcPolynomial acc(Alphabet::cd);
    for (int i = j; i <= phi.n - 1; ++i)
      acc += parity_sign(i - j) * binomial(phi.n, i) * phi.at(i);
    t.entries.push_back(std::move(acc));
  }
  return t;
}

inline PTable p_table(int n) { return p_table_from(phi_table(n)); }

/// (c^2 - 2d)^(n/2), times c when n is odd.
inline NcPolynomial closed_form_p0(int n) {
  if (n < 1) throw std::invalid_argument("closed_form_p0: n must be positive");
  NcPolynomial base(Alphabet::cd);
  base.add_term("cc", Int(1));
  base.add_term("d", Int(-2));
  NcPolynomial r = NcPolynomial::one(Alphabet::cd);
  for (int k = 0; k < n / 2; ++k) r = r * base;
  if (n % 2) r = r * NcPolynomial::monomial(Alphabet::cd, "c");
  return r;
}

/// Phi_P = sum_{i=0}^{n-1} h_i Phi-check^n_i (h_n unused).
inline NcPolynomial cd_index_from_h(const std::vector<Int>& h) {
  if (h.size() < 2) throw std::invalid_argument("cd_index_from_h: need rank at least 2");
  const int n = static_cast<int>(h.size()) - 1;
  const auto& t = phi_table(n);
  NcPolynomial acc(Alphabet::cd);
  for (int i = 0; i <= n - 1; ++i) acc += h[static_cast<std::size_t>(i)] * t.at(i);
  return acc;
}

/// Coefficient of every word as a linear form in h_0..h_{n-1}: word ->
/// (coefficient in Phi-check^n_0, ..., Phi-check^n_{n-1}).
inline std::map<std::string, std::vector<Int>, WordOrder> symbolic_h_table(int n) {
  const auto& t = phi_table(n);
  std::map<std::string, std::vector<Int>, WordOrder> table;
  for (int i = 0; i <= n - 1; ++i)
    for (const auto& [w, c] : t.at(i).terms()) {
      auto [it, inserted] =
          table.try_emplace(w, std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
      it->second[static_cast<std::size_t>(i)] = c;
    }
  return table;
}

/// The linear map sending a cd-polynomial to its associated flag f-vector:
/// expand to the ab-side and invert Psi -> chi by a |-> a+b.
inline FlagVector flag_f_of_cd(const NcPolynomial& q, int n) {
  if (q.alphabet() != Alphabet::cd)
    throw AlphabetMismatch("flag_f_of_cd expects a polynomial over {c,d}");
  if (!q.is_homogeneous() || (!q.is_zero() && q.degree() != n))
    throw NonHomogeneous("flag_f_of_cd: polynomial must be homogeneous of degree n");
  const NcPolynomial chi =
      substitute(cd_to_ab(q), NcPolynomial::letter_sum(Alphabet::ab),
                 NcPolynomial::monomial(Alphabet::ab, "b"));
  FlagVector f{n, FlagKind::F, std::vector<Int>(std::size_t(1) << n, Int(0))};
  for (std::uint32_t mask = 0; mask < f.values.size(); ++mask)
    f.values[mask] = chi.coeff(ab_word_for_subset(mask, n));
  return f;
}

// ---------------------------------------------------------------------------
// Verifier suites.  Each returns a structured report; asserted checks decide
// the outcome, advisory checks are informational (see the bound suites).
// ---------------------------------------------------------------------------

/// For odd n and every S: the alternating binomial combination of the flag
/// f-vectors of Phi-check^n_i over the upper index range must match its
/// binomial closed form (plus 1 exactly at S = {n}).
inline Report verify_identity_hard(int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("verify_identity_hard requires odd n >= 1");
  Report report{"identity-hard", n, {}};
  const auto& t = phi_table(n);
  std::map<int, FlagVector> flags;
  for (int i = n / 2 + 1; i <= n - 1; ++i) flags.emplace(i, flag_f_of_cd(t.at(i), n));

  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
    Int lhs = 0;
    for (const auto& [i, f] : flags) lhs += parity_sign(i) * binomial(n, i) * f.at(mask);

    Int rhs = 0;
    std::vector<long long> s;
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) s.push_back(b + 1);
    if (!s.empty()) {
      const long long sk = s.back();
      std::vector<long long> parts;
      for (std::size_t k = 0; k < s.size(); ++k) parts.push_back(s[k] - (k ? s[k - 1] : 0));
      Int inner = 0;
      for (long long j = n / 2 + 1; j <= sk; ++j) inner += parity_sign(j) * binomial(sk, j);
      rhs = binomial(n, sk) * multinomial(parts) * inner;
      if (mask == (std::uint32_t(1) << (n - 1))) rhs += 1;  // delta_{S,{n}}
    }
    report.add_equality("S=" + subset_to_string(mask), lhs, rhs);
  }
  return report;
}

/// The two coefficient identities relating consecutive Phi-check differences
/// at n to the table at n-1, for all 0 <= i <= n-1 and all words.
inline Report verify_coefficient_identities(int n) {
  if (n < 2) throw std::invalid_argument("verify_coefficient_identities requires n >= 2");
  Report report{"coefficient-identities", n, {}};
  const auto& t = phi_table(n);
  const auto& prev = phi_table(n - 1);
  for (int i = 0; i <= n - 1; ++i) {
    const NcPolynomial diff = t.at(i) - t.at(i + 1);
    for (const auto& w : words_of_degree(Alphabet::cd, n - 1))
      report.add_equality("(wc) i=" + std::to_string(i) + " w=" + (w.empty() ? "1" : w),
                          diff.coeff(w + "c"), prev.at(i).coeff(w));
    for (const auto& w : words_of_degree(Alphabet::cd, n - 2))
      report.add_equality("(wd) i=" + std::to_string(i) + " w=" + (w.empty() ? "1" : w),
                          diff.coeff(w + "d"),
                          prev.at(n - 1 - i).coeff(w + "c") - prev.at(i).coeff(w + "c"));
  }
  return report;
}

/// The wc and wd recursions for [.]P^n_j in terms of level n-1, for
/// 2 <= j <= n-2 and every word.
inline Report verify_recurrences(int n) {
  if (n < 5) throw std::invalid_argument("verify_recurrences requires n >= 5");
  Report report{"p-recurrence", n, {}};
  const PTable pn = p_table(n), pm = p_table(n - 1);
  const auto& phi = phi_table(n);
  for (int j = 2; j <= n - 2; ++j) {
    for (const auto& w : words_of_degree(Alphabet::cd, n - 1))
      report.add_equality(
          "(wc) j=" + std::to_string(j) + " w=" + (w.empty() ? "1" : w),
          pn.at(j).coeff(w + "c"),
          pm.at(j).coeff(w) + binomial(n - 1, j - 1) * phi.at(j).coeff(w + "c"));
    for (const auto& w : words_of_degree(Alphabet::cd, n - 2)) {
      const std::string wc = w + "c";
      const Int rhs = parity_sign(n + j + 1) * pm.at(0).coeff(wc) - pm.at(j).coeff(wc) +
                      pm.at(n - j).coeff(wc) +
                      binomial(n - 1, j - 1) * phi.at(j).coeff(w + "d");
      report.add_equality("(wd) j=" + std::to_string(j) + " w=" + (w.empty() ? "1" : w),
                          pn.at(j).coeff(w + "d"), rhs);
    }
  }
  return report;
}

namespace detail {

inline bool all_c_runs_even(const std::string& w) {
  int run = 0;
  for (char ch : w) {
    if (ch == 'c') {
      ++run;
    } else {
      if (run % 2) return false;
      run = 0;
    }
  }
  return run % 2 == 0;
}

}  // namespace detail

/// Exact expression for [wd]P^n_2: (n-1)[wd]Phi-check^n_1 + [wc]Phi-check^{n-1}_0,
/// plus the parity correction (1+(-1)^n)(-1)^(m+1) 2^m exactly when the
/// closed form of P^{n-1}_0 contributes (n even with w over {cc,d}, n odd
/// with wc over {cc,d}).
inline Report verify_lemma_pn2(int n) {
  if (n < 5) throw std::invalid_argument("verify_lemma_pn2 requires n >= 5");
  Report report{"pn2-exact", n, {}};
  const PTable pn = p_table(n);
  const auto& phi = phi_table(n);
  const auto& prev = phi_table(n - 1);
  for (const auto& w : words_of_degree(Alphabet::cd, n - 2)) {
    long long m = 0;
    for (char ch : w)
      if (ch == 'd') ++m;
    const bool parity_case =
        (n % 2 == 0) ? detail::all_c_runs_even(w) : detail::all_c_runs_even(w + "c");
    Int rhs = Int(n - 1) * phi.at(1).coeff(w + "d") + prev.at(0).coeff(w + "c");
    if (parity_case) rhs += (Int(1) + parity_sign(n)) * parity_sign(m + 1) * int_pow(2, m);
    report.add_equality(std::string("(") + (parity_case ? "1" : "2") + ") w=" + w,
                        pn.at(2).coeff(w + "d"), rhs);
  }
  return report;
}

/// Coefficient lower bounds.  Asserted: the Phi-check bounds ([wc] at j=0 and
/// [wd] for 1 <= j <= n-1 against 2^m), the [wd] P-bound for 2 <= j <= n-1,
/// and nonnegativity of every P^n_j coefficient for j >= 2.  Advisory: the
/// [wc] P-bound, whose nominal constant C(n-1,j-1) 2^m fails already on the
/// computed tables (e.g. [dc.c]P^4_2 = 0); it is reported with slack for
/// every j including the j = n-1 boundary.
inline Report bound_suites(int n) {
  if (n < 3) throw std::invalid_argument("bound_suites requires n >= 3");
  Report report{"coefficient-bounds", n, {}};
  const auto& phi = phi_table(n);
  const PTable pt = p_table(n);
  auto d_count = [](const std::string& w) {
    long long m = 0;
    for (char ch : w)
      if (ch == 'd') ++m;
    return m;
  };

  if (n >= 4)
    for (const auto& w : words_of_degree(Alphabet::cd, n - 1))
      report.add_bound("phi-check[0] [wc] w=" + w, phi.at(0).coeff(w + "c"),
                       int_pow(2, d_count(w)));
  if (n >= 5)
    for (int j = 1; j <= n - 1; ++j)
      for (const auto& w : words_of_degree(Alphabet::cd, n - 2))
        report.add_bound("phi-check[" + std::to_string(j) + "] [wd] w=" + (w.empty() ? "1" : w),
                         phi.at(j).coeff(w + "d"), int_pow(2, d_count(w)));

  for (int j = 2; j <= n - 1; ++j) {
    for (const auto& w : words_of_degree(Alphabet::cd, n - 2))
      report.add_bound("p[" + std::to_string(j) + "] [wd] w=" + (w.empty() ? "1" : w),
                       pt.at(j).coeff(w + "d"),
                       (binomial(n - 1, j - 1) - 1) * int_pow(2, d_count(w)));
    for (const auto& [w, c] : pt.at(j).terms())
      report.add_bound("p[" + std::to_string(j) + "] nonnegative w=" + w, c, Int(0));
    for (const auto& w : words_of_degree(Alphabet::cd, n - 1))
      report.add_bound("p[" + std::to_string(j) + "] [wc] w=" + w + (j == n - 1 ? " (boundary)" : ""),
                       pt.at(j).coeff(w + "c"), binomial(n - 1, j - 1) * int_pow(2, d_count(w)),
                       /*advisory=*/true);
  }
  return report;
}

/// Proof-level Buchsbaum bound, asserted word by word:
///   [w]Phi_P >= sum_{j=2}^{n-1} beta~_{j-1}(order complex; F) [w]P^n_j,
/// plus the closed-form 2^m bounds as advisory lines with slack.
inline Report buchsbaum_cd_bounds(const GradedPoset& p, const FieldChoice& field) {
  if (classify(p) == EulerianClass::Neither)
    throw NotApplicable("poset is not semi-Eulerian");
  if (!is_simplicial(p)) throw NotApplicable("poset is not simplicial");
  const SimplicialComplex oc = order_complex(p);
  if (!is_buchsbaum(oc, field))
    throw NotApplicable("order complex is not Buchsbaum over " + field.str());

  const int n = p.n();
  Report report{"buchsbaum-cd-bounds(" + field.str() + ")", n, {}};
  const NcPolynomial cd = cd_index_unchecked(p);
  const BettiVector betti = betti_numbers(oc, field);
  const PTable pt = p_table(n);

  for (const auto& w : words_of_degree(Alphabet::cd, n)) {
    Int rhs = 0;
    for (int j = 2; j <= n - 1; ++j) rhs += Int(betti.reduced(j - 1)) * pt.at(j).coeff(w);
    report.add_bound("[w]Phi vs sum beta P, w=" + (w.empty() ? "1" : w), cd.coeff(w), rhs);
  }

  auto d_count = [](const std::string& w) {
    long long m = 0;
    for (char ch : w)
      if (ch == 'd') ++m;
    return m;
  };
  Int weight_c = 0, weight_d = 0;
  for (int j = 2; j <= n - 1; ++j) {
    weight_c += Int(betti.reduced(j - 1)) * binomial(n - 1, j - 1);
    weight_d += Int(betti.reduced(j - 1)) * (binomial(n - 1, j - 1) - 1);
  }
  for (const auto& w : words_of_degree(Alphabet::cd, n - 1))
    report.add_bound("closed-form [wc] w=" + w, cd.coeff(w + "c"),
                     int_pow(2, d_count(w)) * weight_c, /*advisory=*/true);
  for (const auto& w : words_of_degree(Alphabet::cd, n - 2))
    report.add_bound("closed-form [wd] w=" + (w.empty() ? "1" : w), cd.coeff(w + "d"),
                     int_pow(2, d_count(w)) * weight_d, /*advisory=*/true);
  return report;
}

/// Novik-Swartz h-vector lower bounds for a Buchsbaum simplicial poset,
/// asserted entrywise.
inline Report novik_swartz_report(const GradedPoset& p, const FieldChoice& field) {
  if (!is_simplicial(p)) throw NotApplicable("poset is not simplicial");
  const SimplicialComplex oc = order_complex(p);
  if (!is_buchsbaum(oc, field))
    throw NotApplicable("order complex is not Buchsbaum over " + field.str());
  Report report{"novik-swartz(" + field.str() + ")", p.n(), {}};
  const auto h = h_vector_simplicial(p);
  const auto bounds = novik_swartz_bounds(p.n(), betti_numbers(oc, field));
  for (std::size_t i = 0; i < h.size(); ++i)
    report.add_bound("h_" + std::to_string(i), h[i], bounds[i]);
  return report;
}

/// gamma-coefficients of the order complex via Phi_P(1, 2t); requires an
/// Eulerian poset of odd rank.
inline std::vector<Int> gamma_vector(const GradedPoset& p) {
  if (classify(p) != EulerianClass::Eulerian)
    throw std::invalid_argument("gamma_vector requires an Eulerian poset");
  const int n = p.n();
  if (n % 2 != 0) throw std::invalid_argument("gamma_vector requires odd rank (even n)");
  const IntPolynomial two_t = Int(2) * IntPolynomial::variable();
  const IntPolynomial eval = evaluate_commutative(cd_index_unchecked(p), IntPolynomial(Int(1)),
                                                  two_t);
  std::vector<Int> gamma(static_cast<std::size_t>(n / 2) + 1, Int(0));
  for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] = eval.coeff(static_cast<int>(i));
  return gamma;
}

/// gamma from a palindromic h-vector: the unique expansion
/// sum h_i t^i = sum gamma_i t^i (1+t)^(n-2i), solved triangularly.
inline std::vector<Int> gamma_from_h(const std::vector<Int>& h) {
  if (h.empty()) throw std::invalid_argument("gamma_from_h: empty h-vector");
  const int n = static_cast<int>(h.size()) - 1;
  for (int i = 0; i <= n; ++i)
    if (h[static_cast<std::size_t>(i)] != h[static_cast<std::size_t>(n - i)])
      throw NonPalindromicH("h-vector is not palindromic");
  IntPolynomial rest{std::vector<Int>(h)};
  const IntPolynomial one_plus_t(std::vector<Int>{Int(1), Int(1)});
  std::vector<Int> gamma(static_cast<std::size_t>(n / 2) + 1, Int(0));
  for (int i = 0; i <= n / 2; ++i) {
    const Int g = rest.coeff(i);
    gamma[static_cast<std::size_t>(i)] = g;
    std::vector<Int> g_times_ti(static_cast<std::size_t>(i) + 1, Int(0));
    g_times_ti.back() = g;
    rest -= IntPolynomial(std::move(g_times_ti)) * one_plus_t.pow(n - 2 * i);
  }
  if (!rest.is_zero())
    throw std::logic_error("gamma_from_h: expansion of a palindromic h-vector did not terminate");
  return gamma;
}

/// (-1)^k sum_{i=0}^{2k} (-1)^i h_i for an h-vector of odd length 2k+1.
inline Int charney_davis(const std::vector<Int>& h) {
  if (h.size() % 2 == 0)
    throw std::invalid_argument("charney_davis requires an h-vector of odd length");
  const long long k = (static_cast<long long>(h.size()) - 1) / 2;
  Int acc = 0;
  for (std::size_t i = 0; i < h.size(); ++i)
    acc += parity_sign(static_cast<long long>(i)) * h[i];
  return parity_sign(k) * acc;
}

/// Is the sequence ([w]Phi-check^n_i : 0 <= i <= n-1) unimodal for every w?
/// Informational only: every check is advisory.
inline Report unimodality_report(int n) {
  Report report{"phi-check-unimodality", n, {}};
  const auto& t = phi_table(n);
  for (const auto& w : words_of_degree(Alphabet::cd, n)) {
    std::vector<Int> seq;
    for (int i = 0; i <= n - 1; ++i) seq.push_back(t.at(i).coeff(w));
    bool rising = true, unimodal = true;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (seq[i + 1] > seq[i] && !rising) unimodal = false;
      if (seq[i + 1] < seq[i]) rising = false;
    }
    std::string shown;
    for (const auto& v : seq) shown += (shown.empty() ? "" : ",") + v.str();
    report.add_flag("w=" + w, unimodal, "(" + shown + ")", /*advisory=*/true);
  }
  return report;
}

/// G(Phi-check^n_j) = Phi-check^{n+1}_{j+1} for 1 <= n <= max_n and all j.
inline Report verify_derivation(int max_n) {
  Report report{"derivation-recursion", max_n, {}};
  for (int n = 1; n <= max_n; ++n) {
    const auto& t = phi_table(n);
    const auto& next = phi_table(n + 1);
    for (int j = 0; j <= n - 1; ++j) {
      const NcPolynomial lhs = derivation_g(t.at(j));
      const NcPolynomial rhs = next.at(j + 1);
      const NcPolynomial diff = lhs - rhs;
      report.add_flag("n=" + std::to_string(n) + " j=" + std::to_string(j), diff.is_zero(),
                      diff.is_zero() ? "" : "difference " + format(diff));
    }
  }
  return report;
}

}  // namespace semicd
