#pragma once

// Andre permutations: the definition-level predicate, the recursive
// characterization, cd-types, and exhaustive enumeration used as the
// permutation-counting route to the Phi-check polynomials.

#include "semicd/ncpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace semicd {

/// A permutation as the value sequence (pi(1), ..., pi(n)); the entries may be
/// any distinct integers, compared in their natural order.
using Permutation = std::vector<int>;

/// Positions 1 <= i <= n-1 with pi(i) > pi(i+1).
inline std::vector<int> descents(const Permutation& pi) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i)
    if (pi[i] > pi[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

inline bool has_double_descent(const Permutation& pi) {
  for (std::size_t i = 0; i + 2 < pi.size(); ++i)
    if (pi[i] > pi[i + 1] && pi[i + 1] > pi[i + 2]) return true;
  return false;
}

/// Definition-level predicate: no double descent, and every pair
/// 2 <= j < j' <= n whose quadruple (pi(j-1), pi(j), pi(j'-1), pi(j')) has its
/// maximum at pi(j-1) and its minimum at pi(j') admits a witness j < j'' < j'
/// with pi(j'') < pi(j').
inline bool is_andre_direct(const Permutation& pi) {
  const int n = static_cast<int>(pi.size());
  if (has_double_descent(pi)) return false;
  auto at = [&pi](int pos) { return pi[static_cast<std::size_t>(pos - 1)]; };
  for (int j = 2; j <= n; ++j)
    for (int jp = j + 1; jp <= n; ++jp) {
      const int q[4] = {at(j - 1), at(j), at(jp - 1), at(jp)};
      const int mx = std::max({q[0], q[1], q[2], q[3]});
      const int mn = std::min({q[0], q[1], q[2], q[3]});
      if (q[0] != mx || q[3] != mn) continue;
      bool witness = false;
      for (int jj = j + 1; jj < jp && !witness; ++jj) witness = at(jj) < at(jp);
      if (!witness) return false;
    }
  return true;
}

/// Recursive characterization: split both parts at the position m of the
/// minimum (the left part keeps the minimum as its last entry).  When the
/// minimum is last, the permutation is Andre exactly if its largest value sits
/// directly before the minimum and the prefix is Andre.
inline bool is_andre_recursive(const Permutation& pi) {
  const std::size_t n = pi.size();
  if (n <= 1) return true;
  const std::size_t m = static_cast<std::size_t>(
      std::min_element(pi.begin(), pi.end()) - pi.begin());
  if (m + 1 == n) {
    const int mx = *std::max_element(pi.begin(), pi.end());
    if (pi[n - 2] != mx) return false;
    return is_andre_recursive(Permutation(pi.begin(), pi.end() - 1));
  }
  return is_andre_recursive(Permutation(pi.begin(), pi.begin() + static_cast<long>(m) + 1)) &&
         is_andre_recursive(Permutation(pi.begin() + static_cast<long>(m) + 1, pi.end()));
}

/// cd-type W(pi): consume from the right, a final descent contributes d (two
/// positions), otherwise c (one position); W of the empty permutation is the
/// empty word, so deg W(pi) = n.
inline std::string cd_type(const Permutation& pi) {
  std::string reversed;
  std::size_t k = pi.size();
  while (k >= 2) {
    if (pi[k - 2] > pi[k - 1]) {
      reversed += 'd';
      k -= 2;
    } else {
      reversed += 'c';
      k -= 1;
    }
  }
  if (k == 1) reversed += 'c';
  return {reversed.rbegin(), reversed.rend()};
}

namespace detail {

inline void enumerate_andre_rec(int n, Permutation& prefix, std::vector<bool>& used,
                                const std::function<void(const Permutation&)>& visit) {
  if (prefix.size() == static_cast<std::size_t>(n)) {
    if (is_andre_recursive(prefix)) visit(prefix);
    return;
  }
  const std::size_t k = prefix.size();
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    // prune double descents as they form
    if (k >= 2 && prefix[k - 2] > prefix[k - 1] && prefix[k - 1] > v) continue;
    used[static_cast<std::size_t>(v)] = true;
    prefix.push_back(v);
    enumerate_andre_rec(n, prefix, used, visit);
    prefix.pop_back();
    used[static_cast<std::size_t>(v)] = false;
  }
}

}  // namespace detail

/// Lexicographic enumeration of the Andre permutations of [n].
inline void enumerate_andre(int n, const std::function<void(const Permutation&)>& visit) {
  if (n < 0) throw std::invalid_argument("enumerate_andre: negative n");
  if (n == 0) {
    visit({});
    return;
  }
  Permutation prefix;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  detail::enumerate_andre_rec(n, prefix, used, visit);
}

/// cd-type sums of the Andre permutations of [n], bucketed by last value;
/// entry v holds the polynomial for pi(n) = v (entry 0 is unused).
inline const std::vector<NcPolynomial>& andre_census_by_last(int n, int limit = 9) {
  if (n < 1) throw std::invalid_argument("andre_census_by_last: n must be positive");
  if (n > limit)
    throw std::invalid_argument("andre_census_by_last: n = " + std::to_string(n) +
                                " exceeds the enumeration limit " + std::to_string(limit));
  static std::map<int, std::vector<NcPolynomial>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<NcPolynomial> buckets(static_cast<std::size_t>(n) + 1,
                                    NcPolynomial(Alphabet::cd));
  enumerate_andre(n, [&buckets](const Permutation& pi) {
    buckets[static_cast<std::size_t>(pi.back())].add_term(cd_type(pi), Int(1));
  });
  return cache.emplace(n, std::move(buckets)).first->second;
}

/// Sum of the monomials W(pi) over the Andre permutations of [n] with
/// pi(n) = n - j: the permutation-counting route to the j-th Phi-check entry.
inline NcPolynomial phi_check_via_andre(int n, int j, int limit = 9) {
  if (j < 0 || j > n - 1)
    throw std::invalid_argument("phi_check_via_andre: need 0 <= j <= n-1");
  return andre_census_by_last(n, limit)[static_cast<std::size_t>(n - j)];
}

/// Total census over every last value (the full coefficient table).
inline NcPolynomial andre_type_census(int n, int limit = 9) {
  NcPolynomial total(Alphabet::cd);
  for (const auto& bucket : andre_census_by_last(n, limit)) total += bucket;
  return total;
}

}  // namespace semicd
