#pragma once

// Finite bounded graded posets: validation, Möbius function, Eulerian /
// semi-Eulerian classification, flag f/h-vectors, chain polynomials, the
// modified chain polynomial, and the cd-index.
//
// A poset is immutable after construction; the order relation (reflexive-
// transitive closure of the cover digraph) is computed once at build time and
// stored as bitsets, so all queries are cheap and thread-shareable.

#include "semicd/arith.hpp"
#include "semicd/ncpoly.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace semicd {

struct PosetValidation {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct IncomparablePair : std::invalid_argument {
  explicit IncomparablePair(const std::string& what) : std::invalid_argument(what) {}
};

struct NotSemiEulerian : std::runtime_error {
  explicit NotSemiEulerian(const std::string& what) : std::runtime_error(what) {}
};

struct PosetParseError : std::runtime_error {
  explicit PosetParseError(const std::string& what) : std::runtime_error(what) {}
};

class GradedPoset {
 public:
  GradedPoset(std::vector<std::pair<std::string, int>> elements,
              std::vector<std::pair<std::string, std::string>> covers_by_id) {
    ids_.reserve(elements.size());
    ranks_.reserve(elements.size());
    for (auto& [id, rank] : elements) {
      if (index_.count(id)) throw std::invalid_argument("duplicate element id '" + id + "'");
      index_.emplace(id, static_cast<int>(ids_.size()));
      ids_.push_back(std::move(id));
      ranks_.push_back(rank);
    }
    covers_.reserve(covers_by_id.size());
    for (const auto& [lo, hi] : covers_by_id) covers_.emplace_back(index_of(lo), index_of(hi));
    std::sort(covers_.begin(), covers_.end());
    covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
    build();
  }

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int v) const { return ids_.at(static_cast<std::size_t>(v)); }
  int rank(int v) const { return ranks_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  int index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("unknown element id '" + id + "'");
    return it->second;
  }
  bool has_element(const std::string& id) const { return index_.count(id) != 0; }

  /// The unique minimal element; throws when it is not unique.
  int bottom() const {
    if (minimal_.size() != 1) throw std::logic_error("poset has no unique minimal element");
    return minimal_[0];
  }
  /// The unique maximal element; throws when it is not unique.
  int top() const {
    if (maximal_.size() != 1) throw std::logic_error("poset has no unique maximal element");
    return maximal_[0];
  }
  int top_rank() const { return rank(top()); }
  /// n, where the poset has rank n+1.
  int n() const { return top_rank() - 1; }

  bool leq(int a, int b) const {
    if (!closed_) throw std::logic_error("order relation unavailable (cover digraph is cyclic)");
    return up_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b));
  }

  const std::vector<int>& elements_of_rank(int r) const {
    static const std::vector<int> empty;
    if (r < 0 || r >= static_cast<int>(by_rank_.size())) return empty;
    return by_rank_[static_cast<std::size_t>(r)];
  }

  /// Elements of the open interval (s, t), i.e. strictly between.
  std::vector<int> open_interval(int s, int t) const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
      if (v != s && v != t && leq(s, v) && leq(v, t)) out.push_back(v);
    return out;
  }

  PosetValidation validate() const {
    PosetValidation report;
    auto complain = [&report](const std::string& msg) { report.violations.push_back(msg); };

    if (!closed_) complain("cover relation contains a cycle");
    for (int v = 0; v < size(); ++v)
      if (rank(v) < 0) complain("element '" + id(v) + "' has negative rank");

    if (minimal_.empty()) complain("no minimal element");
    if (minimal_.size() > 1) {
      std::string msg = "non-unique 0^:";
      for (int v : minimal_) msg += " '" + id(v) + "'";
      complain(msg);
    }
    if (minimal_.size() == 1 && rank(minimal_[0]) != 0)
      complain("minimal element '" + id(minimal_[0]) + "' has rank " +
               std::to_string(rank(minimal_[0])) + " (expected 0)");

    if (maximal_.empty()) complain("no maximal element");
    if (maximal_.size() > 1) {
      std::string msg = "non-unique 1^:";
      for (int v : maximal_) msg += " '" + id(v) + "'";
      complain(msg);
    }

    for (const auto& [lo, hi] : covers_)
      if (rank(hi) - rank(lo) != 1)
        complain("cover '" + id(lo) + "' < '" + id(hi) + "' raises rank by " +
                 std::to_string(rank(hi) - rank(lo)) + " (expected 1)");

    // With unit-rank covers, gradedness means every element sits on a maximal
    // chain from 0^ to 1^: everything but 1^ has an upper cover, everything
    // but 0^ a lower cover.
    std::vector<int> has_up(static_cast<std::size_t>(size()), 0),
        has_down(static_cast<std::size_t>(size()), 0);
    for (const auto& [lo, hi] : covers_) {
      has_up[static_cast<std::size_t>(lo)] = 1;
      has_down[static_cast<std::size_t>(hi)] = 1;
    }
    if (minimal_.size() == 1 && maximal_.size() == 1)
      for (int v = 0; v < size(); ++v) {
        if (!has_up[static_cast<std::size_t>(v)] && v != maximal_[0])
          complain("element '" + id(v) + "' has no upper cover but is not 1^");
        if (!has_down[static_cast<std::size_t>(v)] && v != minimal_[0])
          complain("element '" + id(v) + "' has no lower cover but is not 0^");
      }
    return report;
  }
  bool is_valid() const { return validate().ok(); }

  friend bool operator==(const GradedPoset& a, const GradedPoset& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::pair<std::string, int>> ea, eb;
    for (int v = 0; v < a.size(); ++v) ea.emplace_back(a.id(v), a.rank(v));
    for (int v = 0; v < b.size(); ++v) eb.emplace_back(b.id(v), b.rank(v));
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    if (ea != eb) return false;
    std::vector<std::pair<std::string, std::string>> ca, cb;
    for (const auto& [lo, hi] : a.covers_) ca.emplace_back(a.id(lo), a.id(hi));
    for (const auto& [lo, hi] : b.covers_) cb.emplace_back(b.id(lo), b.id(hi));
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
  }

 private:
  void build() {
    const std::size_t n = ids_.size();
    std::vector<std::vector<int>> up_adj(n);
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (const auto& [lo, hi] : covers_) {
      up_adj[static_cast<std::size_t>(lo)].push_back(hi);
      ++indeg[static_cast<std::size_t>(hi)];
      ++outdeg[static_cast<std::size_t>(lo)];
    }
    for (int v = 0; v < size(); ++v) {
      if (indeg[static_cast<std::size_t>(v)] == 0) minimal_.push_back(v);
      if (outdeg[static_cast<std::size_t>(v)] == 0) maximal_.push_back(v);
    }

    // Kahn toposort of the cover digraph; a leftover vertex means a cycle.
    std::vector<int> order, indeg_work = indeg;
    order.reserve(n);
    for (int v = 0; v < size(); ++v)
      if (indeg_work[static_cast<std::size_t>(v)] == 0) order.push_back(v);
    for (std::size_t head = 0; head < order.size(); ++head)
      for (int w : up_adj[static_cast<std::size_t>(order[head])])
        if (--indeg_work[static_cast<std::size_t>(w)] == 0) order.push_back(w);
    closed_ = order.size() == n;

    if (closed_) {
      up_.assign(n, boost::dynamic_bitset<>(n));
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        up_[v].set(v);
        for (int w : up_adj[v]) up_[v] |= up_[static_cast<std::size_t>(w)];
      }
    }

    int max_rank = -1;
    for (int v = 0; v < size(); ++v) max_rank = std::max(max_rank, rank(v));
    by_rank_.assign(static_cast<std::size_t>(std::max(0, max_rank + 1)), {});
    for (int v = 0; v < size(); ++v)
      if (rank(v) >= 0) by_rank_[static_cast<std::size_t>(rank(v))].push_back(v);
  }

  std::vector<std::string> ids_;
  std::vector<int> ranks_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<boost::dynamic_bitset<>> up_;
  std::vector<std::vector<int>> by_rank_;
  std::vector<int> minimal_, maximal_;
  bool closed_ = false;
};

/// Möbius values mu(s, t) for every t; entries for t not above s are zero.
inline std::vector<Int> mobius_row(const GradedPoset& p, int s) {
  std::vector<Int> mu(static_cast<std::size_t>(p.size()), Int(0));
  std::vector<int> interval;
  for (int t = 0; t < p.size(); ++t)
    if (p.leq(s, t)) interval.push_back(t);
  std::sort(interval.begin(), interval.end(),
            [&p](int a, int b) { return p.rank(a) < p.rank(b); });
  for (int t : interval) {
    if (t == s) {
      mu[static_cast<std::size_t>(t)] = 1;
      continue;
    }
    Int acc = 0;
    for (int u : interval)
      if (u != t && p.leq(u, t)) acc += mu[static_cast<std::size_t>(u)];
    mu[static_cast<std::size_t>(t)] = -acc;
  }
  return mu;
}

inline Int mobius(const GradedPoset& p, int s, int t) {
  if (!p.leq(s, t))
    throw IncomparablePair("mu(" + p.id(s) + ", " + p.id(t) + "): elements are incomparable");
  return mobius_row(p, s)[static_cast<std::size_t>(t)];
}

enum class EulerianClass { Eulerian, SemiEulerian, Neither };

inline std::string to_string(EulerianClass c) {
  switch (c) {
    case EulerianClass::Eulerian: return "Eulerian";
    case EulerianClass::SemiEulerian: return "semi-Eulerian";
    default: return "neither";
  }
}

/// Semi-Eulerian: mu(s,t) = (-1)^(rk t - rk s) on every proper interval
/// [s,t] != [0^,1^] with s < t; Eulerian if the same holds at [0^,1^] too.
inline EulerianClass classify(const GradedPoset& p) {
  const int bot = p.bottom(), top = p.top();
  bool full_ok = true;
  for (int s = 0; s < p.size(); ++s) {
    const auto mu = mobius_row(p, s);
    for (int t = 0; t < p.size(); ++t) {
      if (t == s || !p.leq(s, t)) continue;
      const bool is_full = (s == bot && t == top);
      if (mu[static_cast<std::size_t>(t)] != parity_sign(p.rank(t) - p.rank(s))) {
        if (is_full)
          full_ok = false;
        else
          return EulerianClass::Neither;
      }
    }
  }
  return full_ok ? EulerianClass::Eulerian : EulerianClass::SemiEulerian;
}

enum class FlagKind { F, H, FModified };

/// Complete map S |-> value over subsets of [n], stored by bitmask
/// (bit i-1 encodes rank i).
struct FlagVector {
  int n = 0;
  FlagKind kind = FlagKind::F;
  std::vector<Int> values;

  const Int& at(std::uint32_t mask) const { return values.at(mask); }
  Int& at(std::uint32_t mask) { return values.at(mask); }
  std::size_t size() const { return values.size(); }

  friend bool operator==(const FlagVector& a, const FlagVector& b) {
    return a.n == b.n && a.values == b.values;
  }
};

inline std::string subset_to_string(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; mask >> i; ++i)
    if (mask & (1u << i)) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
  return out + "}";
}

/// f_S = number of chains whose rank set is exactly S, computed by path
/// counting across the rank layers selected by S.
inline FlagVector flag_f_vector(const GradedPoset& p) {
  const int n = p.n();
  if (n < 0 || n > 25)
    throw std::invalid_argument("flag_f_vector: rank " + std::to_string(n + 1) +
                                " outside the supported range");
  FlagVector f{n, FlagKind::F, std::vector<Int>(std::size_t(1) << n, Int(0))};
  for (std::uint32_t mask = 0; mask < f.values.size(); ++mask) {
    if (mask == 0) {
      f.values[0] = 1;
      continue;
    }
    std::vector<int> ranks;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) ranks.push_back(i + 1);

    const auto& first_layer = p.elements_of_rank(ranks[0]);
    std::vector<Int> counts(first_layer.size(), Int(1));
    std::vector<int> layer = first_layer;
    for (std::size_t step = 1; step < ranks.size(); ++step) {
      const auto& next = p.elements_of_rank(ranks[step]);
      std::vector<Int> next_counts(next.size(), Int(0));
      for (std::size_t yi = 0; yi < next.size(); ++yi)
        for (std::size_t xi = 0; xi < layer.size(); ++xi)
          if (p.leq(layer[xi], next[yi])) next_counts[yi] += counts[xi];
      layer = next;
      counts = std::move(next_counts);
    }
    Int total = 0;
    for (const auto& c : counts) total += c;
    f.values[mask] = total;
  }
  return f;
}

/// h_S = sum over T subset of S of (-1)^(|S \ T|) f_T.
inline FlagVector flag_h_vector(const FlagVector& f) {
  if (f.kind == FlagKind::H)
    throw std::invalid_argument("flag_h_vector expects a flag-f (or modified) vector");
  FlagVector h{f.n, FlagKind::H, std::vector<Int>(f.values.size(), Int(0))};
  for (std::uint32_t S = 0; S < f.values.size(); ++S) {
    Int acc = 0;
    std::uint32_t T = S;
    while (true) {
      acc += parity_sign(std::popcount(S ^ T)) * f.values[T];
      if (T == 0) break;
      T = (T - 1) & S;
    }
    h.values[S] = acc;
  }
  return h;
}

/// Inverse transform: f_S = sum over T subset of S of h_T.
inline FlagVector flag_f_from_h(const FlagVector& h) {
  if (h.kind != FlagKind::H) throw std::invalid_argument("flag_f_from_h expects a flag-h vector");
  FlagVector f{h.n, FlagKind::F, std::vector<Int>(h.values.size(), Int(0))};
  for (std::uint32_t S = 0; S < h.values.size(); ++S) {
    Int acc = 0;
    std::uint32_t T = S;
    while (true) {
      acc += h.values[T];
      if (T == 0) break;
      T = (T - 1) & S;
    }
    f.values[S] = acc;
  }
  return f;
}

/// chi(P) = sum_{j=1}^{n} (-1)^(j-1) f_{j}(P).
inline Int euler_characteristic(const GradedPoset& p) {
  Int chi = 0;
  for (int j = 1; j <= p.n(); ++j)
    chi += parity_sign(j - 1) * Int(p.elements_of_rank(j).size());
  return chi;
}

/// The word u_S over {a,b} with b exactly at the positions in S.
inline std::string ab_word_for_subset(std::uint32_t mask, int n) {
  std::string w(static_cast<std::size_t>(n), 'a');
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) w[static_cast<std::size_t>(i)] = 'b';
  return w;
}

inline NcPolynomial polynomial_from_flag(const FlagVector& f) {
  NcPolynomial p(Alphabet::ab);
  for (std::uint32_t mask = 0; mask < f.values.size(); ++mask)
    p.add_term(ab_word_for_subset(mask, f.n), f.values[mask]);
  return p;
}

inline NcPolynomial chain_polynomial(const GradedPoset& p) {
  return polynomial_from_flag(flag_f_vector(p));
}

/// Psi_P(a,b) = chi_P(a-b, b), equivalently the flag-h generating polynomial.
inline NcPolynomial ab_polynomial(const GradedPoset& p) {
  return polynomial_from_flag(flag_h_vector(flag_f_vector(p)));
}

/// Flag f-vector with the single correction (chi(S^{n-1}) - chi(P)) at S = {n}.
inline FlagVector modified_flag_f(const GradedPoset& p) {
  FlagVector f = flag_f_vector(p);
  f.kind = FlagKind::FModified;
  const int n = f.n;
  if (n >= 1) {
    const Int correction = (Int(1) - parity_sign(n)) - euler_characteristic(p);
    f.values[std::size_t(1) << (n - 1)] += correction;
  }
  return f;
}

/// chi'_P = chi_P + (chi(S^{n-1}) - chi(P)) a^{n-1} b.
inline NcPolynomial modified_chain_polynomial(const GradedPoset& p) {
  return polynomial_from_flag(modified_flag_f(p));
}

struct GdsViolation {
  std::uint32_t set_mask = 0;
  int i = 0;
  int k = 0;
  Int residual;
};

struct GdsReport {
  int n = 0;
  std::vector<GdsViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Evaluates every generalized Dehn-Sommerville relation: for each S and each
/// consecutive pair i < k in S united with {0, n+1} with k - i >= 2,
///   sum_{j=i+1}^{k-1} (-1)^(j-i-1) f_{S+{j}} = f_S (1 - (-1)^(k-i-1)).
inline GdsReport gds_check(const FlagVector& f) {
  if (f.kind == FlagKind::H) throw std::invalid_argument("gds_check expects a flag-f vector");
  GdsReport report;
  report.n = f.n;
  for (std::uint32_t S = 0; S < f.values.size(); ++S) {
    std::vector<int> endpoints{0};
    for (int i = 0; i < f.n; ++i)
      if (S & (1u << i)) endpoints.push_back(i + 1);
    endpoints.push_back(f.n + 1);
    for (std::size_t e = 0; e + 1 < endpoints.size(); ++e) {
      const int i = endpoints[e], k = endpoints[e + 1];
      if (k - i < 2) continue;
      Int lhs = 0;
      for (int j = i + 1; j <= k - 1; ++j)
        lhs += parity_sign(j - i - 1) * f.values[S | (1u << (j - 1))];
      const Int rhs = f.values[S] * (Int(1) - parity_sign(k - i - 1));
      if (lhs != rhs) report.violations.push_back({S, i, k, lhs - rhs});
    }
  }
  return report;
}

/// cd-index of a known semi-Eulerian poset (classification is the caller's
/// responsibility).  A NotCdExpressible escape here would mean the modified
/// chain polynomial violates the GDS relations, which classification rules
/// out, so it is converted to a logic error.
inline NcPolynomial cd_index_unchecked(const GradedPoset& p) {
  NcPolynomial a_minus_b(Alphabet::ab);
  a_minus_b.add_term("a", Int(1));
  a_minus_b.add_term("b", Int(-1));
  const NcPolynomial b_only = NcPolynomial::monomial(Alphabet::ab, "b");
  const auto psi_prime = substitute(modified_chain_polynomial(p), a_minus_b, b_only);
  try {
    return ab_to_cd(psi_prime);
  } catch (const NotCdExpressible& e) {
    throw std::logic_error(
        "internal inconsistency: semi-Eulerian poset without cd-index (witness '" + e.witness +
        "')");
  }
}

inline NcPolynomial cd_index(const GradedPoset& p) {
  if (classify(p) == EulerianClass::Neither)
    throw NotSemiEulerian("cd_index requires an Eulerian or semi-Eulerian poset");
  return cd_index_unchecked(p);
}

namespace detail {

/// Boolean-interval test: |[0^,x]| = 2^rk(x) and every element of the interval
/// is the join of the atoms below it.
inline bool interval_is_boolean(const GradedPoset& p, int x) {
  const int r = p.rank(x);
  if (r < 0 || r > 62) return false;
  std::vector<int> down;
  for (int v = 0; v < p.size(); ++v)
    if (p.leq(v, x)) down.push_back(v);
  if (down.size() != (std::size_t(1) << r)) return false;

  std::vector<int> atoms;
  for (int v : down)
    if (p.rank(v) == 1) atoms.push_back(v);
  if (static_cast<int>(atoms.size()) != r) return false;

  std::vector<std::uint64_t> atom_set(down.size(), 0);
  for (std::size_t vi = 0; vi < down.size(); ++vi)
    for (std::size_t ai = 0; ai < atoms.size(); ++ai)
      if (p.leq(atoms[ai], down[vi])) atom_set[vi] |= std::uint64_t(1) << ai;

  // v must be below every upper bound of its atom set.
  for (std::size_t vi = 0; vi < down.size(); ++vi)
    for (std::size_t ui = 0; ui < down.size(); ++ui)
      if ((atom_set[ui] & atom_set[vi]) == atom_set[vi] && !p.leq(down[vi], down[ui]))
        return false;
  return true;
}

}  // namespace detail

/// Every interval [0^, x] with x != 1^ is a Boolean algebra.
inline bool is_simplicial(const GradedPoset& p) {
  const int top = p.top();
  for (int x = 0; x < p.size(); ++x)
    if (x != top && !detail::interval_is_boolean(p, x)) return false;
  return true;
}

/// (f_{-1}, f_0, ..., f_{n-1}) where f_{i-1} counts rank-i elements below 1^.
inline std::vector<Int> f_vector_simplicial(const GradedPoset& p) {
  const int n = p.n();
  std::vector<Int> f(static_cast<std::size_t>(n) + 1, Int(0));
  for (int i = 0; i <= n; ++i) f[static_cast<std::size_t>(i)] = Int(p.elements_of_rank(i).size());
  return f;
}

/// h-vector via sum_i f_{i-1} (x-1)^{n-i} = sum_i h_i x^{n-i}.
inline std::vector<Int> h_vector_from_f(const std::vector<Int>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  IntPolynomial x_minus_1(std::vector<Int>{Int(-1), Int(1)});
  IntPolynomial acc;
  for (int i = 0; i <= n; ++i) acc += f[static_cast<std::size_t>(i)] * x_minus_1.pow(n - i);
  std::vector<Int> h(static_cast<std::size_t>(n) + 1, Int(0));
  for (int i = 0; i <= n; ++i) h[static_cast<std::size_t>(i)] = acc.coeff(n - i);
  return h;
}

inline std::vector<Int> h_vector_simplicial(const GradedPoset& p) {
  return h_vector_from_f(f_vector_simplicial(p));
}

// ---------------------------------------------------------------------------
// Poset text format
//
//   # comment
//   poset
//   element <id> <rank>
//   cover <id_lo> <id_hi>
//
// Export is canonical (elements sorted by rank then id, covers sorted by
// endpoint), so export(parse(export(p))) == export(p) byte for byte.
// ---------------------------------------------------------------------------

inline GradedPoset parse_poset(const std::string& text) {
  std::vector<std::pair<std::string, int>> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (!header_seen) {
      if (word != "poset")
        throw PosetParseError("line " + std::to_string(line_no) +
                              ": expected 'poset' header, got '" + word + "'");
      header_seen = true;
      continue;
    }
    if (word == "element") {
      std::string id;
      int rank;
      if (!(ls >> id >> rank))
        throw PosetParseError("line " + std::to_string(line_no) + ": malformed element line");
      elements.emplace_back(id, rank);
    } else if (word == "cover") {
      std::string lo, hi;
      if (!(ls >> lo >> hi))
        throw PosetParseError("line " + std::to_string(line_no) + ": malformed cover line");
      covers.emplace_back(lo, hi);
    } else {
      throw PosetParseError("line " + std::to_string(line_no) + ": unknown directive '" + word +
                            "'");
    }
  }
  if (!header_seen) throw PosetParseError("missing 'poset' header");
  if (elements.empty()) throw PosetParseError("poset has no elements");
  try {
    return GradedPoset(std::move(elements), std::move(covers));
  } catch (const std::invalid_argument& e) {
    throw PosetParseError(e.what());
  }
}

inline std::string format_poset(const GradedPoset& p) {
  std::vector<std::pair<std::pair<int, std::string>, int>> elems;
  for (int v = 0; v < p.size(); ++v) elems.push_back({{p.rank(v), p.id(v)}, v});
  std::sort(elems.begin(), elems.end());
  std::vector<std::tuple<int, std::string, std::string>> covers;
  for (const auto& [lo, hi] : p.covers()) covers.emplace_back(p.rank(lo), p.id(lo), p.id(hi));
  std::sort(covers.begin(), covers.end());

  std::ostringstream os;
  os << "poset\n";
  for (const auto& [key, v] : elems) os << "element " << key.second << ' ' << key.first << '\n';
  for (const auto& [r, lo, hi] : covers) os << "cover " << lo << ' ' << hi << '\n';
  return os.str();
}

}  // namespace semicd
