#pragma once

// Reduced simplicial homology with exact arithmetic over the rationals or a
// prime field, plus the Buchsbaum / homology-manifold predicates and the
// Novik-Swartz h-vector lower bounds.
//
// Betti numbers come from ranks of the augmented boundary maps; ranks are
// computed by sparse column reduction (eliminate on the lowest nonzero row),
// which is exact over both coefficient fields.  No floating point anywhere.

#include "semicd/arith.hpp"
#include "semicd/simplicial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace semicd {

struct FieldChoice {
  long long characteristic = 0;  // 0 selects the rationals

  static FieldChoice rationals() { return {}; }
  static FieldChoice prime_field(long long p) {
    if (p < 2) throw std::invalid_argument("prime_field: characteristic must be at least 2");
    for (long long q = 2; q * q <= p; ++q)
      if (p % q == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
    return {p};
  }
  bool is_rationals() const { return characteristic == 0; }
  std::string str() const {
    return is_rationals() ? "Q" : "F_" + std::to_string(characteristic);
  }
};

/// Reduced Betti numbers beta~_{-1}, ..., beta~_{dim}.
struct BettiVector {
  int dim = -1;
  std::vector<long long> values;  // values[i+1] = beta~_i

  long long reduced(int i) const {
    const int idx = i + 1;
    if (idx < 0 || idx >= static_cast<int>(values.size())) return 0;
    return values[static_cast<std::size_t>(idx)];
  }
  friend bool operator==(const BettiVector& a, const BettiVector& b) {
    return a.dim == b.dim && a.values == b.values;
  }
};

namespace detail {

template <typename Value>
using SparseColumns = std::vector<std::vector<std::pair<int, Value>>>;

// col -= factor * pivot, both sorted by row; zero entries dropped.
template <typename Value, typename Sub>
std::vector<std::pair<int, Value>> axpy(const std::vector<std::pair<int, Value>>& col,
                                        const std::vector<std::pair<int, Value>>& pivot,
                                        const Value& factor, Sub&& sub) {
  std::vector<std::pair<int, Value>> out;
  out.reserve(col.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < col.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
      out.push_back(col[i++]);
    } else if (i == col.size() || pivot[j].first < col[i].first) {
      Value v = sub(Value(0), factor, pivot[j].second);
      if (v != Value(0)) out.emplace_back(pivot[j].first, std::move(v));
      ++j;
    } else {
      Value v = sub(col[i].second, factor, pivot[j].second);
      if (v != Value(0)) out.emplace_back(col[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline int rank_over_rationals(SparseColumns<Rat> cols) {
  std::unordered_map<int, int> pivot_of_row;
  int rank = 0;
  auto sub = [](const Rat& a, const Rat& f, const Rat& b) { return a - f * b; };
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& col = cols[j];
    while (!col.empty()) {
      const int low = col.back().first;
      auto it = pivot_of_row.find(low);
      if (it == pivot_of_row.end()) {
        pivot_of_row.emplace(low, static_cast<int>(j));
        ++rank;
        break;
      }
      const auto& pivot = cols[static_cast<std::size_t>(it->second)];
      const Rat factor = col.back().second / pivot.back().second;
      col = axpy(col, pivot, factor, sub);
    }
  }
  return rank;
}

inline long long mod_mul(long long a, long long b, long long p) {
  return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

inline long long mod_pow(long long a, long long e, long long p) {
  long long r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline int rank_mod_p(SparseColumns<long long> cols, long long p) {
  std::unordered_map<int, int> pivot_of_row;
  int rank = 0;
  auto sub = [p](long long a, long long f, long long b) {
    long long v = (a - mod_mul(f, b, p)) % p;
    return v < 0 ? v + p : v;
  };
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& col = cols[j];
    while (!col.empty()) {
      const int low = col.back().first;
      auto it = pivot_of_row.find(low);
      if (it == pivot_of_row.end()) {
        pivot_of_row.emplace(low, static_cast<int>(j));
        ++rank;
        break;
      }
      const auto& pivot = cols[static_cast<std::size_t>(it->second)];
      const long long factor =
          mod_mul(col.back().second, mod_pow(pivot.back().second, p - 2, p), p);
      col = axpy(col, pivot, factor, sub);
    }
  }
  return rank;
}

/// Columns of the boundary map C_d -> C_{d-1} with +-1 entries encoded as
/// (row, sign); rows index faces_of_dim(d-1), or the empty face when d = 0.
inline std::vector<std::vector<std::pair<int, int>>> boundary_columns(const SimplicialComplex& c,
                                                                      int d) {
  std::vector<std::vector<std::pair<int, int>>> cols;
  const auto& faces = c.faces_of_dim(d);
  const auto& rows = c.faces_of_dim(d - 1);
  cols.reserve(faces.size());
  for (const auto& f : faces) {
    std::vector<std::pair<int, int>> col;
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != drop) sub.push_back(f[i]);
      int row = 0;
      if (d > 0) {
        auto it = std::lower_bound(rows.begin(), rows.end(), sub);
        row = static_cast<int>(it - rows.begin());
      }
      col.emplace_back(row, (drop % 2 == 0) ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
    cols.push_back(std::move(col));
  }
  return cols;
}

inline int boundary_rank(const SimplicialComplex& c, int d, const FieldChoice& field) {
  const auto raw = boundary_columns(c, d);
  if (field.is_rationals()) {
    SparseColumns<Rat> cols(raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j)
      for (const auto& [r, s] : raw[j]) cols[j].emplace_back(r, Rat(s));
    return rank_over_rationals(std::move(cols));
  }
  const long long p = field.characteristic;
  SparseColumns<long long> cols(raw.size());
  for (std::size_t j = 0; j < raw.size(); ++j)
    for (const auto& [r, s] : raw[j]) {
      const long long v = ((s % p) + p) % p;
      if (v != 0) cols[j].emplace_back(r, v);
    }
  return rank_mod_p(std::move(cols), p);
}

}  // namespace detail

/// beta~_i = nullity(boundary_i) - rank(boundary_{i+1}) on the augmented chain
/// complex; beta~_{-1} = 1 exactly for the empty complex.
inline BettiVector betti_numbers(const SimplicialComplex& c, const FieldChoice& field) {
  if (c.is_void()) throw std::invalid_argument("betti_numbers of the void complex");
  if (c.is_empty()) return BettiVector{-1, {1}};
  const int dim = c.dimension();
  std::vector<int> rank(static_cast<std::size_t>(dim) + 2, 0);
  for (int d = 0; d <= dim; ++d)
    rank[static_cast<std::size_t>(d)] = detail::boundary_rank(c, d, field);

  BettiVector b;
  b.dim = dim;
  b.values.assign(static_cast<std::size_t>(dim) + 2, 0);
  b.values[0] = 1 - rank[0];  // dim C_{-1} = 1
  for (int k = 0; k <= dim; ++k) {
    const long long faces = static_cast<long long>(c.faces_of_dim(k).size());
    b.values[static_cast<std::size_t>(k) + 1] =
        faces - rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k) + 1];
  }
  return b;
}

/// Pure, and every nonempty face has link homology concentrated in the top
/// dimension dim(Delta) - |F|.
inline bool is_buchsbaum(const SimplicialComplex& c, const FieldChoice& field) {
  if (c.is_void() || c.is_empty())
    throw std::invalid_argument("is_buchsbaum requires a nonempty complex");
  if (!c.is_pure()) return false;
  const int dim = c.dimension();
  for (int d = 0; d <= dim; ++d)
    for (const auto& f : c.faces_of_dim(d)) {
      const auto lk = link_by_indices(c, f);
      const int top = dim - (d + 1);
      const auto b = betti_numbers(lk, field);
      for (int i = -1; i <= b.dim; ++i)
        if (i != top && b.reduced(i) != 0) return false;
    }
  return true;
}

/// Every nonempty face has the link homology of a (dim - |F|)-sphere.
inline bool is_homology_manifold(const SimplicialComplex& c, const FieldChoice& field) {
  if (c.is_void() || c.is_empty())
    throw std::invalid_argument("is_homology_manifold requires a nonempty complex");
  if (!c.is_pure()) return false;
  const int dim = c.dimension();
  for (int d = 0; d <= dim; ++d)
    for (const auto& f : c.faces_of_dim(d)) {
      const auto lk = link_by_indices(c, f);
      const int top = dim - (d + 1);
      if (lk.is_void() || (lk.is_empty() ? -1 : lk.dimension()) != top) return false;
      const auto b = betti_numbers(lk, field);
      if (b.reduced(top) != 1) return false;
      for (int i = -1; i <= b.dim; ++i)
        if (i != top && b.reduced(i) != 0) return false;
    }
  return true;
}

/// Lower bounds h_i >= C(n,i) * sum_{j=1}^{i} (-1)^(i-j) beta~_{j-1}, entries
/// i = 0..n, for the order complex's Betti vector of a rank n+1 poset.
inline std::vector<Int> novik_swartz_bounds(int n, const BettiVector& b) {
  std::vector<Int> bounds(static_cast<std::size_t>(n) + 1, Int(0));
  for (int i = 0; i <= n; ++i) {
    Int acc = 0;
    for (int j = 1; j <= i; ++j) acc += parity_sign(i - j) * Int(b.reduced(j - 1));
    bounds[static_cast<std::size_t>(i)] = binomial(n, i) * acc;
  }
  return bounds;
}

}  // namespace semicd
