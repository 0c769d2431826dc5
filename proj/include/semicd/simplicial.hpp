#pragma once

// Simplicial complexes given by facet lists: face enumeration, links,
// boundaries of balls, face posets, order complexes, semisuspensions, and the
// family of CW spheres obtained by semisuspending an initial segment of the
// facets of a simplex boundary.
//
// Complexes are immutable; the full face list is enumerated once at
// construction time, so all queries are const and thread-shareable.

#include "semicd/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semicd {

struct ComplexParseError : std::runtime_error {
  explicit ComplexParseError(const std::string& what) : std::runtime_error(what) {}
};

struct FaceNotInComplex : std::invalid_argument {
  explicit FaceNotInComplex(const std::string& what) : std::invalid_argument(what) {}
};

struct NotPure : std::invalid_argument {
  explicit NotPure(const std::string& what) : std::invalid_argument(what) {}
};

class SimplicialComplex {
 public:
  /// The void complex (no faces at all).  Distinct from the empty complex
  /// {emptyset}, which is produced by from_facets({{}}).
  SimplicialComplex() = default;

  static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets) {
    SimplicialComplex c;
    std::set<std::string> label_set;
    for (const auto& f : facets)
      for (const auto& v : f) {
        if (v.empty()) throw std::invalid_argument("empty vertex label");
        for (char ch : v)
          if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')
            throw std::invalid_argument("vertex label '" + v + "' contains whitespace");
        label_set.insert(v);
      }
    c.labels_.assign(label_set.begin(), label_set.end());
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < c.labels_.size(); ++i)
      index.emplace(c.labels_[i], static_cast<int>(i));

    std::vector<std::vector<int>> raw;
    raw.reserve(facets.size());
    for (const auto& f : facets) {
      std::vector<int> face;
      face.reserve(f.size());
      for (const auto& v : f) face.push_back(index.at(v));
      std::sort(face.begin(), face.end());
      if (std::adjacent_find(face.begin(), face.end()) != face.end())
        throw std::invalid_argument("facet contains a duplicate vertex");
      raw.push_back(std::move(face));
    }
    c.set_facets(std::move(raw));
    return c;
  }

  static SimplicialComplex empty_complex() {
    SimplicialComplex c;
    c.set_facets({{}});
    return c;
  }

  /// Rebuild a complex on this complex's labels from facet index lists.
  SimplicialComplex subcomplex_from_facets(std::vector<std::vector<int>> facets) const {
    std::vector<std::vector<std::string>> by_label;
    by_label.reserve(facets.size());
    for (auto& f : facets) {
      std::vector<std::string> labels;
      labels.reserve(f.size());
      for (int v : f) labels.push_back(label(v));
      by_label.push_back(std::move(labels));
    }
    if (by_label.empty()) return empty_complex();
    return from_facets(by_label);
  }

  bool is_void() const { return facets_.empty(); }
  /// Only the empty face.
  bool is_empty() const { return facets_.size() == 1 && facets_[0].empty(); }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& labels() const { return labels_; }

  const std::vector<std::vector<int>>& facets() const { return facets_; }
  /// -1 for the empty complex; throws on the void complex.
  int dimension() const {
    if (is_void()) throw std::logic_error("void complex has no dimension");
    return dim_;
  }
  bool is_pure() const {
    for (const auto& f : facets_)
      if (static_cast<int>(f.size()) != dim_ + 1) return false;
    return true;
  }

  /// Faces of dimension d (0 <= d <= dim), sorted; the empty face is implicit.
  const std::vector<std::vector<int>>& faces_of_dim(int d) const {
    static const std::vector<std::vector<int>> none;
    if (d < 0 || d > dim_) return none;
    return faces_by_dim_[static_cast<std::size_t>(d)];
  }

  bool contains(std::vector<int> face) const {
    std::sort(face.begin(), face.end());
    if (face.empty()) return !is_void();
    const int d = static_cast<int>(face.size()) - 1;
    const auto& layer = faces_of_dim(d);
    return std::binary_search(layer.begin(), layer.end(), face);
  }

  /// (f_{-1}, f_0, ..., f_dim); just (1) for the empty complex.
  std::vector<Int> f_vector() const {
    if (is_void()) return {};
    std::vector<Int> f{Int(1)};
    for (int d = 0; d <= dim_; ++d) f.emplace_back(faces_of_dim(d).size());
    return f;
  }

  /// chi = sum_{i>=0} (-1)^i f_i (non-reduced).
  Int euler_characteristic() const {
    Int chi = 0;
    for (int d = 0; d <= dim_; ++d) chi += parity_sign(d) * Int(faces_of_dim(d).size());
    return chi;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    auto canon = [](const SimplicialComplex& c) {
      std::set<std::vector<std::string>> out;
      for (const auto& f : c.facets_) {
        std::vector<std::string> labels;
        for (int v : f) labels.push_back(c.label(v));
        out.insert(labels);
      }
      return out;
    };
    return canon(a) == canon(b);
  }

 private:
  void set_facets(std::vector<std::vector<int>> raw) {
    // Absorb contained faces so facets form an antichain.
    std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) {
      if (x.size() != y.size()) return x.size() > y.size();
      return x < y;
    });
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    for (const auto& f : raw) {
      bool contained = false;
      for (const auto& g : facets_) {
        if (g.size() <= f.size() && g != f) continue;
        if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
          contained = true;
          break;
        }
      }
      if (!contained) facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end());

    dim_ = -1;
    for (const auto& f : facets_) dim_ = std::max(dim_, static_cast<int>(f.size()) - 1);
    faces_by_dim_.assign(static_cast<std::size_t>(std::max(0, dim_ + 1)), {});
    std::set<std::vector<int>> seen;
    for (const auto& f : facets_) {
      // every subset of a facet is a face
      const std::size_t k = f.size();
      for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
        std::vector<int> face;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (std::size_t(1) << i)) face.push_back(f[i]);
        if (seen.insert(face).second)
          faces_by_dim_[face.size() - 1].push_back(std::move(face));
      }
    }
    for (auto& layer : faces_by_dim_) std::sort(layer.begin(), layer.end());
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::vector<std::vector<int>>> faces_by_dim_;
  int dim_ = -2;
};

/// One facet per non-comment line, vertices separated by whitespace.
inline SimplicialComplex parse_complex(const std::string& text) {
  std::vector<std::vector<std::string>> facets;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> facet;
    std::string v;
    while (ls >> v) facet.push_back(v);
    if (facet.empty() || facet[0][0] == '#') continue;
    std::set<std::string> dedup(facet.begin(), facet.end());
    if (dedup.size() != facet.size())
      throw ComplexParseError("line " + std::to_string(line_no) +
                              ": facet contains a duplicate vertex");
    facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw ComplexParseError("no facets in input");
  try {
    return SimplicialComplex::from_facets(facets);
  } catch (const std::invalid_argument& e) {
    throw ComplexParseError(e.what());
  }
}

inline std::string format_complex(const SimplicialComplex& c) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : c.facets()) {
    std::vector<std::string> labels;
    for (int v : f) labels.push_back(c.label(v));
    std::sort(labels.begin(), labels.end());
    rows.push_back(std::move(labels));
  }
  std::sort(rows.begin(), rows.end());
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << '\n';
  }
  return os.str();
}

/// lk(F) = { G : G cup F is a face, G cap F empty }, generated by the facets
/// containing F with F removed.  `face` holds sorted vertex indices.
inline SimplicialComplex link_by_indices(const SimplicialComplex& c, std::vector<int> face) {
  std::sort(face.begin(), face.end());
  if (!c.contains(face)) throw FaceNotInComplex("face is not in the complex");
  std::vector<std::vector<int>> link_facets;
  for (const auto& g : c.facets()) {
    if (!std::includes(g.begin(), g.end(), face.begin(), face.end())) continue;
    std::vector<int> rest;
    std::set_difference(g.begin(), g.end(), face.begin(), face.end(), std::back_inserter(rest));
    link_facets.push_back(std::move(rest));
  }
  return c.subcomplex_from_facets(std::move(link_facets));
}

inline SimplicialComplex link(const SimplicialComplex& c,
                              const std::vector<std::string>& face_labels) {
  std::vector<int> face;
  for (const auto& v : face_labels) {
    auto it = std::find(c.labels().begin(), c.labels().end(), v);
    if (it == c.labels().end()) throw FaceNotInComplex("vertex '" + v + "' not in complex");
    face.push_back(static_cast<int>(it - c.labels().begin()));
  }
  return link_by_indices(c, std::move(face));
}

/// Subcomplex generated by the (n-2)-faces lying in exactly one facet of a
/// pure (n-1)-dimensional ball.  The empty complex when there are none.
inline SimplicialComplex boundary_subcomplex(const SimplicialComplex& ball) {
  if (ball.is_void() || ball.is_empty())
    throw std::invalid_argument("boundary_subcomplex of a (near-)void complex");
  if (!ball.is_pure()) throw NotPure("boundary_subcomplex requires a pure complex");
  std::map<std::vector<int>, int> ridge_count;
  for (const auto& f : ball.facets()) {
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> ridge;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != drop) ridge.push_back(f[i]);
      ++ridge_count[ridge];
    }
  }
  std::vector<std::vector<int>> facets;
  for (const auto& [ridge, count] : ridge_count)
    if (count == 1) facets.push_back(ridge);
  return ball.subcomplex_from_facets(std::move(facets));
}

namespace detail {

inline std::string face_id(const SimplicialComplex& c, const std::vector<int>& face) {
  std::vector<std::string> labels;
  for (int v : face) labels.push_back(c.label(v));
  std::sort(labels.begin(), labels.end());
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out + "}";
}

}  // namespace detail

/// Augmented face poset: the empty face as 0^, rank |F| for faces, and an
/// adjoined maximal element above all facets.
inline GradedPoset face_poset(const SimplicialComplex& c) {
  if (c.is_void() || c.is_empty())
    throw std::invalid_argument("face_poset of a (near-)void complex");
  std::vector<std::pair<std::string, int>> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  elements.emplace_back("{}", 0);
  for (int d = 0; d <= c.dimension(); ++d)
    for (const auto& f : c.faces_of_dim(d)) {
      const std::string id = detail::face_id(c, f);
      elements.emplace_back(id, d + 1);
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < f.size(); ++i)
          if (i != drop) sub.push_back(f[i]);
        covers.emplace_back(detail::face_id(c, sub), id);
      }
    }
  elements.emplace_back("TOP", c.dimension() + 2);
  for (const auto& f : c.facets()) covers.emplace_back(detail::face_id(c, f), "TOP");
  return GradedPoset(std::move(elements), std::move(covers));
}

/// Order complex of the proper part: vertices are the elements of
/// P minus {0^, 1^}, facets are the interiors of maximal chains.
inline SimplicialComplex order_complex(const GradedPoset& p) {
  if (p.n() < 1) throw std::invalid_argument("order_complex requires a poset of rank >= 2");
  const int bot = p.bottom(), top = p.top();
  std::vector<std::vector<int>> up(static_cast<std::size_t>(p.size()));
  for (const auto& [lo, hi] : p.covers()) up[static_cast<std::size_t>(lo)].push_back(hi);

  std::vector<std::vector<std::string>> facets;
  std::vector<std::string> path;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == top) {
      facets.push_back(path);
      return;
    }
    if (v != bot) path.push_back(p.id(v));
    for (int w : up[static_cast<std::size_t>(v)]) self(self, w);
    if (v != bot) path.pop_back();
  };
  dfs(dfs, bot);
  return SimplicialComplex::from_facets(facets);
}

/// A simplicial ball together with its boundary subcomplex.
struct CwBallWithBoundary {
  SimplicialComplex ball;
  SimplicialComplex boundary;
};

inline CwBallWithBoundary with_computed_boundary(SimplicialComplex ball) {
  SimplicialComplex boundary = boundary_subcomplex(ball);
  return {std::move(ball), std::move(boundary)};
}

/// Face poset of the CW complex obtained from a pure (n-1)-dimensional ball by
/// attaching one new (n-1)-cell tau along the ball's boundary: tau sits at
/// rank n above exactly the boundary faces (and 0^), and 1^ covers the ball
/// facets together with tau.
inline GradedPoset semisuspension_poset(const CwBallWithBoundary& b) {
  if (b.ball.is_void() || b.ball.is_empty())
    throw std::invalid_argument("semisuspension of a (near-)void ball");
  if (!b.ball.is_pure()) throw NotPure("semisuspension requires a pure ball");
  if (!(b.boundary == boundary_subcomplex(b.ball)))
    throw std::invalid_argument("boundary complex does not match the ball's boundary");

  const int n = b.ball.dimension() + 1;
  std::vector<std::pair<std::string, int>> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  elements.emplace_back("{}", 0);
  for (int d = 0; d <= b.ball.dimension(); ++d)
    for (const auto& f : b.ball.faces_of_dim(d)) {
      const std::string id = detail::face_id(b.ball, f);
      elements.emplace_back(id, d + 1);
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < f.size(); ++i)
          if (i != drop) sub.push_back(f[i]);
        covers.emplace_back(detail::face_id(b.ball, sub), id);
      }
    }

  elements.emplace_back("tau", n);
  if (b.boundary.is_empty()) {
    covers.emplace_back("{}", "tau");
  } else {
    for (const auto& f : b.boundary.facets())
      covers.emplace_back(detail::face_id(b.boundary, f), "tau");
  }

  elements.emplace_back("TOP", n + 1);
  for (const auto& f : b.ball.facets()) covers.emplace_back(detail::face_id(b.ball, f), "TOP");
  covers.emplace_back("tau", "TOP");
  return GradedPoset(std::move(elements), std::move(covers));
}

/// Boundary complex of an n-simplex on vertex labels 0..n.
inline SimplicialComplex boundary_of_simplex(int n) {
  if (n < 1) throw std::invalid_argument("boundary_of_simplex requires n >= 1");
  std::vector<std::vector<std::string>> facets;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<std::string> f;
    for (int v = 0; v <= n; ++v)
      if (v != skip) f.push_back(std::to_string(v));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets);
}

/// The subcomplex of the n-simplex boundary generated by its first i+1 facets
/// under the fixed labeling: facet j omits vertex j.
inline SimplicialComplex simplex_facet_prefix(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw std::invalid_argument("simplex_facet_prefix: bad range");
  std::vector<std::vector<std::string>> facets;
  for (int skip = 0; skip <= i; ++skip) {
    std::vector<std::string> f;
    for (int v = 0; v <= n; ++v)
      if (v != skip) f.push_back(std::to_string(v));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets);
}

/// Face poset of the CW sphere obtained by semisuspending the first i+1
/// facets of the n-simplex boundary (0 <= i <= n-1); rank n+1, Eulerian.
inline GradedPoset semisuspension_sphere(int n, int i) {
  if (n < 1 || i < 0 || i > n - 1)
    throw std::invalid_argument("semisuspension_sphere: need 0 <= i <= n-1");
  return semisuspension_poset(with_computed_boundary(simplex_facet_prefix(n, i)));
}

/// Staircase triangulation of |K| x |L| on vertices "u.v": every pair of
/// facets contributes one simplex per monotone lattice path.
inline SimplicialComplex simplicial_product(const SimplicialComplex& K,
                                            const SimplicialComplex& L) {
  std::vector<std::vector<std::string>> facets;
  for (const auto& sigma : K.facets())
    for (const auto& tau : L.facets()) {
      const int p = static_cast<int>(sigma.size()) - 1;
      const int q = static_cast<int>(tau.size()) - 1;
      // choose the positions of the p "advance in K" moves among p+q steps
      std::vector<int> moves(static_cast<std::size_t>(p + q), 0);
      std::fill(moves.begin(), moves.begin() + p, 1);
      std::sort(moves.begin(), moves.end());
      do {
        std::vector<std::string> facet;
        int x = 0, y = 0;
        facet.push_back(K.label(sigma[0]) + "." + L.label(tau[0]));
        for (int m : moves) {
          if (m == 1)
            ++x;
          else
            ++y;
          facet.push_back(K.label(sigma[static_cast<std::size_t>(x)]) + "." +
                          L.label(tau[static_cast<std::size_t>(y)]));
        }
        facets.push_back(std::move(facet));
      } while (std::next_permutation(moves.begin(), moves.end()));
    }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace semicd
