#include "semicd/simplicial.hpp"

#include "semicd/corpus.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace semicd;

namespace {

// Face count f_{j}(Lambda^n_i) of the semisuspended complex: the cell tau
// contributes one extra (n-1)-cell on top of the faces of Gamma^n_i.
Int lambda_face_count(int n, int i, int j) {
  const auto gamma = simplex_facet_prefix(n, i);
  Int count = (j >= 0 && j <= gamma.dimension()) ? Int(gamma.faces_of_dim(j).size()) : Int(0);
  if (j == n - 1) count += 1;
  return count;
}

}  // namespace

TEST_CASE("parsing facet lists") {
  const auto tri = parse_complex("1 2 3\n");
  CHECK(tri.f_vector() == std::vector<Int>{1, 3, 3, 1});
  CHECK(tri.dimension() == 2);

  const auto absorbed = parse_complex("1 2\n1 2 3\n");
  CHECK(absorbed.facets().size() == 1);

  const auto commented = parse_complex("# facets\n1 2 3\n\n2 3 4\n");
  CHECK(commented.facets().size() == 2);

  CHECK_THROWS_AS(parse_complex(""), ComplexParseError);
  CHECK_THROWS_AS(parse_complex("# nothing\n"), ComplexParseError);
  CHECK_THROWS_AS(parse_complex("1 1 2\n"), ComplexParseError);
}

TEST_CASE("the 7-vertex torus") {
  const auto t = torus_7();
  CHECK(t.f_vector() == std::vector<Int>{1, 7, 21, 14});
  CHECK(t.euler_characteristic() == 0);
  CHECK(t.is_pure());
  const auto p = face_poset(t);
  CHECK(p.size() == 44);
  CHECK(classify(p) == EulerianClass::SemiEulerian);
  CHECK(h_vector_simplicial(p) == std::vector<Int>{1, 4, 10, -1});
}

TEST_CASE("face posets") {
  const auto cycle = face_poset(cycle_complex(3));
  CHECK(cycle.size() == 8);
  CHECK(cycle.top_rank() == 3);
  CHECK(cycle.validate().ok());

  const auto vertex = face_poset(disjoint_points(1));
  CHECK(vertex.size() == 3);
  CHECK(vertex.top_rank() == 2);
}

TEST_CASE("links") {
  const auto simplex = boundary_of_simplex(3);
  const auto lk = link(simplex, {"0"});
  CHECK(lk.f_vector() == std::vector<Int>{1, 3, 3});  // a 3-cycle
  CHECK(lk.dimension() == 1);

  const auto torus = torus_7();
  for (const auto& v : torus.labels()) {
    const auto vlk = link(torus, {v});
    CHECK(vlk.is_pure());
    CHECK(vlk.dimension() == 1);
    CHECK(vlk.f_vector() == std::vector<Int>{1, 6, 6});  // 6-cycle
  }

  CHECK(link(torus, {}) == torus);
  CHECK_THROWS_AS(link(torus, {"99"}), FaceNotInComplex);
  CHECK_THROWS_AS(link(cycle_complex(4), {"0", "2"}), FaceNotInComplex);
}

TEST_CASE("order complexes are barycentric subdivisions") {
  const auto b2 = face_poset(boundary_of_simplex(1));
  const auto two_points = order_complex(b2);
  CHECK(two_points.f_vector() == std::vector<Int>{1, 2});

  const auto hexagon = order_complex(face_poset(cycle_complex(3)));
  CHECK(hexagon.f_vector() == std::vector<Int>{1, 6, 6});

  const auto torus = face_poset(torus_7());
  const auto bary = order_complex(torus);
  const auto f = flag_f_vector(torus);
  CHECK(bary.f_vector() ==
        std::vector<Int>{1, f.at(0b001) + f.at(0b010) + f.at(0b100),
                         f.at(0b011) + f.at(0b101) + f.at(0b110), f.at(0b111)});
}

TEST_CASE("boundary subcomplexes") {
  const auto tri_boundary = boundary_subcomplex(full_simplex(3));
  CHECK(tri_boundary.f_vector() == std::vector<Int>{1, 3, 3});

  const auto rhombus = simplex_facet_prefix(3, 1);  // two triangles sharing an edge
  CHECK(boundary_subcomplex(rhombus).f_vector() == std::vector<Int>{1, 4, 4});

  for (int n = 2; n <= 5; ++n) {
    // the boundary of the all-but-one prefix is the boundary of the omitted facet
    CHECK(boundary_subcomplex(simplex_facet_prefix(n, n - 1)) == boundary_of_simplex(n - 1));
  }

  CHECK(boundary_subcomplex(torus_7()).is_empty());  // closed surface
  const auto mixed = SimplicialComplex::from_facets({{"1", "2", "3"}, {"4", "5"}});
  CHECK_THROWS_AS(boundary_subcomplex(mixed), NotPure);
}

TEST_CASE("semisuspension posets") {
  const auto lam30 = semisuspension_sphere(3, 0);
  CHECK(lam30.validate().ok());
  CHECK(lam30.elements_of_rank(3).size() == 2);  // f_{3}(P(Lambda^3_0)) = 2

  for (int n = 2; n <= 4; ++n) {
    const auto full = semisuspension_sphere(n, n - 1);
    const auto simplex = face_poset(boundary_of_simplex(n));
    CHECK(flag_f_vector(full) == flag_f_vector(simplex));
    CHECK(cd_index(full) == cd_index(simplex));
  }

  // rank jump: adding one facet adds exactly one top-rank element
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i <= n - 1; ++i)
      CHECK(Int(semisuspension_sphere(n, i).elements_of_rank(n).size()) -
                Int(semisuspension_sphere(n, i - 1).elements_of_rank(n).size()) ==
            1);

  CHECK_THROWS_AS(semisuspension_sphere(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(semisuspension_sphere(3, -1), std::invalid_argument);
}

TEST_CASE("semisuspension spheres are Eulerian") {
  CHECK(format(cd_index(semisuspension_sphere(4, 0))) == "1*cccc + 2*cdc + 2*dcc");
  for (int n = 1; n <= 7; ++n)
    for (int i = 0; i <= n - 1; ++i)
      CHECK(classify(semisuspension_sphere(n, i)) == EulerianClass::Eulerian);
}

TEST_CASE("chain-count law for semisuspensions") {
  // f_S(P(Lambda^n_i)) by the four-case face-count formula
  for (int n = 2; n <= 6; ++n)
    for (int i = 0; i <= n - 1; ++i) {
      const auto p = semisuspension_sphere(n, i);
      const auto flags = flag_f_vector(p);
      const auto gamma = simplex_facet_prefix(n, i);
      const auto boundary = boundary_subcomplex(gamma);
      for (std::uint32_t mask = 0; mask < flags.size(); ++mask) {
        std::vector<long long> s;
        for (int b = 0; b < n; ++b)
          if (mask & (1u << b)) s.push_back(b + 1);
        Int expected;
        if (s.empty()) {
          expected = 1;
        } else if (s.back() < n) {
          std::vector<long long> parts;
          for (std::size_t k = 0; k < s.size(); ++k) parts.push_back(s[k] - (k ? s[k - 1] : 0));
          expected = multinomial(parts) * lambda_face_count(n, i, static_cast<int>(s.back()) - 1);
        } else if (s.size() == 1) {  // S = {n}
          expected = lambda_face_count(n, i, n - 1);
        } else {
          std::vector<long long> parts;
          for (std::size_t k = 0; k < s.size(); ++k) parts.push_back(s[k] - (k ? s[k - 1] : 0));
          std::vector<long long> parts_head;
          for (std::size_t k = 0; k + 1 < s.size(); ++k)
            parts_head.push_back(s[k] - (k ? s[k - 1] : 0));
          const long long s_prev = s[s.size() - 2];
          const Int boundary_count =
              (s_prev - 1 <= boundary.dimension() && s_prev >= 1)
                  ? Int(boundary.faces_of_dim(static_cast<int>(s_prev) - 1).size())
                  : Int(0);
          expected = multinomial(parts) * (lambda_face_count(n, i, n - 1) - 1) +
                     multinomial(parts_head) * boundary_count;
        }
        INFO("n=" << n << " i=" << i << " S=" << subset_to_string(mask));
        CHECK(flags.at(mask) == expected);
      }
    }
}

TEST_CASE("shelling increment law") {
  // f_{s-1}(Lambda^n_i) - f_{s-1}(Lambda^n_{i-1}) = C(n-i, s-i)
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i <= n - 1; ++i)
      for (int s = 1; s <= n; ++s) {
        INFO("n=" << n << " i=" << i << " s=" << s);
        CHECK(lambda_face_count(n, i, s - 1) - lambda_face_count(n, i - 1, s - 1) ==
              binomial(n - i, s - i));
      }
}

TEST_CASE("boundaries of facet prefixes are spheres (Euler check)") {
  for (int n = 2; n <= 6; ++n)
    for (int i = 0; i <= n - 1; ++i) {
      const auto bd = boundary_subcomplex(simplex_facet_prefix(n, i));
      CHECK(bd.euler_characteristic() == Int(1) + parity_sign(n - 2));
    }
}

TEST_CASE("staircase product S^2 x S^1") {
  const auto prod = sphere_product_s2xs1();
  CHECK(prod.f_vector() == std::vector<Int>{1, 12, 48, 72, 36});
  CHECK(prod.euler_characteristic() == 0);
  CHECK(prod.is_pure());
  const auto p = face_poset(prod);
  CHECK(is_simplicial(p));
  CHECK(h_vector_simplicial(p) == std::vector<Int>{1, 8, 18, 8, 1});
  CHECK(classify(p) == EulerianClass::Eulerian);  // odd-dimensional manifold
}
