#pragma once

// Corpus-level verification suites: each bundles library operations over the
// standard corpus into a Report, and together they back the CLI `verify`
// subcommand.

#include "semicd/cdtheory.hpp"
#include "semicd/corpus.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace semicd {

struct CorpusPoset {
  std::string name;
  GradedPoset poset;
  FieldChoice field;
};

/// The poset corpus for the Buchsbaum bound suites.
inline std::vector<CorpusPoset> bound_corpus(int max_simplex = 5, bool include_product = true) {
  std::vector<CorpusPoset> out;
  out.push_back({"torus7(Q)", face_poset(torus_7()), FieldChoice::rationals()});
  out.push_back({"rp2_6(F_2)", face_poset(projective_plane_6()), FieldChoice::prime_field(2)});
  out.push_back({"rp2_6(Q)", face_poset(projective_plane_6()), FieldChoice::rationals()});
  for (int n = 2; n <= max_simplex; ++n)
    out.push_back({"boundary-simplex-" + std::to_string(n) + "(Q)",
                   face_poset(boundary_of_simplex(n)), FieldChoice::rationals()});
  if (include_product)
    out.push_back({"s2xs1(Q)", face_poset(sphere_product_s2xs1()), FieldChoice::rationals()});
  return out;
}

/// GDS behaviour: the torus flag f-vector violates exactly the S = {} relation
/// with residual -2 and its modified vector none; the projective plane behaves
/// the same with residual -1; simplex boundaries satisfy everything.
inline Report gds_suite(int max_simplex = 5) {
  Report report{"gds", max_simplex, {}};

  const auto torus = face_poset(torus_7());
  const auto tr = gds_check(flag_f_vector(torus));
  const bool torus_single = tr.violations.size() == 1 && tr.violations[0].set_mask == 0 &&
                            tr.violations[0].i == 0 && tr.violations[0].k == 4 &&
                            tr.violations[0].residual == -2;
  report.add_flag("torus7 flag-f: single violation at S={} with residual -2", torus_single,
                  std::to_string(tr.violations.size()) + " violation(s)");
  report.add_flag("torus7 modified flag-f: no violations",
                  gds_check(modified_flag_f(torus)).ok());

  const auto rp2 = face_poset(projective_plane_6());
  const auto pr = gds_check(flag_f_vector(rp2));
  const bool rp2_single = pr.violations.size() == 1 && pr.violations[0].set_mask == 0 &&
                          pr.violations[0].residual == -1;
  report.add_flag("rp2_6 flag-f: single violation at S={} with residual -1", rp2_single,
                  std::to_string(pr.violations.size()) + " violation(s)");
  report.add_flag("rp2_6 modified flag-f: no violations", gds_check(modified_flag_f(rp2)).ok());

  for (int n = 1; n <= max_simplex; ++n)
    report.add_flag("boundary-simplex-" + std::to_string(n) + " flag-f: no violations",
                    gds_check(flag_f_vector(face_poset(boundary_of_simplex(n)))).ok());
  return report;
}

/// cd_index_from_h(h(P)) equals the direct cd-index on every simplicial
/// semi-Eulerian corpus poset (including two-facet semisuspension spheres,
/// which are simplicial posets but not complexes).
inline Report cdvsh_suite(int max_simplex = 4, bool include_product = true) {
  Report report{"cd-vs-h", max_simplex, {}};
  auto check = [&report](const std::string& name, const GradedPoset& p) {
    const NcPolynomial direct = cd_index(p);
    const NcPolynomial via_h = cd_index_from_h(h_vector_simplicial(p));
    const NcPolynomial diff = direct - via_h;
    report.add_flag(name, diff.is_zero(), diff.is_zero() ? "" : "difference " + format(diff));
  };
  check("torus7", face_poset(torus_7()));
  check("rp2_6", face_poset(projective_plane_6()));
  for (int n = 2; n <= max_simplex; ++n)
    check("boundary-simplex-" + std::to_string(n), face_poset(boundary_of_simplex(n)));
  for (int n = 2; n <= std::min(max_simplex, 5); ++n)
    check("two-facet-sphere-" + std::to_string(n), semisuspension_sphere(n, 0));
  if (include_product) check("s2xs1", face_poset(sphere_product_s2xs1()));
  return report;
}

/// The two Andre predicates agree on all of S_n, and cd-types end in c / d
/// when the last value is n / 1.
inline Report andre_equivalence_suite(int max_n) {
  Report report{"andre-predicates", max_n, {}};
  for (int n = 1; n <= max_n; ++n) {
    long long mismatches = 0, andre_count = 0, bad_endings = 0;
    Permutation pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    do {
      const bool direct = is_andre_direct(pi);
      if (direct != is_andre_recursive(pi)) ++mismatches;
      if (direct) {
        ++andre_count;
        const std::string w = cd_type(pi);
        if (pi.back() == n && w.back() != 'c') ++bad_endings;
        if (n >= 2 && pi.back() == 1 && w.back() != 'd') ++bad_endings;
      }
    } while (std::next_permutation(pi.begin(), pi.end()));
    report.add_flag("n=" + std::to_string(n) + ": direct == recursive on S_n", mismatches == 0,
                    std::to_string(andre_count) + " Andre permutations");
    report.add_flag("n=" + std::to_string(n) + ": final letters match last values",
                    bad_endings == 0);
  }
  return report;
}

/// Route equality: the semisuspension route and the permutation route build
/// the same Phi-check tables.
inline Report phi_route_suite(int max_n) {
  Report report{"phi-check-routes", max_n, {}};
  for (int n = 1; n <= max_n; ++n) {
    const PhiTable from_posets = phi_table_from_posets(n);
    const PhiTable from_andre = phi_table_from_andre(n);
    for (int i = 0; i <= n; ++i) {
      const NcPolynomial diff = from_posets.at(i) - from_andre.at(i);
      report.add_flag("n=" + std::to_string(n) + " i=" + std::to_string(i), diff.is_zero(),
                      diff.is_zero() ? "" : "difference " + format(diff));
    }
  }
  return report;
}

/// P^n_0 equals its closed form (c^2-2d)^(n/2) (times c for odd n).
inline Report closed_form_suite(int max_n) {
  Report report{"p0-closed-form", max_n, {}};
  for (int n = 1; n <= max_n; ++n) {
    const NcPolynomial diff = p_table(n).at(0) - closed_form_p0(n);
    report.add_flag("n=" + std::to_string(n), diff.is_zero(),
                    diff.is_zero() ? "" : "difference " + format(diff));
  }
  return report;
}

/// Structural invariants of the Phi-check tables: the top entry vanishes,
/// entries are homogeneous of degree n with nonnegative coefficients, and
/// P^n_j = (-1)^j sum_i C(n-1,i)(-1)^i (Phi_i - Phi_{i+1}) + C(n-1,j-1) Phi_j.
inline Report phi_structure_suite(int max_n) {
  Report report{"phi-check-structure", max_n, {}};
  for (int n = 1; n <= max_n; ++n) {
    const auto& t = phi_table(n);
    report.add_flag("n=" + std::to_string(n) + ": top entry is zero", t.at(n).is_zero());
    bool homogeneous = true, nonnegative = true;
    for (int i = 0; i <= n - 1; ++i) {
      homogeneous = homogeneous && t.at(i).is_homogeneous() &&
                    (t.at(i).is_zero() || t.at(i).degree() == n);
      for (const auto& [w, c] : t.at(i).terms()) nonnegative = nonnegative && c >= 0;
    }
    report.add_flag("n=" + std::to_string(n) + ": entries homogeneous of degree n", homogeneous);
    report.add_flag("n=" + std::to_string(n) + ": coefficients nonnegative", nonnegative);

    const PTable pt = p_table(n);
    bool rewriting = true;
    for (int j = 0; j <= n - 1; ++j) {
      NcPolynomial acc(Alphabet::cd);
      for (int i = j; i <= n - 1; ++i)
        acc += parity_sign(i + j) * binomial(n - 1, i) * (t.at(i) - t.at(i + 1));
      acc += binomial(n - 1, j - 1) * t.at(j);
      rewriting = rewriting && (acc == pt.at(j));
    }
    report.add_flag("n=" + std::to_string(n) + ": binomial rewriting of P-table", rewriting);
  }
  return report;
}

/// Buchsbaum bounds over the corpus: the proof-level inequality and the
/// Novik-Swartz bounds asserted, closed forms advisory; for the rank-5
/// Eulerian members also the gamma/Charney-Davis lower bound
/// sum (-1)^i h_i(order complex) >= 32 beta~_1 + 16 beta~_2.
inline std::vector<Report> bounds_corpus_suite(int max_simplex = 5, bool include_product = true) {
  std::vector<Report> reports;
  for (const auto& entry : bound_corpus(max_simplex, include_product)) {
    Report merged{"buchsbaum-bounds " + entry.name, entry.poset.n(), {}};
    for (const auto& part :
         {buchsbaum_cd_bounds(entry.poset, entry.field), novik_swartz_report(entry.poset, entry.field)})
      for (const auto& c : part.checks)
        merged.checks.push_back({part.suite + ": " + c.where, c.lhs, c.rhs, c.residual, c.pass,
                                 c.advisory});

    if (entry.poset.n() == 4 && classify(entry.poset) == EulerianClass::Eulerian) {
      const auto oc = order_complex(entry.poset);
      const auto h = h_vector_from_f(oc.f_vector());
      const Int cd_quantity = charney_davis(h);
      const auto betti = betti_numbers(oc, entry.field);
      merged.add_bound("charney-davis vs 32b1+16b2", cd_quantity,
                       Int(32) * betti.reduced(1) + Int(16) * betti.reduced(2));
      const NcPolynomial phi = cd_index_unchecked(entry.poset);
      merged.add_equality("charney-davis equals 4[dd]Phi", cd_quantity,
                          Int(4) * phi.coeff("dd"));
    }
    reports.push_back(std::move(merged));
  }
  return reports;
}

}  // namespace semicd
