#pragma once

// Command-line front end.  Every subcommand is a thin wrapper over the
// library; output is deterministic text (or JSON where --format json is
// supported).  Exit codes: 0 all checks pass, 1 an asserted verification
// failed, 2 input or usage error.

#include "semicd/cdtheory.hpp"
#include "semicd/corpus.hpp"
#include "semicd/json_io.hpp"
#include "semicd/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace semicd::cli {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Subset masks ordered by (size, numeric value) for readable flag output.
inline std::vector<std::uint32_t> ordered_masks(int n) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (std::uint32_t(1) << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return masks;
}

inline std::string flag_line(const FlagVector& f) {
  std::string out;
  for (std::uint32_t mask : ordered_masks(f.n)) {
    if (!out.empty()) out += ' ';
    out += subset_to_string(mask) + "=" + f.at(mask).str();
  }
  return out;
}

inline std::string int_sequence(const std::vector<Int>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : " ") + x.str();
  return out;
}

struct CdindexOptions {
  std::string kind;  // "poset" or "complex"
  std::string file;
  std::string format = "text";
};

inline int run_cdindex(const CdindexOptions& opt, std::ostream& out, std::ostream& err) {
  GradedPoset poset = (opt.kind == "poset") ? parse_poset(read_file(opt.file))
                                            : face_poset(parse_complex(read_file(opt.file)));
  const auto validation = poset.validate();
  if (!validation.ok()) {
    for (const auto& v : validation.violations) err << "invalid poset: " << v << '\n';
    return 2;
  }

  const auto cls = classify(poset);
  const auto flag_f = flag_f_vector(poset);
  const auto flag_h = flag_h_vector(flag_f);
  const auto modified = modified_flag_f(poset);
  const bool has_cd = cls != EulerianClass::Neither;
  const NcPolynomial chi = polynomial_from_flag(flag_f);
  const NcPolynomial psi = polynomial_from_flag(flag_h);
  const NcPolynomial chi_prime = polynomial_from_flag(modified);
  const NcPolynomial phi = has_cd ? cd_index_unchecked(poset) : NcPolynomial(Alphabet::cd);
  const bool simplicial = is_simplicial(poset);

  if (opt.format == "json") {
    nlohmann::json j{{"type", opt.kind},
                     {"rank", poset.top_rank()},
                     {"classification", to_string(cls)},
                     {"euler_characteristic", euler_characteristic(poset).str()},
                     {"flag_f", flag_vector_to_json(flag_f)},
                     {"flag_h", flag_vector_to_json(flag_h)},
                     {"chain_polynomial", ncpoly_to_json(chi)},
                     {"ab_polynomial", ncpoly_to_json(psi)},
                     {"modified_chain_polynomial", ncpoly_to_json(chi_prime)},
                     {"cd_index", has_cd ? ncpoly_to_json(phi) : nlohmann::json()},
                     {"simplicial", simplicial}};
    if (simplicial) {
      nlohmann::json fv = nlohmann::json::array(), hv = nlohmann::json::array();
      for (const auto& x : f_vector_simplicial(poset)) fv.push_back(x.str());
      for (const auto& x : h_vector_simplicial(poset)) hv.push_back(x.str());
      j["f_vector"] = fv;
      j["h_vector"] = hv;
    }
    out << j.dump(2) << '\n';
    return 0;
  }

  out << "type: " << opt.kind << '\n';
  out << "rank: " << poset.top_rank() << '\n';
  out << "classification: " << to_string(cls) << '\n';
  out << "euler-characteristic: " << euler_characteristic(poset) << '\n';
  out << "flag-f: " << flag_line(flag_f) << '\n';
  out << "flag-h: " << flag_line(flag_h) << '\n';
  out << "chain-polynomial: " << format(chi) << '\n';
  out << "ab-polynomial: " << format(psi) << '\n';
  out << "modified-chain-polynomial: " << format(chi_prime) << '\n';
  out << "cd-index: " << (has_cd ? format(phi) : std::string("undefined (not semi-Eulerian)"))
      << '\n';
  if (simplicial) {
    out << "f-vector: " << int_sequence(f_vector_simplicial(poset)) << '\n';
    out << "h-vector: " << int_sequence(h_vector_simplicial(poset)) << '\n';
  }
  return 0;
}

inline std::vector<Report> run_suites(const std::string& suite, int max_n) {
  std::vector<Report> reports;
  auto append = [&reports](Report r) { reports.push_back(std::move(r)); };
  const bool all = suite == "all";

  if (all || suite == "gds") append(gds_suite(std::min(max_n, 5)));
  if (all || suite == "cdvsh") append(cdvsh_suite(std::min(max_n, 5), max_n >= 4));
  if (all || suite == "andre") {
    append(andre_equivalence_suite(std::min(max_n, 9)));
    append(phi_route_suite(std::min(max_n, 8)));
    append(phi_structure_suite(std::min(max_n, 9)));
  }
  if (all || suite == "derivation") append(verify_derivation(std::min(max_n, 8)));
  if (all || suite == "ppos")
    for (int n = 3; n <= std::min(max_n, 9); ++n) append(bound_suites(n));
  if (all || suite == "identityhard")
    for (int n = 3; n <= std::min(max_n, 9); n += 2) append(verify_identity_hard(n));
  if (all || suite == "recurrence") {
    for (int n = 2; n <= std::min(max_n, 9); ++n) append(verify_coefficient_identities(n));
    for (int n = 5; n <= std::min(max_n, 9); ++n) append(verify_recurrences(n));
  }
  if (all || suite == "pn2")
    for (int n = 5; n <= std::min(max_n, 9); ++n) append(verify_lemma_pn2(n));
  if (all || suite == "bounds")
    for (auto& r : bounds_corpus_suite(std::min(max_n, 5), max_n >= 4)) append(std::move(r));
  if (all || suite == "unimodal")
    for (int n = 3; n <= std::min(max_n, 9); ++n) append(unimodality_report(n));

  if (reports.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return reports;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact cd-index toolkit for Eulerian and semi-Eulerian posets"};
  app.name("semicd");
  app.require_subcommand(1);

  // cdindex
  CdindexOptions cdindex_opt;
  auto* cdindex_cmd =
      app.add_subcommand("cdindex", "classification, flag vectors, and cd-index of one input");
  cdindex_cmd->add_option("kind", cdindex_opt.kind, "input kind")
      ->required()
      ->check(CLI::IsMember({"poset", "complex"}));
  cdindex_cmd->add_option("--file", cdindex_opt.file, "input file")->required();
  cdindex_cmd->add_option("--format", cdindex_opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // phicheck
  int phi_n = 0, phi_i = -1;
  auto* phicheck_cmd = app.add_subcommand("phicheck", "Phi-check polynomial table");
  phicheck_cmd->add_option("--n", phi_n, "degree")->required()->check(CLI::Range(1, 9));
  phicheck_cmd->add_option("--i", phi_i, "single index");

  // ppoly
  int p_n = 0, p_j = -1;
  auto* ppoly_cmd = app.add_subcommand("ppoly", "P-polynomial table");
  ppoly_cmd->add_option("--n", p_n, "degree")->required()->check(CLI::Range(1, 9));
  ppoly_cmd->add_option("--j", p_j, "single index");

  // andre
  int andre_n = 0, andre_last = 0;
  auto* andre_cmd = app.add_subcommand("andre", "cd-type census of Andre permutations");
  andre_cmd->add_option("--n", andre_n, "permutation size")->required()->check(CLI::Range(1, 9));
  andre_cmd->add_option("--last", andre_last, "restrict to permutations with this last value");

  // betti
  std::string betti_file;
  long long betti_char = 0;
  auto* betti_cmd = app.add_subcommand("betti", "reduced Betti numbers of a complex");
  betti_cmd->add_option("--file", betti_file, "facet-list file")->required();
  betti_cmd->add_option("--char", betti_char, "field characteristic (0 = rationals)");

  // bounds
  std::string bounds_file;
  long long bounds_char = 0;
  auto* bounds_cmd =
      app.add_subcommand("bounds", "h-vector and cd-index lower bounds for one complex");
  bounds_cmd->add_option("--file", bounds_file, "facet-list file")->required();
  bounds_cmd->add_option("--char", bounds_char, "field characteristic (0 = rationals)");

  // gamma
  std::string gamma_file;
  auto* gamma_cmd = app.add_subcommand("gamma", "gamma-vector of an odd-rank Eulerian complex");
  gamma_cmd->add_option("--file", gamma_file, "facet-list file")->required();

  // verify
  std::string verify_suite, verify_format = "text";
  int verify_max_n = 7;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", verify_suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"gds", "cdvsh", "andre", "derivation", "ppos", "identityhard",
                             "recurrence", "pn2", "bounds", "unimodal", "all"}));
  verify_cmd->add_option("--max-n", verify_max_n, "largest n to sweep")->check(CLI::Range(1, 9));
  verify_cmd->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*cdindex_cmd) return run_cdindex(cdindex_opt, out, err);

    if (*phicheck_cmd) {
      const auto& table = phi_table(phi_n);
      if (phi_i >= 0) {
        if (phi_i > phi_n) throw std::invalid_argument("--i out of range");
        out << format(table.at(phi_i)) << '\n';
      } else {
        for (int i = 0; i <= phi_n; ++i)
          out << "phi-check[" << phi_n << "," << i << "]: " << format(table.at(i)) << '\n';
      }
      return 0;
    }

    if (*ppoly_cmd) {
      const PTable table = p_table(p_n);
      if (p_j >= 0) {
        if (p_j > p_n - 1) throw std::invalid_argument("--j out of range");
        out << format(table.at(p_j)) << '\n';
      } else {
        for (int j = 0; j <= p_n - 1; ++j)
          out << "p[" << p_n << "," << j << "]: " << format(table.at(j)) << '\n';
      }
      return 0;
    }

    if (*andre_cmd) {
      if (andre_last != 0) {
        if (andre_last < 1 || andre_last > andre_n)
          throw std::invalid_argument("--last out of range");
        out << format(andre_census_by_last(andre_n)[static_cast<std::size_t>(andre_last)])
            << '\n';
      } else {
        out << format(andre_type_census(andre_n)) << '\n';
      }
      return 0;
    }

    if (*betti_cmd) {
      const auto field =
          betti_char == 0 ? FieldChoice::rationals() : FieldChoice::prime_field(betti_char);
      const auto complex = parse_complex(read_file(betti_file));
      const auto betti = betti_numbers(complex, field);
      out << "field: " << field.str() << '\n';
      std::string line;
      for (int i = 0; i <= betti.dim; ++i)
        line += (line.empty() ? "" : " ") + std::to_string(betti.reduced(i));
      out << "reduced-betti: " << line << '\n';
      if (betti.reduced(-1) != 0) out << "reduced-betti[-1]: " << betti.reduced(-1) << '\n';
      return 0;
    }

    if (*bounds_cmd) {
      const auto field =
          bounds_char == 0 ? FieldChoice::rationals() : FieldChoice::prime_field(bounds_char);
      const auto poset = face_poset(parse_complex(read_file(bounds_file)));
      const Report ns = novik_swartz_report(poset, field);
      const Report cd = buchsbaum_cd_bounds(poset, field);
      ns.write_text(out);
      cd.write_text(out);
      return ns.ok() && cd.ok() ? 0 : 1;
    }

    if (*gamma_cmd) {
      const auto poset = face_poset(parse_complex(read_file(gamma_file)));
      const auto via_cd = gamma_vector(poset);
      const auto via_h = gamma_from_h(h_vector_from_f(order_complex(poset).f_vector()));
      out << "gamma: " << int_sequence(via_cd) << '\n';
      out << "gamma-from-h: " << int_sequence(via_h) << '\n';
      const bool agree = via_cd == via_h;
      out << "agree: " << (agree ? "yes" : "NO") << '\n';
      return agree ? 0 : 1;
    }

    if (*verify_cmd) {
      const auto reports = run_suites(verify_suite, verify_max_n);
      bool ok = true;
      if (verify_format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : reports) {
          j.push_back(r.to_json());
          ok = ok && r.ok();
        }
        out << j.dump(2) << '\n';
      } else {
        for (const auto& r : reports) {
          r.write_text(out);
          ok = ok && r.ok();
        }
        out << "verify: " << (ok ? "PASS" : "FAIL") << '\n';
      }
      return ok ? 0 : 1;
    }
  } catch (const NotApplicable& e) {
    err << "not applicable: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace semicd::cli
