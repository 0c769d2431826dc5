#pragma once

// Structured check reports shared by every verification suite.  A check is
// either asserted (it decides the suite outcome) or advisory (computed and
// printed, but informational).  The JSON rendering is the CLI's --format json
// payload.

#include "semicd/arith.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace semicd {

struct Check {
  std::string where;
  std::string lhs;
  std::string rhs;
  std::string residual;
  bool pass = true;
  bool advisory = false;
};

struct Report {
  std::string suite;
  int n = 0;
  std::vector<Check> checks;

  void add_equality(std::string where, const Int& lhs, const Int& rhs, bool advisory = false) {
    checks.push_back(
        {std::move(where), lhs.str(), rhs.str(), Int(lhs - rhs).str(), lhs == rhs, advisory});
  }
  /// pass when lhs >= bound; the residual records the slack.
  void add_bound(std::string where, const Int& lhs, const Int& bound, bool advisory = false) {
    checks.push_back(
        {std::move(where), lhs.str(), bound.str(), Int(lhs - bound).str(), lhs >= bound, advisory});
  }
  void add_flag(std::string where, bool pass, std::string detail = "", bool advisory = false) {
    checks.push_back({std::move(where), std::move(detail), "", "", pass, advisory});
  }

  /// All asserted checks pass (advisory failures do not count).
  bool ok() const {
    for (const auto& c : checks)
      if (!c.advisory && !c.pass) return false;
    return true;
  }
  std::size_t failed(bool advisory) const {
    std::size_t k = 0;
    for (const auto& c : checks)
      if (c.advisory == advisory && !c.pass) ++k;
    return k;
  }
  std::size_t asserted_total() const {
    std::size_t k = 0;
    for (const auto& c : checks)
      if (!c.advisory) ++k;
    return k;
  }

  nlohmann::json to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks)
      checks_json.push_back({{"where", c.where},
                             {"lhs", c.lhs},
                             {"rhs", c.rhs},
                             {"residual", c.residual},
                             {"pass", c.pass},
                             {"advisory", c.advisory}});
    return {{"suite", suite}, {"n", n}, {"checks", checks_json}};
  }

  std::string summary() const {
    std::ostringstream os;
    os << "suite " << suite << " (n=" << n << "): " << (asserted_total() - failed(false)) << "/"
       << asserted_total() << " asserted checks passed";
    const std::size_t adv = failed(true);
    if (adv) os << ", " << adv << " advisory check(s) below bound";
    return os.str();
  }

  void write_text(std::ostream& out) const {
    out << summary() << '\n';
    for (const auto& c : checks) {
      if (c.pass) continue;
      out << "  " << (c.advisory ? "ADVISORY " : "FAIL     ") << c.where;
      if (!c.lhs.empty()) out << ": lhs=" << c.lhs << " rhs=" << c.rhs;
      if (!c.residual.empty()) out << " residual=" << c.residual;
      out << '\n';
    }
  }
};

}  // namespace semicd
