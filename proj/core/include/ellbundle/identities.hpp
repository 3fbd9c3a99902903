#pragma once

#include <string>
#include <vector>

namespace ellbundle {

struct SuiteOptions {
  int nmin = 2;
  int nmax = 6;
  int amin = -5;
  int amax = 5;
  int truncation = 8;
};

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few failing cases

  bool ok() const { return failed == 0 && passed > 0; }
  void record(bool ok, const std::string& label);
};

/// ch U(d) e^{-zeta+L} = ch U_{1-d} for nmin <= n <= nmax, 1 <= d <= n-1.
SuiteResult suite_master(const SuiteOptions& opt);
/// ch U_a - ch U_{a-1} = -e^{(a-1)L}(1 - e^{-(zeta-nL)}).
SuiteResult suite_recursion(const SuiteOptions& opt);
/// Newton conversion of ch U_a against the displayed c1 and c2.
SuiteResult suite_chern_extraction(const SuiteOptions& opt);
/// The three product formulas for c(U_a) against each other and against the
/// Newton conversion of ch U_a; also c(U(d)) against ch U(d).
SuiteResult suite_branches(const SuiteOptions& opt);
/// Fibration formulas specialized to one curve against the single-curve ones.
SuiteResult suite_specialization(const SuiteOptions& opt);
/// Section formulas: determinant, trivial section, reducible recursion.
SuiteResult suite_section(const SuiteOptions& opt);

std::vector<std::string> suite_names();
/// Throws DomainError("unknown-suite").
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace ellbundle
