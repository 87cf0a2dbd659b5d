#pragma once

#include <optional>
#include <string>
#include <vector>

namespace eispart::verify {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;  // scope of the check, or what went wrong
};

// The checks behind `eispart verify` and the acceptance runner. Each one
// re-derives its expected values independently (lattice enumeration, sieved
// divisor sums, explicit linear algebra) and compares exactly; there are no
// tolerances anywhere.
CheckResult check_orthogonality();
CheckResult check_projection_roundtrip();
CheckResult check_e4_squared();
CheckResult check_ramanujan_identities();
CheckResult check_convolution_formula();
CheckResult check_level6_basis();
CheckResult check_eta_identities();
CheckResult check_representation_counts();
CheckResult check_ramanujan_mordell();
CheckResult check_cusp_order_totals();
CheckResult check_sturm_rank();
CheckResult check_sign_identity();

const std::vector<std::string>& suite_names();
std::optional<CheckResult> run_suite(const std::string& name);
std::vector<CheckResult> run_all();

// Prints one PASS/FAIL line per result plus a summary; returns the number of
// failures.
int report(const std::vector<CheckResult>& results, std::ostream& os);

}  // namespace eispart::verify
