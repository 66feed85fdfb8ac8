#pragma once

// Property checks shared by the command-line `verify` command and the
// acceptance runner. Each check catches library exceptions and records them as
// failures; nothing here throws on a failed identity.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "macpieri/symfunc.hpp"

namespace macpieri {

struct CheckResult {
  std::string name;
  long checked = 0;
  std::vector<std::string> failures;
  double seconds = 0;  // wall time, not part of the JSON report
  bool ok() const { return failures.empty(); }
};

// Inverse pairs: every family on random rational draws, n = 1..max_n.
std::vector<CheckResult> check_inverse_pairs(std::uint64_t seed, int draws, int max_n, int window_side);
// Index negation, diagonal transfer, substitution construction of the
// b-deformed pairs, geometric specialization of the closed-form pair.
CheckResult check_inversion_structure(std::uint64_t seed);

// d_theta against psi on every horizontal strip, |lambda| <= max_weight, l(lambda) <= max_len, r <= max_r.
CheckResult check_pieri_coefficients(int max_weight, int max_len, int max_r);
// Q_lambda g_r against sum d Q_kappa in the monomial basis (oracle on both sides).
CheckResult check_pieri_products(int max_weight, int max_len, int max_r, int max_total);

// Single inversion steps for a side, all partitions |lambda| <= max_weight, l(lambda) <= max_len (< 0: any).
CheckResult check_steps(const std::string& side, int max_weight, int max_len);
// C_1, C_2 closed displays and the n = 1 closed form.
CheckResult check_c_displays();
// Full expansions against the oracle, closed-display coefficients and indices.
CheckResult check_full_expansions(const std::string& side, int max_weight, bool full_mode);
CheckResult check_omega_duality(int max_weight);
// C and d as mutually inverse matrices at random rational q, t, u.
CheckResult check_inverse_link(std::uint64_t seed);

// Vanishing pattern of C at q = t for theta entries <= 3, n <= 3.
CheckResult check_schur_values();
// Schur full expansion in h against the Jacobi-Trudi determinant.
CheckResult check_jacobi_trudi(int max_weight);
// P_lambda(1, t) = e_{lambda'} for partitions with parts <= max_part, from both
// the oracle and the e-expansion.
CheckResult check_q_one(int max_weight, int max_part);
// Hall-Littlewood C against C^{(t,q)} at q = 0 and random rational t.
CheckResult check_hl_limit(std::uint64_t seed, int t_values);
CheckResult check_mono_closed_forms();
CheckResult check_fn_gn(std::uint64_t seed, int draws, int max_n);
// Jack C against C^{(q,t)} on the curve q = x^p, t = x^r at x = 1.
CheckResult check_jack_limit();

// Hooks: hook determinant, both composition sums, omega, oracle, full expansion.
CheckResult check_hooks(int max_weight);
CheckResult check_hook_recurrence(int max_weight);

// Non-partition rearrangements of partitions of weight <= max_weight give zero.
CheckResult check_nonpartition_vanishing(int max_weight);
// Q_(1,2) = t Q_(2,1); analytic HL Pieri pair and recurrence on integer
// sequences of length <= max_len; their coefficient matrices are inverse.
CheckResult check_hl_sequences(int max_len);

// Named suites used by `verify`: inversions, pieri, main, specializations, hook, all.
std::vector<CheckResult> run_suite(const std::string& suite, int max_weight, std::uint64_t seed);
const std::vector<std::string>& suite_names();

nlohmann::ordered_json check_report_json(const std::string& suite, int max_weight, std::uint64_t seed,
                                         const std::vector<CheckResult>& results);

// Jacobi-Trudi determinant det(h_{lambda_i - i + j}) in h-products (gprod, schur family).
SymFunc jacobi_trudi(const Partition& lambda);

}  // namespace macpieri
