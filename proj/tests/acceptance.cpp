// Acceptance runner: one PASS/FAIL line per criterion, exact identities only.
// A criterion fails if any identity fails or its time limit is exceeded.

#include <cstdio>
#include <string>
#include <vector>

#include "macpieri/verify.hpp"

using namespace macpieri;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0: no limit stated
  std::vector<CheckResult> checks;
};

bool report(const Criterion& c) {
  long checked = 0;
  std::size_t failed = 0;
  double seconds = 0;
  for (const auto& r : c.checks) {
    checked += r.checked;
    failed += r.failures.size();
    seconds += r.seconds;
  }
  const bool in_time = c.limit_seconds <= 0 || seconds <= c.limit_seconds;
  const bool pass = failed == 0 && in_time;
  std::printf("[%s] criterion %d: %s: %ld identities, %zu failed, %.1f s", pass ? "PASS" : "FAIL", c.number,
              c.title.c_str(), checked, failed, seconds);
  if (c.limit_seconds > 0) std::printf(" (limit %.0f s%s)", c.limit_seconds, in_time ? "" : ", exceeded");
  std::printf("\n");
  for (const auto& r : c.checks) {
    std::size_t shown = 0;
    for (const auto& f : r.failures) {
      if (shown++ == 10) {
        std::printf("    ... %zu more in %s\n", r.failures.size() - 10, r.name.c_str());
        break;
      }
      std::printf("    %s: %s\n", r.name.c_str(), f.c_str());
    }
  }
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main() {
  int failed = 0;
  auto run = [&](Criterion c) {
    if (!report(c)) ++failed;
  };

  {
    Criterion c{1, "matrix inverse pairs, 20 draws, n <= 2 (n = 3 without determinant), windows of side 3", 60, {}};
    c.checks = check_inverse_pairs(kSeed, 20, 3, 3);
    c.checks.push_back(check_inversion_structure(kSeed));
    run(c);
  }
  run({2,
       "d = psi on strips and Pieri expansion = oracle product, |lambda| <= 6, l <= 3, r <= 4",
       120,
       {check_pieri_coefficients(6, 3, 4), check_pieri_products(6, 3, 4, 10)}});
  run({3,
       "single Q-g step = oracle Q, |lambda| <= 8, l <= 4; C_1, C_2 displays",
       300,
       {check_steps("Q-g", 8, 4), check_c_displays()}});
  run({4,
       "full expansions in g and e = oracle Q and P, |lambda| <= 8; omega duality",
       600,
       {check_full_expansions("Q-g", 8, false), check_full_expansions("P-e", 8, false), check_omega_duality(8)}});
  run({5,
       "C at q = t, theta <= 3, n <= 3; Schur expansion = Jacobi-Trudi, |lambda| <= 8; q = 1 gives e_{lambda'}",
       0,
       {check_schur_values(), check_jacobi_trudi(8), check_q_one(8, 4)}});
  run({6,
       "Hall-Littlewood steps = q = 0 oracle, |lambda| <= 8; C^(t) = C^(t,q) at q = 0, 10 t; monomial steps; F_n = G_n",
       0,
       {check_steps("hl", 8, -1), check_hl_limit(kSeed, 10), check_steps("mono", 8, -1), check_mono_closed_forms(),
        check_fn_gn(kSeed, 50, 4)}});
  run({7,
       "Jack steps = Jack oracle over Q(alpha), |lambda| <= 7; limit for alpha in {1, 2, 1/2}",
       0,
       {check_steps("jack-Q", 7, -1), check_steps("jack-P", 7, -1), check_jack_limit()}});
  run({8, "hooks r + s <= 8: hook determinant, both composition sums, omega, oracle; Pieri recurrence", 0,
       {check_hooks(8), check_hook_recurrence(8)}});
  run({9,
       "non-partition sequences vanish, |lambda| <= 5; Q_(1,2) = t Q_(2,1); HL Pieri pair inverse, length <= 3",
       0,
       {check_nonpartition_vanishing(5), check_hl_sequences(3)}});

  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
