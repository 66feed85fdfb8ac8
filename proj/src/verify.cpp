#include "macpieri/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "macpieri/errors.hpp"
#include "macpieri/hook.hpp"
#include "macpieri/inverse_pieri.hpp"
#include "macpieri/inversions.hpp"
#include "macpieri/oracle.hpp"
#include "macpieri/pieri.hpp"

namespace macpieri {

namespace {

using Clock = std::chrono::steady_clock;

// Runs one identity; exceptions count as failures.
template <class Fn>
void probe(CheckResult& r, const std::string& what, Fn&& fn) {
  ++r.checked;
  try {
    if (!fn()) r.failures.push_back(what);
  } catch (const std::exception& e) {
    r.failures.push_back(what + ": " + e.what());
  }
}

template <class Fn>
CheckResult timed(const std::string& name, Fn&& body) {
  CheckResult r;
  r.name = name;
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("aborted: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

mpq_class draw_rational(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  while (true) {
    mpq_class v(num(rng), den(rng));
    v.canonicalize();
    if (v != 0) return v;
  }
}

std::string lam_str(const IntSeq& s) { return "(" + seq_to_string(s) + ")"; }

Partition hook_shape(int r, int s) {
  std::vector<int> p(static_cast<std::size_t>(s) + 1, 1);
  p[0] = r;
  return Partition(p);
}

std::vector<Partition> nonempty_up_to(int w, int max_len = -1, int max_part = -1) {
  std::vector<Partition> out;
  for (const auto& p : enumerate_partitions_up_to(w, max_len, max_part))
    if (!p.empty()) out.push_back(p);
  return out;
}

// g-product element times the one-row g_r.
SymFunc times_row(const SymFunc& f, int r) {
  SymFunc out(Basis::gprod, f.degree_bound + r, f.family);
  if (r < 0) return out;
  for (const auto& [nu, c] : f.coeffs) {
    std::vector<int> idx = nu.parts();
    idx.push_back(r);
    out.add(sorted_partition(idx), c);
  }
  return out;
}

bool same_terms(const std::vector<ExpansionTerm>& a, const std::vector<ExpansionTerm>& b, bool swap_b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].index != b[i].index || a[i].theta != b[i].theta) return false;
    if (a[i].coeff != (swap_b ? b[i].coeff.swapped() : b[i].coeff)) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- inversions

std::vector<CheckResult> check_inverse_pairs(std::uint64_t seed, int draws, int max_n, int window_side) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  const Window w{0, window_side};
  for (PairFamily fam : all_pair_families()) {
    out.push_back(timed(std::string("inverse pair ") + pair_family_name(fam), [&](CheckResult& r) {
      int top = is_one_dimensional(fam) ? 1 : max_n;
      if (has_determinant(fam)) top = std::min(top, 2);
      for (int n = 1; n <= top; ++n)
        for (int d = 0; d < draws; ++d) {
          const NumericPairSpec s = draw_regular(fam, n, w, rng);
          const InverseReport rep = verify_inverse(s, w);
          r.checked += rep.checked;
          for (const auto& v : rep.violations)
            r.failures.push_back("n=" + std::to_string(n) + " draw " + std::to_string(d) + " " + v.relation + " m=" +
                                 lam_str(v.m) + " l=" + lam_str(v.l) + " value " + v.value);
        }
    }));
  }
  return out;
}

CheckResult check_inversion_structure(std::uint64_t seed) {
  return timed("inversion structure", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    const Window w{0, 3};
    auto fn = [](const NumericPairSpec& s, PairSide side) -> EntryFn<mpq_class> {
      return [s, side](const IntSeq& a, const IntSeq& b) { return pair_entry(s, side, a, b); };
    };
    for (int n = 1; n <= 2; ++n) {
      const NumericPairSpec s = draw_regular(PairFamily::det_prod, n, w, rng);
      NumericPairSpec neg = negated(s);
      neg.family = PairFamily::prod_det;
      for (const IntSeq& m : window_indices(n, w))
        for (const IntSeq& k : window_indices(n, w)) {
          IntSeq mm = m, kk = k;
          for (auto& x : mm) x = -x;
          for (auto& x : kk) x = -x;
          probe(r, "negation n=" + std::to_string(n) + " " + lam_str(m) + lam_str(k), [&] {
            return pair_entry(s, PairSide::f, m, k) == pair_entry(neg, PairSide::g, kk, mm) &&
                   pair_entry(s, PairSide::g, m, k) == pair_entry(neg, PairSide::f, kk, mm);
          });
        }
    }
    for (int n = 1; n <= 3; ++n) {
      const NumericPairSpec s = draw_regular(PairFamily::prod_det, n, w, rng);
      std::map<IntSeq, mpq_class> d;
      for (const IntSeq& k : window_indices(n, w)) d[k] = draw_rational(rng);
      const EntryFn<mpq_class> f = [&](const IntSeq& m, const IntSeq& k) {
        return mpq_class(pair_entry(s, PairSide::f, m, k) * d[m] / d[k]);
      };
      const EntryFn<mpq_class> g = [&](const IntSeq& k, const IntSeq& l) {
        return mpq_class(pair_entry(s, PairSide::g, k, l) * d[k] / d[l]);
      };
      probe(r, "transfer n=" + std::to_string(n), [&] {
        return verify_entries(f, g, n, w).ok() &&
               transfer_mismatches(fn(s, PairSide::f), fn(s, PairSide::g), f, g, n, w) == 0;
      });
      for (auto [fam, dual] : {std::pair{PairFamily::prod_det_b, false}, {PairFamily::det_prod_b, true}}) {
        const NumericPairSpec c = draw_regular(fam, n, w, rng);
        probe(r, std::string("substitution ") + pair_family_name(fam) + " n=" + std::to_string(n), [&] {
          const auto [f1, g1] = substituted_limit_pair(c, dual);
          return verify_entries(f1, g1, n, w).ok() &&
                 transfer_mismatches(f1, g1, fn(c, PairSide::f), fn(c, PairSide::g), n, w) == 0;
        });
      }
      const NumericPairSpec b = draw_regular(PairFamily::closed_form, n, w, rng);
      probe(r, "geometric specialization n=" + std::to_string(n), [&] {
        const NumericPairSpec geo = geometric_preset(b.q, b.t, b.u, w.lo, w.lo + w.side - 1);
        return verify_inverse(geo, w).ok() &&
               transfer_mismatches(fn(geo, PairSide::f), fn(geo, PairSide::g), fn(b, PairSide::f),
                                   fn(b, PairSide::g), n, w) == 0;
      });
    }
    const Window w4{0, 4};
    const NumericPairSpec kb = draw_regular(PairFamily::one_dim_b, 1, w4, rng);
    NumericPairSpec t1 = kb;
    t1.family = PairFamily::prod_det;
    probe(r, "one-dimensional b-pair as a transfer of the n = 1 pair", [&] {
      return transfer_mismatches(fn(t1, PairSide::f), fn(t1, PairSide::g), fn(kb, PairSide::f), fn(kb, PairSide::g),
                                 1, w4) == 0;
    });
    probe(r, "one-dimensional b-pair by substitution", [&] {
      const auto [f1, g1] = substituted_limit_pair(kb, false);
      return transfer_mismatches(f1, g1, fn(kb, PairSide::f), fn(kb, PairSide::g), 1, w4) == 0;
    });
  });
}

// --------------------------------------------------------------------- pieri

CheckResult check_pieri_coefficients(int max_weight, int max_len, int max_r) {
  return timed("d equals psi on strips", [&](CheckResult& r) {
    for (const auto& lam : enumerate_partitions_up_to(max_weight, max_len))
      for (int rr = 0; rr <= max_r; ++rr) {
        const int n = lam.length();
        std::vector<MonomialArg> u;
        for (int k = 1; k <= n; ++k) u.emplace_back(lam[k] - rr, n - k);
        for (const auto& th : enumerate_theta(n, rr)) {
          IntSeq kappa;
          int tot = 0;
          for (int k = 1; k <= n; ++k) {
            kappa.push_back(lam[k] + th[static_cast<std::size_t>(k - 1)]);
            tot += th[static_cast<std::size_t>(k - 1)];
          }
          kappa.push_back(rr - tot);
          if (!is_partition(kappa)) continue;
          const Partition kp(kappa);
          probe(r, "lambda=" + lam.to_string() + " kappa=" + kp.to_string(), [&] {
            const RatFunc dc = d_coeff(th, u);
            return dc == psi_coeff(kp, lam) && dc.is_zero() == !is_horizontal_strip(kp, lam);
          });
        }
      }
  });
}

CheckResult check_pieri_products(int max_weight, int max_len, int max_r, int max_total) {
  return timed("Pieri expansion against oracle products", [&](CheckResult& r) {
    for (const auto& lam : enumerate_partitions_up_to(max_weight, max_len))
      for (int rr = 0; rr <= max_r && lam.weight() + rr <= max_total; ++rr)
        probe(r, "lambda=" + lam.to_string() + " r=" + std::to_string(rr), [&] {
          const PieriExpansion e = pieri_expand(lam, rr);
          const SymFunc lhs = multiply_row(oracle_Q(lam), Basis::gprod, Family::macdonald, rr);
          SymFunc rhs(Basis::monomial, lam.weight() + rr);
          for (const auto& term : e.terms) rhs += oracle_Q(Partition(term.index)).scaled(term.coeff);
          return lhs == rhs;
        });
  });
}

// ---------------------------------------------------------------------- main

CheckResult check_steps(const std::string& side_name_, int max_weight, int max_len) {
  const StepSide side = parse_side(side_name_);
  return timed(std::string("single steps ") + side_name(side), [&](CheckResult& r) {
    for (const auto& lam : nonempty_up_to(max_weight, max_len))
      probe(r, "lambda=" + lam.to_string(), [&] {
        return step_resum(invert_step(lam.parts(), side), side) == step_lhs(lam.parts(), side);
      });
    if (side == StepSide::hl) {
      // the Hall-Littlewood oracle is the q = 0 value of the Macdonald one
      for (const auto& lam : nonempty_up_to(std::min(max_weight, 6), max_len))
        probe(r, "q=0 oracle lambda=" + lam.to_string(), [&] {
          return oracle_P(lam, Family::hall_littlewood) ==
                 oracle_P(lam).mapped([](const RatFunc& c) { return c.set_q(0); });
        });
    }
  });
}

CheckResult check_c_displays() {
  return timed("C_1 and C_2 displays", [&](CheckResult& r) {
    const RatFunc Q = RatFunc::q(), T = RatFunc::t(), ONE(1);
    auto c1 = [&](const RatFunc& u) { return (T - ONE) / (ONE - Q) * (ONE - Q * Q * u) / (ONE - Q * T * u); };
    auto c2 = [&](const RatFunc& u) {
      return (T - ONE) / (ONE - Q) * (T - Q) / (ONE - Q * Q) * (ONE - Q * u) / (ONE - Q * T * u) *
             (ONE - Q.pow(4) * u) / (ONE - Q * Q * T * u);
    };
    for (int k = 0; k <= 6; ++k)
      for (int j = 0; j <= 2; ++j) {
        const MonomialArg u(k, j);
        const RatFunc uu = RatFunc::from_monomial(u);
        probe(r, "C_1 at u=q^" + std::to_string(k) + "t^" + std::to_string(j),
              [&] { return c_coeff_qt({1}, {u}) == c1(uu); });
        probe(r, "C_2 at u=q^" + std::to_string(k) + "t^" + std::to_string(j),
              [&] { return c_coeff_qt({2}, {u}) == c2(uu); });
      }
    // the theta = 1, 2 terms of the n = 1 steps, u = q^{lambda_1 - lambda_2}
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; b <= a; ++b) {
        const auto terms = invert_step({a, b}, StepSide::q_g);
        for (const auto& term : terms) {
          if (term.theta.size() != 1 || term.theta[0] < 1 || term.theta[0] > 2) continue;
          const RatFunc u = RatFunc::from_monomial(MonomialArg(a - b, 0));
          probe(r, "step (" + std::to_string(a) + "," + std::to_string(b) + ") theta=" + std::to_string(term.theta[0]),
                [&] { return term.coeff == (term.theta[0] == 1 ? c1(u) : c2(u)); });
        }
      }
    // closed one-dimensional form
    for (int th = 0; th <= 5; ++th)
      for (auto [a, b] : {std::pair{1, 0}, {2, 0}, {1, 1}, {0, 1}, {3, 2}, {4, 1}}) {
        probe(r, "n=1 closed form theta=" + std::to_string(th), [&] {
          const RatFunc expected = T.pow(th) * qpoch(MonomialArg(0, -1), th) / qpoch(MonomialArg(1, 0), th) *
                                   qpoch(MonomialArg(a, b), th) / qpoch(MonomialArg(a + 1, b + 1), th) *
                                   (ONE - RatFunc::from_monomial(MonomialArg(2 * th + a, b))) /
                                   (ONE - RatFunc::from_monomial(MonomialArg(a, b)));
          return c_coeff_qt({th}, {MonomialArg(a, b)}) == expected && last_route_count() == 3;
        });
      }
  });
}

CheckResult check_full_expansions(const std::string& side_name_, int max_weight, bool full_mode) {
  const StepSide side = parse_side(side_name_);
  return timed(std::string("full expansions ") + side_name(side) + (full_mode ? " (all theta matrices)" : ""),
               [&](CheckResult& r) {
                 for (const auto& lam : nonempty_up_to(max_weight)) {
                   const FullExpansion e = expand_full(lam, side, full_mode);
                   probe(r, "lambda=" + lam.to_string(), [&] { return full_resum(e) == step_lhs(lam.parts(), side); });
                   if (full_mode) continue;
                   probe(r, "closed display lambda=" + lam.to_string(), [&] {
                     for (const auto& t : e.terms)
                       if (full_display_coeff(lam, t.theta, side) != t.coeff ||
                           full_display_index(lam, t.theta, side) != t.index)
                         return false;
                     return true;
                   });
                 }
               });
}

CheckResult check_omega_duality(int max_weight) {
  return timed("omega duality of full expansions", [&](CheckResult& r) {
    for (const auto& lam : nonempty_up_to(max_weight))
      probe(r, "lambda=" + lam.to_string(), [&] {
        const FullExpansion g = expand_full(lam, StepSide::q_g);
        const FullExpansion e = expand_full(lam.conjugate(), StepSide::p_e);
        if (g.terms.size() != e.terms.size()) return false;
        for (std::size_t i = 0; i < g.terms.size(); ++i)
          if (g.terms[i].theta != e.terms[i].theta || g.terms[i].index != e.terms[i].index ||
              g.terms[i].coeff != e.terms[i].coeff.swapped())
            return false;
        return true;
      });
  });
}

CheckResult check_inverse_link(std::uint64_t seed) {
  return timed("C and d are inverse matrices", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    for (int n = 1; n <= 2; ++n)
      for (int d = 0; d < 3; ++d) {
        // redraw points where some entry of the window has a pole
        for (int attempt = 0;; ++attempt) {
          const mpq_class q = draw_rational(rng), t = draw_rational(rng);
          if (q == 1 || q == -1 || t == 1 || t == -1) continue;
          std::vector<mpq_class> u;
          for (int i = 0; i < n; ++i) u.push_back(draw_rational(rng));
          int bad = 0;
          try {
            bad = inverse_link_violations(q, t, u, 3);
          } catch (const ArithmeticError&) {
            if (attempt < 100) continue;
            throw;
          }
          probe(r, "n=" + std::to_string(n) + " draw " + std::to_string(d), [&] { return bad == 0; });
          break;
        }
      }
  });
}

// ------------------------------------------------------------ specializations

CheckResult check_schur_values() {
  return timed("C at q = t", [&](CheckResult& r) {
    const std::vector<std::vector<MonomialArg>> us{
        {MonomialArg(0, 4, mpq_class(2, 3)), MonomialArg(0, 2, mpq_class(-5, 7)), MonomialArg(0, 1, mpq_class(11, 2))},
        {MonomialArg(0, 3, mpq_class(1, 5)), MonomialArg(0, 1, mpq_class(3, 2)), MonomialArg(0, 0, mpq_class(-4, 9))}};
    for (int n = 1; n <= 3; ++n)
      for (const auto& th : enumerate_theta(n, 3 * n)) {
        if (*std::max_element(th.begin(), th.end()) > 3) continue;
        for (const auto& u : us)
          probe(r, "theta=" + lam_str(th), [&] {
            schur_c_check(th, std::vector<MonomialArg>(u.begin(), u.begin() + n));
            return true;
          });
      }
  });
}

SymFunc jacobi_trudi(const Partition& lambda) {
  const int l = lambda.length();
  SymFunc out(Basis::gprod, lambda.weight(), Family::schur);
  std::vector<int> perm(static_cast<std::size_t>(l));
  std::vector<bool> used(static_cast<std::size_t>(l), false);
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int i) {
    if (i > l) {
      int inv = 0;
      for (int a = 0; a < l; ++a)
        for (int b = a + 1; b < l; ++b)
          if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inv;
      out.add(sorted_partition(idx), RatFunc(inv % 2 ? -1 : 1));
      return;
    }
    for (int j = 1; j <= l; ++j) {
      if (used[static_cast<std::size_t>(j - 1)]) continue;
      const int k = lambda[i] - i + j;
      if (k < 0) continue;
      used[static_cast<std::size_t>(j - 1)] = true;
      perm[static_cast<std::size_t>(i - 1)] = j;
      idx.push_back(k);
      rec(i + 1);
      idx.pop_back();
      used[static_cast<std::size_t>(j - 1)] = false;
    }
  };
  rec(1);
  return out;
}

CheckResult check_jacobi_trudi(int max_weight) {
  return timed("Schur expansion against Jacobi-Trudi", [&](CheckResult& r) {
    for (const auto& lam : nonempty_up_to(max_weight))
      probe(r, "lambda=" + lam.to_string(), [&] {
        const FullExpansion e = expand_full(lam, StepSide::schur);
        return product_sum(full_as_terms(e), Basis::gprod, Family::schur) == jacobi_trudi(lam);
      });
  });
}

CheckResult check_q_one(int max_weight, int max_part) {
  return timed("P_lambda(1,t) = e_{lambda'}", [&](CheckResult& r) {
    auto at_one = [](const RatFunc& c) { return c.set_q(1); };
    for (const auto& lam : nonempty_up_to(max_weight, -1, max_part)) {
      const Partition conj = lam.conjugate();
      const SymFunc e_conj = SymFunc::single(Basis::eprod, conj);
      probe(r, "oracle lambda=" + lam.to_string(),
            [&] { return oracle_P(lam).mapped(at_one) == to_monomial(e_conj); });
      probe(r, "e-expansion lambda=" + lam.to_string(), [&] {
        const FullExpansion e = expand_full(lam, StepSide::p_e);
        return product_sum(full_as_terms(e), Basis::eprod).mapped(at_one) == e_conj;
      });
    }
  });
}

CheckResult check_hl_limit(std::uint64_t seed, int t_values) {
  return timed("Hall-Littlewood C as q -> 0", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    std::vector<mpq_class> ts;
    while (static_cast<int>(ts.size()) < t_values) {
      const mpq_class v = draw_rational(rng);
      if (v != 1 && v != -1) ts.push_back(v);
    }
    for (int n = 1; n <= 3; ++n) {
      const int mtop = n == 3 ? 1 : 2;
      for (const auto& th : enumerate_theta(n, 3)) {
        std::vector<IntSeq> ms{IntSeq(static_cast<std::size_t>(n), 0)};
        for (int k = 0; k < n; ++k) {
          std::vector<IntSeq> next;
          for (const auto& m : ms)
            for (int v = 0; v <= mtop; ++v) {
              IntSeq mm = m;
              mm[static_cast<std::size_t>(k)] = v;
              next.push_back(mm);
            }
          ms = next;
        }
        for (const auto& m : ms) {
          // u_k = q^{n-k} t^{m_k + ... + m_n}
          std::vector<MonomialArg> u;
          for (int k = 0; k < n; ++k) {
            long tail = 0;
            for (int j = k; j < n; ++j) tail += m[static_cast<std::size_t>(j)];
            u.emplace_back(n - 1 - k, tail);
          }
          RatFunc hl, tq;
          bool regular = true;
          try {
            hl = c_coeff_hl(th, m);
          } catch (const ArithmeticError&) {
            regular = false;  // m_j + theta_j = 0: outside the domain of the closed form
          }
          if (!regular) continue;
          probe(r, "theta=" + lam_str(th) + " m=" + lam_str(m), [&] {
            tq = c_coeff_tq(th, u);
            for (const auto& t0 : ts)
              if (tq.set_t(t0).set_q(0) != RatFunc(hl.evaluate(0, t0))) return false;
            return true;
          });
        }
      }
    }
  });
}

CheckResult check_mono_closed_forms() {
  return timed("monomial C is the t = 1 Hall-Littlewood C", [&](CheckResult& r) {
    for (int n = 1; n <= 3; ++n)
      for (const auto& th : enumerate_theta(n, 4)) {
        if (*std::max_element(th.begin(), th.end()) > 3) continue;
        for (int a = 0; a <= 3; ++a) {
          IntSeq m(static_cast<std::size_t>(n));
          for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(k)] = (a + k) % 4;
          bool regular = true;
          RatFunc hl;
          try {
            hl = c_coeff_hl(th, m);
          } catch (const ArithmeticError&) {
            regular = false;
          }
          if (!regular) continue;
          probe(r, "theta=" + lam_str(th) + " m=" + lam_str(m),
                [&] { return hl.set_t(1) == RatFunc(c_coeff_mono(th, m)); });
        }
      }
  });
}

CheckResult check_fn_gn(std::uint64_t seed, int draws, int max_n) {
  return timed("F_n = G_n", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    for (int n = 1; n <= max_n; ++n)
      for (int d = 0; d < draws; ++d) {
        // redraw until the b_j and a_i are pairwise distinct
        std::vector<mpq_class> a, b;
        while (true) {
          a.clear();
          b.clear();
          for (int i = 0; i <= n; ++i) a.push_back(draw_rational(rng, 12));
          for (int i = 0; i < n; ++i) b.push_back(draw_rational(rng, 12));
          std::vector<mpq_class> all = a;
          all.insert(all.end(), b.begin(), b.end());
          std::sort(all.begin(), all.end());
          if (std::adjacent_find(all.begin(), all.end()) == all.end()) break;
        }
        probe(r, "n=" + std::to_string(n) + " draw " + std::to_string(d), [&] {
          const auto [f, g] = fn_gn(a, b);
          return f == g;
        });
      }
  });
}

CheckResult check_jack_limit() {
  return timed("Jack C as a limit", [&](CheckResult& r) {
    const std::vector<std::vector<std::pair<long, long>>> us{{{3, 1}}, {{3, 1}, {1, 0}}, {{5, 2}, {2, 1}, {0, 0}}};
    for (auto [p, rr] : {std::pair{1L, 1L}, {2L, 1L}, {1L, 2L}})
      for (const auto& u : us) {
        const int n = static_cast<int>(u.size());
        for (const auto& th : enumerate_theta(n, n == 3 ? 2 : 3))
          probe(r, "alpha=" + std::to_string(rr) + "/" + std::to_string(p) + " theta=" + lam_str(th), [&] {
            const auto [jack, curve] = jack_limit_pair(th, u, p, rr);
            return jack == curve;
          });
      }
  });
}

// --------------------------------------------------------------------- hooks

CheckResult check_hooks(int max_weight) {
  return timed("hook expansions", [&](CheckResult& r) {
    for (int rr = 1; rr <= max_weight; ++rr)
      for (int s = 0; rr + s <= max_weight; ++s) {
        const Partition lam = hook_shape(rr, s);
        const std::string tag = "(r,s)=(" + std::to_string(rr) + "," + std::to_string(s) + ")";
        const SymFunc det = kerov_det(rr, s);
        probe(r, tag + " determinant vs composition sum",
              [&] { return product_sum(hook_expand(rr, s, HookSide::q_g), Basis::gprod) == det; });
        probe(r, tag + " determinant vs oracle", [&] { return det == oracle_Q_gprod(lam); });
        probe(r, tag + " full expansion vs oracle",
              [&] { return full_resum(expand_full(lam, StepSide::q_g)) == oracle_Q(lam); });
        probe(r, tag + " e-side composition sum vs oracle", [&] {
          return to_monomial(product_sum(hook_expand(rr, s, HookSide::p_e), Basis::eprod)) == oracle_P(lam);
        });
        probe(r, tag + " omega", [&] {
          return same_terms(hook_expand(rr, s, HookSide::p_e), hook_expand(s + 1, rr - 1, HookSide::q_g), true);
        });
      }
  });
}

CheckResult check_hook_recurrence(int max_weight) {
  return timed("hook Pieri recurrence", [&](CheckResult& r) {
    for (int n = 1; n <= max_weight; ++n)
      probe(r, "column n=" + std::to_string(n), [&] {
        const auto col = column_expand(n);
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        return same_terms(col, hook_expand(1, n - 1, HookSide::q_g), false) &&
               to_monomial(product_sum(col, Basis::gprod)) == oracle_Q(Partition(ones));
      });
    for (int rr = 1; rr < max_weight; ++rr)
      for (int s = 1; rr + s <= max_weight; ++s)
        probe(r, "(r,s)=(" + std::to_string(rr) + "," + std::to_string(s) + ")", [&] {
          std::vector<ExpansionTerm> lhs;
          for (auto t : column_expand(s)) {
            t.index.push_back(rr);
            lhs.push_back(t);
          }
          SymFunc rhs =
              product_sum(hook_expand(rr + 1, s - 1, HookSide::q_g), Basis::gprod).scaled(hook_pieri_scalar(rr, s));
          rhs += product_sum(hook_expand(rr, s, HookSide::q_g), Basis::gprod);
          return product_sum(lhs, Basis::gprod) == rhs;
        });
  });
}

// ----------------------------------------------------------- integer sequences

CheckResult check_nonpartition_vanishing(int max_weight) {
  return timed("non-partition sequences vanish", [&](CheckResult& r) {
    std::set<IntSeq> seen;
    for (const auto& lam : nonempty_up_to(max_weight)) {
      for (int zeros = 0; zeros <= 1; ++zeros) {
        IntSeq s = lam.parts();
        s.resize(s.size() + static_cast<std::size_t>(zeros), 0);
        std::sort(s.begin(), s.end());
        do {
          if (is_partition(s) || !seen.insert(s).second) continue;
          probe(r, lam_str(s), [&] { return step_resum(invert_step(s, StepSide::q_g), StepSide::q_g).is_zero(); });
        } while (std::next_permutation(s.begin(), s.end()));
      }
    }
  });
}

CheckResult check_hl_sequences(int max_len) {
  return timed("Hall-Littlewood integer sequences", [&](CheckResult& r) {
    const RatFunc T = RatFunc::t(), ONE(1);
    probe(r, "Q_(1,2) = t Q_(2,1)", [&] { return hl_raising_Q({1, 2}) == hl_raising_Q({2, 1}).scaled(T); });

    // coefficient matrices of the pair, one factor per coordinate
    auto count_nonzero = [](const IntSeq& a, const IntSeq& b) {
      int c = 0;
      for (std::size_t i = 0; i < a.size(); ++i) c += a[i] != b[i];
      return c;
    };
    const EntryFn<RatFunc> f = [&](const IntSeq& m, const IntSeq& k) {
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] < k[i]) return RatFunc(0);
      return (ONE - T).pow(count_nonzero(m, k));
    };
    const EntryFn<RatFunc> g = [&](const IntSeq& k, const IntSeq& l) {
      int tot = 0;
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] < l[i]) return RatFunc(0);
        tot += k[i] - l[i];
      }
      return T.pow(tot) * (ONE - T.inverse()).pow(count_nonzero(k, l));
    };
    for (int n = 1; n <= max_len; ++n)
      for (const Window w : {Window{0, 4}, Window{-2, 3}})
        probe(r, "pair matrices n=" + std::to_string(n) + " lo=" + std::to_string(w.lo),
              [&] { return verify_entries(f, g, n, w).ok(); });

    // the pair on the raising-operator values
    std::vector<IntSeq> seqs{{}};
    for (int len = 1; len <= max_len; ++len) {
      std::vector<IntSeq> next;
      for (const auto& s : seqs)
        if (static_cast<int>(s.size()) == len - 1)
          for (int v = 0; v <= (len == 3 ? 2 : 3); ++v) {
            IntSeq ss = s;
            ss.push_back(v);
            next.push_back(ss);
          }
      seqs.insert(seqs.end(), next.begin(), next.end());
    }
    for (const auto& s : seqs) {
      if (s.empty()) continue;
      const int len = static_cast<int>(s.size());
      for (int rr = 0; rr <= 3 - (len == 3); ++rr)
        probe(r, "Q_" + lam_str(s) + " q_" + std::to_string(rr), [&] {
          SymFunc rhs(Basis::gprod, 0, Family::hall_littlewood);
          for (const auto& t : hl_pieri_expand(s, rr)) rhs += hl_raising_Q(t.index).scaled(t.coeff);
          return times_row(hl_raising_Q(s), rr) == rhs;
        });
      if (len >= 2)
        probe(r, "recurrence " + lam_str(s), [&] {
          SymFunc rhs(Basis::gprod, 0, Family::hall_littlewood);
          for (const auto& t : hl_recurrence(s)) {
            const IntSeq rho(t.index.begin() + 1, t.index.end());
            rhs += times_row(hl_raising_Q(rho), t.index[0]).scaled(t.coeff);
          }
          return hl_raising_Q(s) == rhs;
        });
    }
  });
}

// --------------------------------------------------------------------- suites

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"inversions", "pieri", "main", "specializations", "hook", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, int max_weight, std::uint64_t seed) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw ParameterError("unknown suite '" + suite + "'");
  const bool all = suite == "all";
  const int w = max_weight;
  std::vector<CheckResult> out;
  if (all || suite == "inversions") {
    for (auto& c : check_inverse_pairs(seed, 20, 3, 3)) out.push_back(std::move(c));
    out.push_back(check_inversion_structure(seed));
  }
  if (all || suite == "pieri") {
    out.push_back(check_pieri_coefficients(w, 3, 4));
    out.push_back(check_pieri_products(w, 3, 4, w));
  }
  if (all || suite == "main") {
    out.push_back(check_steps("Q-g", w, 4));
    out.push_back(check_steps("P-e", w, -1));
    out.push_back(check_c_displays());
    out.push_back(check_full_expansions("Q-g", w, false));
    out.push_back(check_full_expansions("P-e", w, false));
    out.push_back(check_full_expansions("Q-g", std::min(w, 6), true));
    out.push_back(check_omega_duality(w));
    out.push_back(check_inverse_link(seed));
    out.push_back(check_nonpartition_vanishing(std::min(w, 5)));
    out.push_back(check_hl_sequences(3));
  }
  if (all || suite == "specializations") {
    out.push_back(check_schur_values());
    out.push_back(check_jacobi_trudi(w));
    out.push_back(check_q_one(w, 4));
    for (const char* side : {"hl", "mono", "schur", "jack-Q", "jack-P"}) {
      const bool jack = std::string(side).rfind("jack", 0) == 0;
      out.push_back(check_steps(side, jack ? std::min(w, 7) : w, -1));
    }
    for (const char* side : {"hl", "mono", "schur"}) out.push_back(check_full_expansions(side, w, false));
    out.push_back(check_hl_limit(seed, 10));
    out.push_back(check_mono_closed_forms());
    out.push_back(check_fn_gn(seed, 50, 4));
    out.push_back(check_jack_limit());
  }
  if (all || suite == "hook") {
    out.push_back(check_hooks(w));
    out.push_back(check_hook_recurrence(w));
  }
  return out;
}

nlohmann::ordered_json check_report_json(const std::string& suite, int max_weight, std::uint64_t seed,
                                         const std::vector<CheckResult>& results) {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["max_weight"] = max_weight;
  j["seed"] = seed;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    checks.push_back({{"name", r.name}, {"checked", r.checked}, {"failed", r.failures.size()}});
    for (const auto& f : r.failures) violations.push_back({{"check", r.name}, {"detail", f}});
  }
  j["checks"] = checks;
  j["violations"] = violations;
  return j;
}

}  // namespace macpieri
