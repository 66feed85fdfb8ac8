#include "macpieri/pieri.hpp"

#include <numeric>

#include "macpieri/errors.hpp"
#include "macpieri/factored.hpp"

namespace macpieri {

namespace {

// Generic symbols u_1..u_n for one formula instance.
struct Symbols {
  std::size_t n;
  GMono u(std::size_t i, int p = 1) const { return GMono::symbol(n, i, p); }  // 0-based
  static GMono qt(long a, long b) { return GMono(a, b); }
};

Factored qp(const GMono& m, long k) { return Factored::qpoch(1, m, k); }

int total(const ThetaVector& th) { return std::accumulate(th.begin(), th.end(), 0); }

void check_args(const ThetaVector& theta, const std::vector<MonomialArg>& u) {
  if (theta.size() != u.size()) throw ParameterError("theta and u must have the same length");
  for (int x : theta)
    if (x < 0) throw ParameterError("theta entries are nonnegative");
}

Factored d_four_ratio_generic(const ThetaVector& th) {
  const std::size_t n = th.size();
  const Symbols s{n};
  const long T = total(th);
  Factored f = Factored::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    f *= qp(GMono(0, 1), th[k]) / qp(GMono(1, 0), th[k]);
    f *= qp(GMono(T + 1, 0) * s.u(k), th[k]) / qp(GMono(T, 1) * s.u(k), th[k]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const GMono ratio = s.u(i) * s.u(j, -1);
      f *= qp(GMono(0, 1) * ratio, th[i]) / qp(GMono(1, 0) * ratio, th[i]);
      f *= qp(GMono(1 - th[j], -1) * ratio, th[i]) / qp(GMono(-th[j], 0) * ratio, th[i]);
    }
  return f;
}

Factored d_compact_generic(const ThetaVector& th) {
  const std::size_t n = th.size();
  const Symbols s{n};
  // extended data: u_{n+1} = 1/t, theta_{n+1} = -|theta|
  std::vector<GMono> u, v;
  for (std::size_t k = 0; k < n; ++k) {
    u.push_back(s.u(k));
    v.push_back(GMono(th[k], 0) * s.u(k));
  }
  u.push_back(GMono(0, -1));
  v.push_back(GMono(-total(th), -1));
  Factored f = Factored::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const GMono ratio = u[i] * u[j].inverse();
      f *= qp(GMono(0, 1) * ratio, th[i]) / qp(GMono(1, 0) * ratio, th[i]);
    }
    for (std::size_t j = i + 1; j <= n; ++j) {
      const GMono ratio = u[i] * v[j].inverse();
      f *= qp(GMono(1, -1) * ratio, th[i]) / qp(ratio, th[i]);
    }
  }
  return f;
}

std::vector<ThetaVector> thetas_up_to(std::size_t n, int bound) { return enumerate_theta(static_cast<int>(n), bound); }

RatFunc w_ratio(long theta, long qe, long te) {
  // w_theta(q^qe t^te) = (t u; q)_theta / (q u; q)_theta
  return qpoch(MonomialArg(qe, te + 1), theta) / qpoch(MonomialArg(qe + 1, te), theta);
}

}  // namespace

RatFunc d_coeff_four_ratio(const ThetaVector& theta, const std::vector<MonomialArg>& u) {
  check_args(theta, u);
  return specialize(d_four_ratio_generic(theta), Specialization::at(u));
}

RatFunc d_coeff_compact(const ThetaVector& theta, const std::vector<MonomialArg>& u) {
  check_args(theta, u);
  return specialize(d_compact_generic(theta), Specialization::at(u));
}

RatFunc d_coeff(const ThetaVector& theta, const std::vector<MonomialArg>& u) {
  const RatFunc a = d_coeff_four_ratio(theta, u);
  const RatFunc b = d_coeff_compact(theta, u);
  if (a != b) throw ConsistencyError("the two forms of the Pieri coefficient disagree at theta = (" + seq_to_string(theta) + ")");
  return a;
}

RatFunc d_coeff_at(const ThetaVector& theta, const Specialization& s) {
  const RatFunc a = specialize(d_four_ratio_generic(theta), s);
  const RatFunc b = specialize(d_compact_generic(theta), s);
  if (a != b) throw ConsistencyError("the two forms of the Pieri coefficient disagree at theta = (" + seq_to_string(theta) + ")");
  return a;
}

RatFunc psi_coeff(const Partition& kappa, const Partition& lambda) {
  if (!is_horizontal_strip(kappa, lambda)) return RatFunc(0);
  const int n = std::max(lambda.length(), kappa.length() - 1);
  RatFunc psi(1);
  for (int i = 1; i <= n; ++i) {
    const int th = kappa[i] - lambda[i];
    if (th == 0) continue;
    for (int j = i; j <= n; ++j)
      psi *= w_ratio(th, lambda[i] - lambda[j], j - i) / w_ratio(th, lambda[i] - kappa[j + 1], j - i);
  }
  return psi;
}

PieriExpansion pieri_expand(const Partition& lambda, int r, bool raw) {
  if (r < 0) throw ParameterError("the row length r must be nonnegative");
  PieriExpansion out;
  out.lambda = lambda;
  out.r = r;
  const int n = lambda.length();
  std::vector<MonomialArg> u;
  for (int k = 1; k <= n; ++k) u.emplace_back(lambda[k] - r, n - k);
  for (const auto& th : thetas_up_to(static_cast<std::size_t>(n), r)) {
    IntSeq kappa;
    for (int k = 1; k <= n; ++k) kappa.push_back(lambda[k] + th[static_cast<std::size_t>(k - 1)]);
    kappa.push_back(r - total(th));
    if (!raw && !is_partition(kappa)) continue;
    RatFunc c = d_coeff(th, u);
    if (c.is_zero()) continue;
    out.terms.push_back({kappa, c, th});
  }
  return out;
}

std::vector<ExpansionTerm> hl_pieri_expand(const IntSeq& lambda, int r) {
  if (r < 0) throw ParameterError("the row length r must be nonnegative");
  std::vector<ExpansionTerm> out;
  const RatFunc step = RatFunc(1) - RatFunc::t();
  for (const auto& th : thetas_up_to(lambda.size(), r)) {
    IntSeq kappa = lambda;
    int nz = 0;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
      kappa[k] += th[k];
      nz += th[k] != 0;
    }
    kappa.push_back(r - total(th));
    out.push_back({kappa, step.pow(nz), th});
  }
  return out;
}

std::vector<ExpansionTerm> hl_recurrence(const IntSeq& lambda) {
  if (lambda.empty()) throw ParameterError("the recurrence needs a nonempty sequence");
  std::vector<ExpansionTerm> out;
  const std::size_t n = lambda.size() - 1;
  const int last = lambda.back();
  if (last < 0) return out;
  const RatFunc t = RatFunc::t();
  const RatFunc step = RatFunc(1) - t.inverse();
  for (const auto& th : thetas_up_to(n, last)) {
    IntSeq idx{last - total(th)};
    int nz = 0;
    for (std::size_t k = 0; k < n; ++k) {
      idx.push_back(lambda[k] + th[k]);
      nz += th[k] != 0;
    }
    out.push_back({idx, t.pow(total(th)) * step.pow(nz), th});
  }
  return out;
}

}  // namespace macpieri
