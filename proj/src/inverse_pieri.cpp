#include "macpieri/inverse_pieri.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "macpieri/errors.hpp"
#include "macpieri/oracle.hpp"
#include "macpieri/pieri.hpp"

namespace macpieri {

namespace {

int total(const ThetaVector& th) { return std::accumulate(th.begin(), th.end(), 0); }

long binom2(long k) { return k * (k - 1) / 2; }

Factored qp(const GMono& m, long k) { return Factored::qpoch(1, m, k); }
Factored diff(const GMono& a, const GMono& b) { return Factored::difference(1, a, 1, b); }
Factored one_minus(const GMono& m) { return Factored::one_minus(1, m); }
Factored mono(const mpq_class& c, long qe, long te) { return Factored::monomial(c, GMono(qe, te)); }

const GMono kQ(1, 0), kT(0, 1), kInvT(0, -1);

struct QSymbols {
  std::size_t n;
  ThetaVector th;
  GMono u(std::size_t k) const { return k == n ? kInvT : GMono::symbol(n, k); }  // u_{n+1} = 1/t
  GMono v(std::size_t k) const { return GMono(th[k], 0) * GMono::symbol(n, k); }
};

Factored pair_products(const QSymbols& s, std::size_t upper) {
  Factored f = Factored::constant(1);
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = i + 1; j < upper; ++j) {
      const GMono r = s.u(i) * s.u(j).inverse();
      f *= qp(kQ * kInvT * r, s.th[i]) / qp(kQ * r, s.th[i]);
    }
  return f;
}

Factored uv_products(const QSymbols& s, bool diagonal) {
  Factored f = Factored::constant(1);
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = diagonal ? i : i + 1; j < s.n; ++j) {
      const GMono r = s.u(i) * s.v(j).inverse();
      f *= qp(kT * r, s.th[i]) / qp(r, s.th[i]);
    }
  return f;
}

std::vector<Factored> det_route(const QSymbols& s) {
  const std::size_t n = s.n;
  Factored pre = pair_products(s, n) * uv_products(s, false);
  for (std::size_t k = 0; k < n; ++k) {
    const long th = s.th[k];
    pre *= mono(1, 0, th) * qp(kQ * kInvT, th) / qp(kQ, th);
    pre *= qp(kQ * s.u(k), th) / qp(kQ * kT * s.u(k), th);
  }
  std::vector<Factored> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    // A row with theta_i = 0 contributes u_i - v_i = 0 to its R_i.
    bool skip = false;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i & 1u) && s.th[i] == 0) skip = true;
    if (skip) continue;
    Factored f = pre;
    std::vector<GMono> w(n);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = s.v(i);
      if (!(mask >> i & 1u)) continue;
      w[i] = kInvT * s.v(i);
      f *= mono(-1, 0, static_cast<long>(n) - 1);
      f *= one_minus(kT * s.v(i)) / one_minus(s.v(i));
      for (std::size_t k = 0; k < n; ++k) f *= diff(s.u(k), s.v(i)) / diff(kT * s.u(k), s.v(i));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) f *= diff(w[i], w[j]) / diff(s.v(i), s.v(j));
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Factored> subset_route(const QSymbols& s) {
  const std::size_t n = s.n;
  const Factored pre = pair_products(s, n + 1) * uv_products(s, true);
  std::vector<Factored> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool skip = false;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i & 1u) && s.th[i] == 0) skip = true;
    if (skip) continue;
    const long size = std::popcount(mask);
    Factored f = pre * mono(size % 2 ? -1 : 1, 0, -binom2(size + 1));
    for (std::size_t k = 0; k < n; ++k) {
      if (!(mask >> k & 1u)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!(mask >> j & 1u)) f *= diff(s.v(j), kInvT * s.v(k)) / diff(s.v(j), s.v(k));
      for (std::size_t i = 0; i <= n; ++i) f *= diff(s.u(i), s.v(k)) / diff(s.u(i), kInvT * s.v(k));
    }
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Factored> reduced_route(const QSymbols& s) {
  const std::size_t n = s.n;
  std::vector<std::size_t> T;
  for (std::size_t k = 0; k < n; ++k)
    if (s.th[k] != 0) T.push_back(k);
  Factored pre = pair_products(s, n) * uv_products(s, false);
  for (std::size_t k : T) {
    const long th = s.th[k];
    pre *= mono(1, 0, th - 1) * qp(kQ * kInvT, th - 1) / qp(kQ, th - 1);
    pre *= qp(kQ * s.u(k), th) / qp(kQ * kT * s.u(k), th);
  }
  std::vector<Factored> out;
  const std::size_t m = T.size();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    const long size = std::popcount(mask);
    Factored f = pre * mono(size % 2 ? -1 : 1, 0, -binom2(size));
    for (std::size_t a = 0; a < m; ++a) {
      const std::size_t j = T[a];
      if (mask >> a & 1u) continue;
      f *= Factored::difference(1, kT, 1, GMono(s.th[j], 0)) / one_minus(GMono(s.th[j], 0));
    }
    for (std::size_t a = 0; a < m; ++a) {
      if (!(mask >> a & 1u)) continue;
      const std::size_t k = T[a];
      for (std::size_t b = 0; b < m; ++b)
        if (!(mask >> b & 1u)) f *= diff(s.v(T[b]), kInvT * s.v(k)) / diff(s.v(T[b]), s.v(k));
      f *= one_minus(kT * s.v(k)) / one_minus(s.v(k));
      for (std::size_t i : T)
        if (i != k) f *= diff(s.u(i), s.v(k)) / diff(s.u(i), kInvT * s.v(k));
    }
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

std::mutex route_mutex;
thread_local int route_count = 0;

void check_theta(const ThetaVector& th) {
  for (int x : th)
    if (x < 0) throw ParameterError("theta entries are nonnegative");
}

}  // namespace

const char* flavor_name(CFlavor f) {
  switch (f) {
    case CFlavor::qt: return "qt";
    case CFlavor::tq: return "tq";
    case CFlavor::hl: return "hl";
    case CFlavor::mono: return "mono";
    case CFlavor::jack: return "jack";
  }
  return "?";
}

const CRouteTerms& c_route_terms(const ThetaVector& theta) {
  check_theta(theta);
  static std::map<ThetaVector, CRouteTerms> cache;
  std::lock_guard<std::mutex> lock(route_mutex);
  auto it = cache.find(theta);
  if (it != cache.end()) return it->second;
  const QSymbols s{theta.size(), theta};
  CRouteTerms r{det_route(s), subset_route(s), reduced_route(s)};
  return cache.emplace(theta, std::move(r)).first->second;
}

int last_route_count() { return route_count; }

RatFunc c_coeff_at(const ThetaVector& theta, const Specialization& s) {
  if (s.u.size() != theta.size()) throw ParameterError("theta and u must have the same length");
  const CRouteTerms& r = c_route_terms(theta);
  std::vector<RatFunc> values;
  for (const auto* terms : {&r.det, &r.subset, &r.reduced}) {
    try {
      values.push_back(specialize_sum(*terms, s));
    } catch (const ArithmeticError&) {
      // this route has a removable singularity at the point; the others decide
    }
  }
  route_count = static_cast<int>(values.size());
  if (values.empty()) throw ArithmeticError("every route of C_(" + seq_to_string(theta) + ") is singular here");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] != values[0])
      throw ConsistencyError("routes for C_(" + seq_to_string(theta) + ") disagree: " + values[0].to_string() + " vs " +
                             values[i].to_string());
  return values[0];
}

RatFunc c_coeff_qt(const ThetaVector& theta, const std::vector<MonomialArg>& u) {
  return c_coeff_at(theta, Specialization::at(u));
}

RatFunc c_coeff_tq(const ThetaVector& theta, const std::vector<MonomialArg>& u) {
  return c_coeff_at(theta, Specialization::swapped_at(u));
}

RatFunc c_coeff_hl(const ThetaVector& theta, const IntSeq& m) {
  check_theta(theta);
  if (theta.size() != m.size()) throw ParameterError("theta and m must have the same length");
  const std::size_t n = theta.size();
  const RatFunc one(1), t = RatFunc::t();
  RatFunc pre(total(theta) % 2 ? -1 : 1);
  for (std::size_t k = 0; k < n; ++k) {
    pre *= t.pow(binom2(theta[k]));
    for (int i = 0; i < theta[k]; ++i)  // t-binomial, base t
      pre *= (one - RatFunc::from_monomial(MonomialArg(0, m[k] + 1 + i))) / (one - t.pow(i + 1));
  }
  RatFunc bracket = one;
  for (std::size_t k = 0; k < n; ++k) {
    RatFunc prod = one;
    for (std::size_t j = k; j < n && !prod.is_zero(); ++j) {
      if (theta[j] == 0) {
        prod = RatFunc(0);
        break;
      }
      if (m[j] + theta[j] == 0) throw ArithmeticError("C^(t) has a vanishing denominator at m_j + theta_j = 0");
      prod *= (t.pow(theta[j]) - one) / (one - RatFunc::from_monomial(MonomialArg(0, -m[j] - theta[j])));
    }
    bracket += prod;
  }
  return pre * bracket;
}

mpq_class c_coeff_mono(const ThetaVector& theta, const IntSeq& m) {
  check_theta(theta);
  if (theta.size() != m.size()) throw ParameterError("theta and m must have the same length");
  const std::size_t n = theta.size();
  mpq_class pre = total(theta) % 2 ? -1 : 1;
  for (std::size_t k = 0; k < n; ++k)
    for (int i = 1; i <= theta[k]; ++i) pre *= mpq_class(m[k] + i) / i;
  mpq_class bracket = 1;
  for (std::size_t k = 0; k < n; ++k) {
    mpq_class prod = 1;
    for (std::size_t j = k; j < n; ++j) {
      if (theta[j] == 0) {
        prod = 0;
        break;
      }
      if (m[j] + theta[j] == 0) throw ArithmeticError("C has a vanishing denominator at m_j + theta_j = 0");
      prod *= mpq_class(theta[j]) / (m[j] + theta[j]);
    }
    bracket += prod;
  }
  return pre * bracket;
}

namespace {

struct JSymbols {
  std::size_t n;
  ThetaVector th;
  LinForm c(long x) const { return LinForm::constant(x, n); }
  LinForm a() const { return LinForm::a(n); }
  LinForm u(std::size_t k) const { return k == n ? c(0) - a() : LinForm::u(k, n); }  // u_{n+1} = -a
  LinForm v(std::size_t k) const { return LinForm::u(k, n) + th[k]; }
};

LinFactored lf(const LinForm& l) { return LinFactored::form(l); }
LinFactored rising(const LinForm& l, long k) { return LinFactored::rising(l, k); }

LinFactored jack_pair_products(const JSymbols& s, std::size_t upper, bool diagonal) {
  LinFactored f = LinFactored::constant(1);
  for (std::size_t i = 0; i < s.n; ++i) {
    for (std::size_t j = i + 1; j < upper; ++j) {
      const LinForm d = s.u(i) - s.u(j) + 1;
      f *= rising(d - s.a(), s.th[i]) / rising(d, s.th[i]);
    }
    for (std::size_t j = diagonal ? i : i + 1; j < s.n; ++j) {
      const LinForm d = s.u(i) - s.v(j);
      f *= rising(d + s.a(), s.th[i]) / rising(d, s.th[i]);
    }
  }
  return f;
}

}  // namespace

std::vector<LinFactored> jack_det_terms(const ThetaVector& theta) {
  check_theta(theta);
  const std::size_t n = theta.size();
  const JSymbols s{n, theta};
  LinFactored pre = jack_pair_products(s, n, false);
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class fact = 1;
    for (int i = 2; i <= theta[k]; ++i) fact *= i;
    pre *= rising(s.c(1) - s.a(), theta[k]) / LinFactored::constant(mpq_class(fact));
    pre *= rising(s.u(k) + 1, theta[k]) / rising(s.u(k) + s.a() + 1, theta[k]);
  }
  std::vector<LinFactored> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool skip = false;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i & 1u) && theta[i] == 0) skip = true;
    if (skip) continue;
    LinFactored f = pre;
    std::vector<LinForm> w(n);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = s.v(i);
      if (!(mask >> i & 1u)) continue;
      w[i] = s.v(i) - s.a();
      f = -f;
      f *= lf(s.v(i) + s.a()) / lf(s.v(i));
      for (std::size_t k = 0; k < n; ++k) f *= lf(s.v(i) - s.u(k)) / lf(s.v(i) - s.u(k) - s.a());
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) f *= lf(w[i] - w[j]) / lf(s.v(i) - s.v(j));
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<LinFactored> jack_subset_terms(const ThetaVector& theta) {
  check_theta(theta);
  const std::size_t n = theta.size();
  const JSymbols s{n, theta};
  const LinFactored pre = jack_pair_products(s, n + 1, true);
  std::vector<LinFactored> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool skip = false;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i & 1u) && theta[i] == 0) skip = true;
    if (skip) continue;
    LinFactored f = std::popcount(mask) % 2 ? -pre : pre;
    for (std::size_t k = 0; k < n; ++k) {
      if (!(mask >> k & 1u)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!(mask >> j & 1u)) f *= lf(s.v(k) - s.v(j) - s.a()) / lf(s.v(k) - s.v(j));
      for (std::size_t i = 0; i <= n; ++i) f *= lf(s.v(k) - s.u(i)) / lf(s.v(k) - s.u(i) - s.a());
    }
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

RatFunc c_coeff_jack(const ThetaVector& theta, const JackSpecialization& s) {
  if (s.u.size() != theta.size()) throw ParameterError("theta and u must have the same length");
  static std::map<ThetaVector, std::pair<std::vector<LinFactored>, std::vector<LinFactored>>> cache;
  static std::mutex m;
  const std::pair<std::vector<LinFactored>, std::vector<LinFactored>>* terms;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(theta);
    if (it == cache.end()) it = cache.emplace(theta, std::make_pair(jack_det_terms(theta), jack_subset_terms(theta))).first;
    terms = &it->second;
  }
  std::vector<RatFunc> values;
  for (const auto* list : {&terms->first, &terms->second}) {
    try {
      values.push_back(specialize_sum(*list, s));
    } catch (const ArithmeticError&) {
    }
  }
  if (values.empty()) throw ArithmeticError("both routes of C^(a)_(" + seq_to_string(theta) + ") are singular here");
  if (values.size() == 2 && values[0] != values[1])
    throw ConsistencyError("Jack routes disagree at theta = (" + seq_to_string(theta) + ")");
  return values[0];
}

RatFunc c_coeff(CFlavor flavor, const ThetaVector& theta, const CArgs& args) {
  switch (flavor) {
    case CFlavor::qt: return c_coeff_qt(theta, args.u);
    case CFlavor::tq: return c_coeff_tq(theta, args.u);
    case CFlavor::hl: return c_coeff_hl(theta, args.m);
    case CFlavor::mono: return RatFunc(c_coeff_mono(theta, args.m));
    case CFlavor::jack: return c_coeff_jack(theta, args.jack);
  }
  throw ParameterError("unknown flavor");
}

RatFunc schur_c_check(const ThetaVector& theta, const std::vector<MonomialArg>& u) {
  Specialization s;
  s.q = {0, 1, 1};
  s.t = {0, 1, 1};
  for (const auto& x : u) s.u.push_back({0, x.qexp + x.texp, x.scale});
  const RatFunc value = c_coeff_at(theta, s);
  const bool binary = std::all_of(theta.begin(), theta.end(), [](int x) { return x <= 1; });
  const RatFunc expected = binary ? RatFunc(total(theta) % 2 ? -1 : 1) : RatFunc(0);
  if (value != expected)
    throw ConsistencyError("C at q = t for theta = (" + seq_to_string(theta) + ") is " + value.to_string() + ", expected " +
                           expected.to_string());
  return value;
}

std::pair<mpq_class, mpq_class> jack_limit_pair(const ThetaVector& theta, const std::vector<std::pair<long, long>>& u,
                                                long p, long r) {
  if (p <= 0 || r <= 0) throw ParameterError("curve exponents must be positive");
  JackSpecialization js;
  js.mode = JackSpecialization::AMode::alpha;
  for (const auto& [x, y] : u) js.u.emplace_back(mpq_class(x), mpq_class(y));
  mpq_class a(r, p);
  a.canonicalize();
  const mpq_class jack = c_coeff_jack(theta, js).evaluate(a);
  Specialization s;
  s.target = VarSet::x;
  s.q = {p, 0, 1};
  s.t = {r, 0, 1};
  for (const auto& [x, y] : u) s.u.push_back({p * x + r * y, 0, 1});
  const mpq_class curve = c_coeff_at(theta, s).evaluate(1);
  return {jack, curve};
}

const char* side_name(StepSide s) {
  switch (s) {
    case StepSide::q_g: return "Q-g";
    case StepSide::p_e: return "P-e";
    case StepSide::hl: return "hl";
    case StepSide::mono: return "mono";
    case StepSide::jack_q: return "jack-Q";
    case StepSide::jack_p: return "jack-P";
    case StepSide::schur: return "schur";
  }
  return "?";
}

StepSide parse_side(const std::string& name) {
  for (StepSide s : {StepSide::q_g, StepSide::p_e, StepSide::hl, StepSide::mono, StepSide::jack_q, StepSide::jack_p,
                     StepSide::schur})
    if (name == side_name(s)) return s;
  throw ParameterError("unknown side '" + name + "'");
}

bool is_g_side(StepSide s) { return s == StepSide::q_g || s == StepSide::jack_q || s == StepSide::schur; }

Family side_family(StepSide s) {
  switch (s) {
    case StepSide::q_g:
    case StepSide::p_e: return Family::macdonald;
    case StepSide::hl: return Family::hall_littlewood;
    case StepSide::jack_q:
    case StepSide::jack_p: return Family::jack;
    case StepSide::mono:
    case StepSide::schur: return Family::schur;
  }
  return Family::macdonald;
}

namespace {

RatFunc g_step_coeff(const IntSeq& lambda, const ThetaVector& th, StepSide side) {
  const std::size_t n = th.size();
  const int last = lambda[n];
  switch (side) {
    case StepSide::q_g: {
      std::vector<MonomialArg> u;
      for (std::size_t k = 0; k < n; ++k) u.emplace_back(lambda[k] - last, static_cast<long>(n - k - 1));
      return c_coeff_qt(th, u);
    }
    case StepSide::jack_q: {
      JackSpecialization js;
      js.mode = JackSpecialization::AMode::inverse_alpha;
      for (std::size_t k = 0; k < n; ++k) js.u.emplace_back(mpq_class(lambda[k] - last), mpq_class(static_cast<long>(n - k - 1)));
      return c_coeff_jack(th, js);
    }
    case StepSide::schur:
      if (std::any_of(th.begin(), th.end(), [](int x) { return x > 1; })) return RatFunc(0);
      return RatFunc(total(th) % 2 ? -1 : 1);
    default: throw ParameterError("not a g-type side");
  }
}

RatFunc e_step_coeff(const IntSeq& m, const ThetaVector& th, StepSide side) {
  const std::size_t n = th.size();
  std::vector<long> M(n + 1, 0);
  for (std::size_t k = n; k-- > 0;) M[k] = M[k + 1] + m[k];
  IntSeq head(m.begin(), m.begin() + static_cast<long>(n));
  switch (side) {
    case StepSide::p_e: {
      std::vector<MonomialArg> u;
      for (std::size_t k = 0; k < n; ++k) u.emplace_back(static_cast<long>(n - k - 1), M[k]);
      return c_coeff_tq(th, u);
    }
    case StepSide::hl: return c_coeff_hl(th, head);
    case StepSide::mono: return RatFunc(c_coeff_mono(th, head));
    case StepSide::jack_p: {
      JackSpecialization js;
      js.mode = JackSpecialization::AMode::alpha;
      for (std::size_t k = 0; k < n; ++k) js.u.emplace_back(mpq_class(M[k]), mpq_class(static_cast<long>(n - k - 1)));
      return c_coeff_jack(th, js);
    }
    default: throw ParameterError("not an e-type side");
  }
}

IntSeq multiplicities_of(const Partition& p) { return p.multiplicities(); }

}  // namespace

std::vector<ExpansionTerm> invert_step_mult(const IntSeq& m, StepSide side) {
  if (is_g_side(side)) throw ParameterError("multiplicity steps belong to the e-type sides");
  std::vector<ExpansionTerm> out;
  if (m.empty()) {
    out.push_back({{0}, RatFunc(1), {}});
    return out;
  }
  const std::size_t n = m.size() - 1;
  const int last = m[n];
  if (n == 0) {
    if (last >= 0) out.push_back({{last}, RatFunc(1), {}});
    return out;
  }
  if (last < 0) return out;
  for (const auto& th : enumerate_theta(static_cast<int>(n), last)) {
    RatFunc c = e_step_coeff(m, th, side);
    if (c.is_zero()) continue;
    IntSeq idx{last - total(th)};
    for (std::size_t k = 0; k + 1 < n; ++k) idx.push_back(m[k] + th[k] - th[k + 1]);
    idx.push_back(m[n - 1] + last + th[n - 1]);
    out.push_back({idx, c, th});
  }
  return out;
}

std::vector<ExpansionTerm> invert_step(const IntSeq& lambda, StepSide side) {
  std::vector<ExpansionTerm> out;
  if (!is_g_side(side)) {
    if (!is_partition(lambda)) throw ParameterError("e-type steps need a partition");
    const Partition p = sorted_partition(lambda);
    for (auto& term : invert_step_mult(multiplicities_of(p), side)) {
      IntSeq mult(term.index.begin() + 1, term.index.end());
      // negative multiplicities describe no partition; those polynomials vanish
      if (std::any_of(mult.begin(), mult.end(), [](int x) { return x < 0; })) continue;
      IntSeq idx{term.index[0]};
      const Partition mu = Partition::from_multiplicities(mult);
      for (int x : mu.parts()) idx.push_back(x);
      out.push_back({idx, term.coeff, term.theta});
    }
    return out;
  }
  if (lambda.empty()) {
    out.push_back({{0}, RatFunc(1), {}});
    return out;
  }
  const std::size_t n = lambda.size() - 1;
  const int last = lambda[n];
  if (last < 0) return out;
  if (n == 0) {
    out.push_back({{last}, RatFunc(1), {}});
    return out;
  }
  for (const auto& th : enumerate_theta(static_cast<int>(n), last)) {
    RatFunc c = g_step_coeff(lambda, th, side);
    if (c.is_zero()) continue;
    IntSeq idx{last - total(th)};
    for (std::size_t k = 0; k < n; ++k) idx.push_back(lambda[k] + th[k]);
    out.push_back({idx, c, th});
  }
  return out;
}

namespace {

SymFunc side_polynomial(const Partition& p, StepSide side) {
  switch (side) {
    case StepSide::q_g: return oracle_Q(p, Family::macdonald);
    case StepSide::jack_q: return oracle_Q(p, Family::jack);
    case StepSide::mono: return SymFunc::single(Basis::monomial, p);
    default: return oracle_P(p, side_family(side));
  }
}

}  // namespace

SymFunc step_lhs(const IntSeq& lambda, StepSide side) {
  if (!is_partition(lambda)) return SymFunc(Basis::monomial, 0);
  return side_polynomial(sorted_partition(lambda), side);
}

SymFunc step_resum(const std::vector<ExpansionTerm>& terms, StepSide side) {
  SymFunc out(Basis::monomial, 0);
  const Basis row = is_g_side(side) ? Basis::gprod : Basis::eprod;
  for (const auto& term : terms) {
    IntSeq rest(term.index.begin() + 1, term.index.end());
    if (!is_partition(rest)) continue;
    const SymFunc x = side_polynomial(sorted_partition(rest), side);
    out += multiply_row(x, row, side_family(side), term.index[0]).scaled(term.coeff);
  }
  return out;
}

FullExpansion expand_full(const Partition& lambda, StepSide side, bool full) {
  if (full && !(side == StepSide::q_g || side == StepSide::p_e || side == StepSide::schur))
    throw ParameterError("full-mode expansion is defined for the Q-g, P-e and schur sides");
  FullExpansion out;
  out.lambda = lambda;
  out.side = side;
  out.full = full;
  const bool g = is_g_side(side);
  const int N = g ? lambda.length() : lambda.largest();
  if (N == 0) {
    out.terms.push_back({ThetaMatrix(0), RatFunc(1), {}});
    return out;
  }
  IntSeq index(static_cast<std::size_t>(N), 0);
  ThetaMatrix theta(N);
  std::function<void(const IntSeq&, const RatFunc&)> rec = [&](const IntSeq& cur, const RatFunc& coeff) {
    const int L = static_cast<int>(cur.size());
    const auto steps = g ? invert_step(cur, side) : invert_step_mult(cur, side);
    for (const auto& st : steps) {
      IntSeq rest(st.index.begin() + 1, st.index.end());
      if (!full) {
        const bool ok = g ? is_partition(rest) : std::all_of(rest.begin(), rest.end(), [](int x) { return x >= 0; });
        if (!ok) continue;
      }
      index[static_cast<std::size_t>(L - 1)] = st.index[0];
      for (int k = 1; k < L; ++k) theta.set(k, L, st.theta[static_cast<std::size_t>(k - 1)]);
      const RatFunc c = coeff * st.coeff;
      if (L == 1)
        out.terms.push_back({theta, c, index});
      else
        rec(rest, c);
    }
    for (int k = 1; k < L; ++k) theta.set(k, L, 0);
  };
  rec(g ? lambda.parts() : lambda.multiplicities(), RatFunc(1));
  return out;
}

RatFunc full_display_coeff(const Partition& lambda, const ThetaMatrix& th, StepSide side) {
  const bool g = is_g_side(side);
  const int N = th.size();
  const std::vector<int> base = g ? lambda.padded(N) : lambda.multiplicities(N);
  auto at = [&base](int i) { return base[static_cast<std::size_t>(i - 1)]; };
  RatFunc c(1);
  for (int k = 1; k < N; ++k) {
    ThetaVector col;
    for (int i = 1; i <= k; ++i) col.push_back(th(i, k + 1));
    // shift_i = sum_{j >= k+2} (theta_ij - theta_{k+1,j}); shift_m uses theta_{i+1,j}
    auto shift = [&](int i, int other) {
      long s = 0;
      for (int j = k + 2; j <= N; ++j) s += th(i, j) - th(other, j);
      return s;
    };
    std::vector<MonomialArg> u;
    JackSpecialization js;
    IntSeq m;
    for (int i = 1; i <= k; ++i) {
      if (g) {
        const long e = at(i) - at(k + 1) + shift(i, k + 1);
        u.emplace_back(e, k - i);
        js.u.emplace_back(mpq_class(e), mpq_class(k - i));
      } else {
        long M = 0;
        for (int j = i; j <= k; ++j) M += at(j);
        M += shift(i, k + 1);
        u.emplace_back(k - i, M);
        js.u.emplace_back(mpq_class(M), mpq_class(k - i));
        m.push_back(static_cast<int>(at(i) + shift(i, i + 1)));
      }
    }
    switch (side) {
      case StepSide::q_g: c *= c_coeff_qt(col, u); break;
      case StepSide::p_e: c *= c_coeff_tq(col, u); break;
      case StepSide::hl: c *= c_coeff_hl(col, m); break;
      case StepSide::mono: c *= RatFunc(c_coeff_mono(col, m)); break;
      case StepSide::jack_q:
        js.mode = JackSpecialization::AMode::inverse_alpha;
        c *= c_coeff_jack(col, js);
        break;
      case StepSide::jack_p:
        js.mode = JackSpecialization::AMode::alpha;
        c *= c_coeff_jack(col, js);
        break;
      case StepSide::schur:
        if (std::any_of(col.begin(), col.end(), [](int x) { return x > 1; })) return RatFunc(0);
        if (total(col) % 2) c = -c;
        break;
    }
    if (c.is_zero()) return c;
  }
  return c;
}

IntSeq full_display_index(const Partition& lambda, const ThetaMatrix& th, StepSide side) {
  const int N = th.size();
  const bool g = is_g_side(side);
  const std::vector<int> base = g ? lambda.padded(N) : lambda.multiplicities(N);
  IntSeq idx;
  for (int k = 1; k <= N; ++k) {
    long x = 0;
    if (g)
      x = base[static_cast<std::size_t>(k - 1)];
    else
      for (int j = k; j <= N; ++j) x += base[static_cast<std::size_t>(j - 1)];
    for (int j = k + 1; j <= N; ++j) x += th(k, j);
    for (int j = 1; j < k; ++j) x -= th(j, k);
    idx.push_back(static_cast<int>(x));
  }
  return idx;
}

std::vector<ExpansionTerm> full_as_terms(const FullExpansion& e) {
  std::vector<ExpansionTerm> out;
  for (const auto& t : e.terms) {
    IntSeq flat;
    const int N = t.theta.size();
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) flat.push_back(t.theta(i, j));
    out.push_back({t.index, t.coeff, flat});
  }
  return out;
}

SymFunc full_resum(const FullExpansion& e) {
  const Basis b = is_g_side(e.side) ? Basis::gprod : Basis::eprod;
  return to_monomial(product_sum(full_as_terms(e), b, side_family(e.side)));
}

std::pair<mpq_class, mpq_class> fn_gn(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  if (a.size() != b.size() + 1) throw ParameterError("fn_gn needs n+1 values of a and n values of b");
  const std::size_t n = b.size();
  auto nonzero = [](const mpq_class& x) {
    if (x == 0) throw ParameterError("degenerate parameters: a denominator vanishes");
    return x;
  };
  mpq_class F = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    mpq_class term = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (!(mask >> k & 1u)) continue;
      if (k + 1 < n && !(mask >> (k + 1) & 1u)) term *= (b[k + 1] - b[k]) / nonzero(b[k + 1]);
      term *= a[k + 1] / nonzero(b[k]) * (a[k] - b[k]) / nonzero(a[k + 1] - b[k]);
    }
    F += term;
  }
  mpq_class G = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    mpq_class term = 1;
    for (std::size_t j = 0; j < k; ++j) term *= a[j] / nonzero(b[j]);
    for (std::size_t j = k; j < n; ++j) term *= (a[j] - b[j]) / nonzero(a[j + 1] - b[j]);
    G += term;
  }
  return {F, G};
}

int inverse_link_violations(const mpq_class& q, const mpq_class& t, const std::vector<mpq_class>& u, int side) {
  const std::size_t n = u.size();
  std::vector<IntSeq> idx;
  IntSeq cur(n, 0);
  std::function<void(std::size_t)> gen = [&](std::size_t i) {
    if (i == n) {
      idx.push_back(cur);
      return;
    }
    for (int x = 0; x < side; ++x) {
      cur[i] = x;
      gen(i + 1);
    }
  };
  gen(0);
  const std::size_t N = idx.size();
  auto dominates = [](const IntSeq& a, const IntSeq& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] < b[i]) return false;
    return true;
  };
  auto spec = [&](const IntSeq& shift) {
    Specialization s;
    s.q = {0, 0, q};
    s.t = {0, 0, t};
    const int w = total(shift);
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class x = u[i];
      for (int e = 0; e < shift[i] + w; ++e) x *= q;
      s.u.push_back({0, 0, x});
    }
    return s;
  };
  std::vector<std::vector<mpq_class>> f(N, std::vector<mpq_class>(N, 0)), g = f;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) {
      if (!dominates(idx[r], idx[c])) continue;
      ThetaVector d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = idx[r][i] - idx[c][i];
      f[r][c] = c_coeff_at(d, spec(idx[c])).constant_value();
      g[r][c] = d_coeff_at(d, spec(idx[c])).constant_value();
    }
  int bad = 0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) {
      mpq_class fg = 0, gf = 0;
      for (std::size_t k = 0; k < N; ++k) {
        fg += f[r][k] * g[k][c];
        gf += g[r][k] * f[k][c];
      }
      const mpq_class delta = r == c ? 1 : 0;
      bad += (fg != delta) + (gf != delta);
    }
  return bad;
}

}  // namespace macpieri
