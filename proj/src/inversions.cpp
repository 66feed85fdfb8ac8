#include "macpieri/inversions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "macpieri/errors.hpp"

namespace macpieri {

const char* pair_family_name(PairFamily f) {
  switch (f) {
    case PairFamily::prod_det: return "prod_det";
    case PairFamily::det_prod: return "det_prod";
    case PairFamily::prod_det_b: return "prod_det_b";
    case PairFamily::det_prod_b: return "det_prod_b";
    case PairFamily::closed_form: return "closed_form";
    case PairFamily::one_dim: return "one_dim";
    case PairFamily::one_dim_b: return "one_dim_b";
  }
  return "?";
}

const std::vector<PairFamily>& all_pair_families() {
  static const std::vector<PairFamily> all{PairFamily::prod_det,        PairFamily::det_prod,   PairFamily::prod_det_b,
                                           PairFamily::det_prod_b,        PairFamily::closed_form,
                                           PairFamily::one_dim,      PairFamily::one_dim_b};
  return all;
}

PairFamily parse_pair_family(const std::string& name) {
  for (PairFamily f : all_pair_families())
    if (name == pair_family_name(f)) return f;
  throw ParameterError("unknown inverse pair family: " + name);
}

bool has_determinant(PairFamily f) { return !is_one_dimensional(f) && f != PairFamily::closed_form; }
bool is_one_dimensional(PairFamily f) { return f == PairFamily::one_dim || f == PairFamily::one_dim_b; }

template <class F>
const F& PairParams<F>::a_at(int i, int y) const {
  const int k = y - lo;
  if (i < 0 || i >= static_cast<int>(a.size()) || k < 0 || k >= static_cast<int>(a[i].size()))
    throw ParameterError("sequence a undefined at index " + std::to_string(y));
  return a[i][k];
}

template <class F>
const F& PairParams<F>::c_at(int i, int y) const {
  const int k = y - lo;
  if (i < 0 || i >= static_cast<int>(c.size()) || k < 0 || k >= static_cast<int>(c[i].size()))
    throw ParameterError("sequence c undefined at index " + std::to_string(y));
  return c[i][k];
}

namespace {

bool is_zero(const mpq_class& x) { return x == 0; }
bool is_zero(const RatFunc& x) { return x.is_zero(); }
std::string show(const mpq_class& x) { return x.get_str(); }
std::string show(const RatFunc& x) { return x.to_string(); }

template <class F>
F dv(const F& a, const F& b) {
  if (is_zero(b)) throw ArithmeticError("division by zero in an inverse-pair entry");
  F r = a;
  r /= b;
  return r;
}

template <class F>
F pw(const F& x, long e) {
  F r(1);
  for (long i = 0; i < e; ++i) r *= x;
  if (e < 0) {
    F p(1);
    for (long i = 0; i < -e; ++i) p *= x;
    r = dv(F(1), p);
  }
  return r;
}

// (a; q)_k for k >= 0
template <class F>
F poch(const F& a, const F& q, int k) {
  if (k < 0) throw ParameterError("negative Pochhammer length");
  F r(1), x = a;
  for (int i = 0; i < k; ++i) {
    r *= F(1) - x;
    x *= q;
  }
  return r;
}

RatFunc det(std::vector<std::vector<RatFunc>> m) { return ratfunc_det(m); }

mpq_class det(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const mpq_class factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return d;
}

bool dominates(const IntSeq& m, const IntSeq& k) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] < k[i]) return false;
  return true;
}

template <class F>
F prod_c(const PairParams<F>& s, const IntSeq& k) {
  F r(1);
  for (int j = 0; j < s.n; ++j) r *= s.c_at(j, k[j]);
  return r;
}

// Entries of the prod_det / det_prod pairs with general b. With b_inf the
// factors containing b / prod c are dropped (their limit is 1).
template <class F>
F prod_det_f(const PairParams<F>& s, const IntSeq& m, const IntSeq& k, bool b_inf) {
  const F B = b_inf ? F(0) : dv(s.b, prod_c(s, k));
  F num(1), den(1);
  for (int i = 0; i < s.n; ++i) {
    for (int y = k[i]; y < m[i]; ++y) {
      const F& ay = s.a_at(i, y);
      if (!b_inf) num *= ay - B;
      for (int j = 0; j < s.n; ++j) num *= ay - s.c_at(j, k[j]);
    }
    for (int y = k[i] + 1; y <= m[i]; ++y) {
      const F& cy = s.c_at(i, y);
      if (!b_inf) den *= cy - B;
      for (int j = 0; j < s.n; ++j) den *= cy - s.c_at(j, k[j]);
    }
  }
  return dv(num, den);
}

// prod c_i(k_i)^{-1} prod_{i<j} (c_i(k_i) - c_j(k_j))^{-1}
template <class F>
F vandermonde_pre(const PairParams<F>& s, const IntSeq& k) {
  F den(1);
  for (int i = 0; i < s.n; ++i) {
    den *= s.c_at(i, k[i]);
    for (int j = i + 1; j < s.n; ++j) den *= s.c_at(i, k[i]) - s.c_at(j, k[j]);
  }
  return dv(F(1), den);
}

// prod over y in [from, to] of the (a - B)/(c - B) prod_j (a - c_j)/(c - c_j) ratio
template <class F>
F ratio_run(const PairParams<F>& s, int i, int from, int to, const IntSeq& k, const F& B, bool b_inf) {
  F num(1), den(1);
  for (int y = from; y <= to; ++y) {
    const F& ay = s.a_at(i, y);
    const F& cy = s.c_at(i, y);
    if (!b_inf) {
      num *= ay - B;
      den *= cy - B;
    }
    for (int j = 0; j < s.n; ++j) {
      num *= ay - s.c_at(j, k[j]);
      den *= cy - s.c_at(j, k[j]);
    }
  }
  return dv(num, den);
}

// det[ c_i(x_i)^{n-j+1} - a_i(x_i)^{n-j+1} R_i ] with R_i read at the point x and column data k
template <class F>
F prod_det_determinant(const PairParams<F>& s, const IntSeq& x, const IntSeq& k, const F& B, bool b_inf) {
  std::vector<std::vector<F>> M(s.n, std::vector<F>(s.n));
  for (int i = 0; i < s.n; ++i) {
    const F& ci = s.c_at(i, x[i]);
    const F& ai = s.a_at(i, x[i]);
    F R = b_inf ? F(1) : dv(F(ci - B), F(ai - B));
    for (int j = 0; j < s.n; ++j) R *= dv(F(ci - s.c_at(j, k[j])), F(ai - s.c_at(j, k[j])));
    for (int j = 1; j <= s.n; ++j) M[i][j - 1] = pw(ci, s.n - j + 1) - pw(ai, s.n - j + 1) * R;
  }
  return det(M);
}

template <class F>
F prod_det_g(const PairParams<F>& s, const IntSeq& k, const IntSeq& l, bool b_inf) {
  const F B = b_inf ? F(0) : dv(s.b, prod_c(s, k));
  F r = vandermonde_pre(s, k);
  for (int i = 0; i < s.n; ++i) r *= ratio_run(s, i, l[i], k[i] - 1, k, B, b_inf);
  return r * prod_det_determinant(s, l, k, B, b_inf);
}

template <class F>
F det_prod_f(const PairParams<F>& s, const IntSeq& m, const IntSeq& k, bool b_inf) {
  const F B = b_inf ? F(0) : dv(s.b, prod_c(s, k));
  F r = vandermonde_pre(s, k);
  for (int i = 0; i < s.n; ++i) r *= ratio_run(s, i, k[i] + 1, m[i], k, B, b_inf);
  return r * prod_det_determinant(s, m, k, B, b_inf);
}

template <class F>
F det_prod_g(const PairParams<F>& s, const IntSeq& k, const IntSeq& l, bool b_inf) {
  const F B = b_inf ? F(0) : dv(s.b, prod_c(s, k));
  F num(1), den(1);
  for (int i = 0; i < s.n; ++i) {
    for (int y = l[i] + 1; y <= k[i]; ++y) {
      const F& ay = s.a_at(i, y);
      if (!b_inf) num *= ay - B;
      for (int j = 0; j < s.n; ++j) num *= ay - s.c_at(j, k[j]);
    }
    for (int y = l[i]; y < k[i]; ++y) {
      const F& cy = s.c_at(i, y);
      if (!b_inf) den *= cy - B;
      for (int j = 0; j < s.n; ++j) den *= cy - s.c_at(j, k[j]);
    }
  }
  return dv(num, den);
}

// (x - b/c)(x - c) for the b-deformed pairs
template <class F>
F bpair(const F& x, const F& c, const F& b) {
  return (x - dv(b, c)) * (x - c);
}

template <class F>
F cor_run(const PairParams<F>& s, int i, int from, int to, const IntSeq& k) {
  F num(1), den(1);
  for (int y = from; y <= to; ++y)
    for (int j = 0; j < s.n; ++j) {
      num *= bpair(s.a_at(i, y), s.c_at(j, k[j]), s.b);
      den *= bpair(s.c_at(i, y), s.c_at(j, k[j]), s.b);
    }
  return dv(num, den);
}

// prod_i (c_i(x_i)/c_i(k_i))^n (c_i(k_i) + b/c_i(k_i))^{-1} prod_{i<j} [(1 - b/c_i c_j)(c_i - c_j)]^{-1} at k
template <class F>
F cor_pre(const PairParams<F>& s, const IntSeq& x, const IntSeq& k) {
  F num(1), den(1);
  for (int i = 0; i < s.n; ++i) {
    const F& ck = s.c_at(i, k[i]);
    const long e = s.first_power_prefactor ? 1 : s.n;
    num *= pw(s.c_at(i, x[i]), e);
    den *= pw(ck, e) * (ck + dv(s.b, ck));
    for (int j = i + 1; j < s.n; ++j) {
      const F& cj = s.c_at(j, k[j]);
      den *= (F(1) - dv(s.b, F(ck * cj))) * (ck - cj);
    }
  }
  return dv(num, den);
}

template <class F>
F cor_det(const PairParams<F>& s, const IntSeq& x, const IntSeq& k) {
  std::vector<std::vector<F>> M(s.n, std::vector<F>(s.n));
  for (int i = 0; i < s.n; ++i) {
    const F& ci = s.c_at(i, x[i]);
    const F& ai = s.a_at(i, x[i]);
    F R(1);
    for (int j = 0; j < s.n; ++j) {
      const F& cs = s.c_at(j, k[j]);
      R *= dv(F((F(1) - dv(s.b, F(ci * cs))) * (ci - cs)), F((F(1) - dv(s.b, F(ai * cs))) * (ai - cs)));
    }
    const F cc = ci + dv(s.b, ci);
    const F aa = ai + dv(s.b, ai);
    for (int j = 1; j <= s.n; ++j) M[i][j - 1] = pw(cc, s.n - j + 1) - pw(aa, s.n - j + 1) * R;
  }
  return det(M);
}

template <class F>
F prod_det_b_f(const PairParams<F>& s, const IntSeq& m, const IntSeq& k) {
  F num(1), den(1);
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j) {
      const F& cj = s.c_at(j, k[j]);
      for (int y = k[i]; y < m[i]; ++y) num *= bpair(s.a_at(i, y), cj, s.b);
      for (int y = k[i] + 1; y <= m[i]; ++y) den *= bpair(s.c_at(i, y), cj, s.b);
    }
  return dv(num, den);
}

template <class F>
F prod_det_b_g(const PairParams<F>& s, const IntSeq& k, const IntSeq& l) {
  F r = cor_pre(s, l, k);
  for (int i = 0; i < s.n; ++i) r *= cor_run(s, i, l[i], k[i] - 1, k);
  return r * cor_det(s, l, k);
}

template <class F>
F det_prod_b_f(const PairParams<F>& s, const IntSeq& m, const IntSeq& k) {
  F r = cor_pre(s, m, k);
  for (int i = 0; i < s.n; ++i) r *= cor_run(s, i, k[i] + 1, m[i], k);
  return r * cor_det(s, m, k);
}

template <class F>
F det_prod_b_g(const PairParams<F>& s, const IntSeq& k, const IntSeq& l) {
  F num(1), den(1);
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j) {
      const F& cj = s.c_at(j, k[j]);
      for (int y = l[i] + 1; y <= k[i]; ++y) num *= bpair(s.a_at(i, y), cj, s.b);
      for (int y = l[i]; y < k[i]; ++y) den *= bpair(s.c_at(i, y), cj, s.b);
    }
  return dv(num, den);
}

template <class F>
F kratt_f(const PairParams<F>& s, int m, int k, bool with_b) {
  const F& ck = s.c_at(0, k);
  F num(1), den(1);
  for (int y = k; y < m; ++y) num *= with_b ? bpair(s.a_at(0, y), ck, s.b) : F(s.a_at(0, y) - ck);
  for (int y = k + 1; y <= m; ++y) den *= with_b ? bpair(s.c_at(0, y), ck, s.b) : F(s.c_at(0, y) - ck);
  return dv(num, den);
}

template <class F>
F kratt_g(const PairParams<F>& s, int k, int l, bool with_b) {
  const F& ck = s.c_at(0, k);
  const F& ak = s.a_at(0, k);
  const F& cl = s.c_at(0, l);
  const F& al = s.a_at(0, l);
  F r = with_b ? dv(F((s.b - al * cl) * (al - cl)), F((s.b - ak * ck) * (ak - ck))) : dv(F(al - cl), F(ak - ck));
  F num(1), den(1);
  for (int y = l + 1; y <= k; ++y) num *= with_b ? bpair(s.a_at(0, y), ck, s.b) : F(s.a_at(0, y) - ck);
  for (int y = l; y < k; ++y) den *= with_b ? bpair(s.c_at(0, y), ck, s.b) : F(s.c_at(0, y) - ck);
  return r * dv(num, den);
}

template <class F>
F qu(const PairParams<F>& s, int i, int e) {
  return pw(s.q, e) * s.u[i];
}

template <class F>
F closed_form_f(const PairParams<F>& s, const IntSeq& m, const IntSeq& k) {
  const int n = s.n;
  const int K = std::accumulate(k.begin(), k.end(), 0);
  const F& q = s.q;
  const F& t0 = s.t[0];
  F r(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) r = dv(r, F(qu(s, i, m[i]) - qu(s, j, m[j])));
  for (int i = 0; i < n; ++i) {
    const F& ti = s.t[i + 1];
    const F& ui = s.u[i];
    const int d = m[i] - k[i];
    r *= pw(ti, d) * dv(poch(dv(q, ti), q, d), poch(q, q, d));
    const F base = pw(q, k[i] + K + 1) * t0 * ui;
    r *= dv(poch(dv(base, ti), q, d), poch(base, q, d));
    for (int j = i + 1; j < n; ++j) {
      const F& tj = s.t[j + 1];
      const F& uj = s.u[j];
      const F x1 = pw(q, k[i] - k[j] + 1) * dv(ui, uj);
      r *= dv(poch(dv(x1, ti), q, d), poch(x1, q, d));
      const F x2 = pw(q, k[i] - m[j]) * dv(ui, uj);
      r *= dv(poch(F(x2 * tj), q, d), poch(x2, q, d));
    }
  }
  std::vector<std::vector<F>> M(n, std::vector<F>(n));
  for (int i = 0; i < n; ++i) {
    const F& ti = s.t[i + 1];
    const F x = qu(s, i, m[i]);
    const F A = pw(q, m[i] + K) * t0 * s.u[i];
    F R = dv(F(F(1) - A), F(F(1) - dv(A, ti)));
    for (int j = 0; j < n; ++j) R *= dv(F(x - qu(s, j, k[j])), F(dv(x, ti) - qu(s, j, k[j])));
    for (int j = 1; j <= n; ++j) M[i][j - 1] = pw(x, n - j) * (F(1) - pw(ti, j - n - 1) * R);
  }
  return r * det(M);
}

template <class F>
F closed_form_g(const PairParams<F>& s, const IntSeq& k, const IntSeq& l) {
  const int n = s.n;
  const int K = std::accumulate(k.begin(), k.end(), 0);
  const F& q = s.q;
  const F& t0 = s.t[0];
  F r(1);
  for (int i = 0; i < n; ++i) {
    const F& ti = s.t[i + 1];
    const F& ui = s.u[i];
    const int d = k[i] - l[i];
    r *= dv(poch(ti, q, d), poch(q, q, d));
    r *= dv(poch(F(pw(q, l[i] + K + 1) * t0 * dv(ui, ti)), q, d), poch(F(pw(q, l[i] + K) * t0 * ui), q, d));
    for (int j = i + 1; j < n; ++j) {
      const F& tj = s.t[j + 1];
      const F ratio = dv(ui, s.u[j]);
      r *= dv(poch(F(pw(q, l[i] - l[j]) * tj * ratio), q, d), poch(F(pw(q, l[i] - l[j] + 1) * ratio), q, d));
      r *= dv(poch(F(pw(q, l[i] - k[j] + 1) * dv(ratio, ti)), q, d), poch(F(pw(q, l[i] - k[j]) * ratio), q, d));
    }
  }
  return r;
}

template <class F>
void check_shape(const PairParams<F>& s, const IntSeq& row, const IntSeq& col) {
  if (static_cast<int>(row.size()) != s.n || static_cast<int>(col.size()) != s.n)
    throw ParameterError("multi-index length differs from the dimension");
  if (is_one_dimensional(s.family) && s.n != 1) throw ParameterError("one-dimensional family needs n = 1");
  if (s.family == PairFamily::closed_form &&
      (static_cast<int>(s.t.size()) != s.n + 1 || static_cast<int>(s.u.size()) != s.n))
    throw ParameterError("closed_form needs t_0..t_n and u_1..u_n");
}

}  // namespace

template <class F>
F pair_entry(const PairParams<F>& s, PairSide side, const IntSeq& row, const IntSeq& col) {
  check_shape(s, row, col);
  if (!dominates(row, col)) return F(0);
  const bool fs = side == PairSide::f;
  switch (s.family) {
    case PairFamily::prod_det: return fs ? prod_det_f(s, row, col, false) : prod_det_g(s, row, col, false);
    case PairFamily::det_prod: return fs ? det_prod_f(s, row, col, false) : det_prod_g(s, row, col, false);
    case PairFamily::prod_det_b: return fs ? prod_det_b_f(s, row, col) : prod_det_b_g(s, row, col);
    case PairFamily::det_prod_b: return fs ? det_prod_b_f(s, row, col) : det_prod_b_g(s, row, col);
    case PairFamily::closed_form: return fs ? closed_form_f(s, row, col) : closed_form_g(s, row, col);
    case PairFamily::one_dim: return fs ? kratt_f(s, row[0], col[0], false) : kratt_g(s, row[0], col[0], false);
    case PairFamily::one_dim_b: return fs ? kratt_f(s, row[0], col[0], true) : kratt_g(s, row[0], col[0], true);
  }
  return F(0);
}

std::vector<IntSeq> window_indices(int n, const Window& w) {
  std::vector<IntSeq> out;
  IntSeq cur(static_cast<std::size_t>(n), w.lo);
  if (w.side <= 0) return out;
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == w.lo + w.side - 1) cur[i--] = w.lo;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

namespace {

template <class F>
class EntryCache {
 public:
  explicit EntryCache(const EntryFn<F>& fn) : fn_(fn) {}
  const F& operator()(const IntSeq& r, const IntSeq& c) {
    auto key = std::make_pair(r, c);
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(key, dominates(r, c) ? fn_(r, c) : F(0)).first;
    return it->second;
  }

 private:
  const EntryFn<F>& fn_;
  std::map<std::pair<IntSeq, IntSeq>, F> memo_;
};

}  // namespace

template <class F>
InverseReport verify_entries(const EntryFn<F>& f, const EntryFn<F>& g, int n, const Window& w) {
  InverseReport rep;
  rep.n = n;
  rep.window = w;
  EntryCache<F> fc(f), gc(g);
  const auto idx = window_indices(n, w);
  for (const IntSeq& m : idx)
    for (const IntSeq& l : idx) {
      if (!dominates(m, l)) continue;
      F fg(0), gf(0);
      for (const IntSeq& k : idx) {
        if (!dominates(m, k) || !dominates(k, l)) continue;
        fg += fc(m, k) * gc(k, l);
        gf += gc(m, k) * fc(k, l);
      }
      const F delta(m == l ? 1 : 0);
      rep.checked += 2;
      if (fg != delta) rep.violations.push_back({"fg", m, l, show(fg)});
      if (gf != delta) rep.violations.push_back({"gf", m, l, show(gf)});
    }
  return rep;
}

template <class F>
InverseReport verify_inverse(const PairParams<F>& spec, const Window& w) {
  const EntryFn<F> f = [&](const IntSeq& r, const IntSeq& c) { return pair_entry(spec, PairSide::f, r, c); };
  const EntryFn<F> g = [&](const IntSeq& r, const IntSeq& c) { return pair_entry(spec, PairSide::g, r, c); };
  InverseReport rep = verify_entries(f, g, spec.n, w);
  rep.family = pair_family_name(spec.family);
  return rep;
}

template <class F>
int transfer_mismatches(const EntryFn<F>& f1, const EntryFn<F>& g1, const EntryFn<F>& f2, const EntryFn<F>& g2, int n,
                        const Window& w) {
  // With r = f2/f1: X(m) = r(m, l0) = x_m y_0 and Y(k) = r(k, k)/r(k, l0) = y_k / y_0.
  const auto idx = window_indices(n, w);
  const IntSeq l0(static_cast<std::size_t>(n), w.lo);
  std::map<IntSeq, F> X, Y;
  for (const IntSeq& m : idx) {
    X[m] = dv(f2(m, l0), f1(m, l0));
    Y[m] = dv(dv(f2(m, m), f1(m, m)), X[m]);
  }
  int bad = 0;
  for (const IntSeq& m : idx)
    for (const IntSeq& k : idx) {
      if (!dominates(m, k)) continue;
      if (f2(m, k) != f1(m, k) * X[m] * Y[k]) ++bad;
      if (g2(m, k) != dv(g1(m, k), F(Y[m] * X[k]))) ++bad;
    }
  return bad;
}

template <class F>
PairParams<F> negated(const PairParams<F>& spec) {
  PairParams<F> r = spec;
  const int len = spec.a.empty() ? 0 : static_cast<int>(spec.a[0].size());
  r.lo = -(spec.lo + len - 1);
  for (int i = 0; i < spec.n; ++i) {
    std::reverse(r.a[i].begin(), r.a[i].end());
    std::reverse(r.c[i].begin(), r.c[i].end());
  }
  return r;
}

template <class F>
std::pair<EntryFn<F>, EntryFn<F>> substituted_limit_pair(const PairParams<F>& spec, bool dual) {
  PairParams<F> s = spec;
  for (int i = 0; i < s.n; ++i) {
    for (F& v : s.a[i]) v = v + dv(spec.b, v);
    for (F& v : s.c[i]) v = v + dv(spec.b, v);
  }
  EntryFn<F> f = [s, dual](const IntSeq& m, const IntSeq& k) {
    return dual ? det_prod_f(s, m, k, true) : prod_det_f(s, m, k, true);
  };
  EntryFn<F> g = [s, dual](const IntSeq& k, const IntSeq& l) {
    return dual ? det_prod_g(s, k, l, true) : prod_det_g(s, k, l, true);
  };
  return {f, g};
}

template <class F>
PairParams<F> geometric_preset(const F& q, const std::vector<F>& t, const std::vector<F>& u, int lo, int hi) {
  PairParams<F> s;
  s.family = PairFamily::det_prod;
  s.n = static_cast<int>(u.size());
  s.lo = lo;
  s.q = q;
  s.t = t;
  s.u = u;
  F prod_u(1);
  for (const F& x : u) prod_u *= x;
  s.b = dv(prod_u, t[0]);
  s.a.assign(s.n, {});
  s.c.assign(s.n, {});
  for (int i = 0; i < s.n; ++i)
    for (int y = lo; y <= hi; ++y) {
      s.c[i].push_back(pw(q, y) * u[i]);
      s.a[i].push_back(dv(F(pw(q, y) * u[i]), t[i + 1]));
    }
  return s;
}

NumericPairSpec draw_regular(PairFamily family, int n, const Window& w, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
  auto draw = [&]() {
    while (true) {
      mpq_class r(num(rng), den(rng));
      r.canonicalize();
      if (r != 0) return r;
    }
  };
  const auto idx = window_indices(n, w);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    NumericPairSpec s;
    s.family = family;
    s.n = n;
    s.lo = w.lo;
    s.a.assign(n, {});
    s.c.assign(n, {});
    for (int i = 0; i < n; ++i)
      for (int y = 0; y < w.side; ++y) {
        s.a[i].push_back(draw());
        s.c[i].push_back(draw());
      }
    s.b = draw();
    if (family == PairFamily::closed_form) {
      s.q = draw();
      for (int i = 0; i <= n; ++i) s.t.push_back(draw());
      for (int i = 0; i < n; ++i) s.u.push_back(draw());
    }
    try {
      bool ok = true;
      for (const IntSeq& m : idx) {
        for (const IntSeq& k : idx) {
          if (!dominates(m, k)) continue;
          const mpq_class fe = pair_entry(s, PairSide::f, m, k);
          const mpq_class ge = pair_entry(s, PairSide::g, m, k);
          if (fe == 0 || ge == 0) ok = false;
        }
        if (!ok) break;
      }
      if (ok) return s;
    } catch (const ArithmeticError&) {
    }
  }
  throw ArithmeticError("no regular parameter draw found");
}

std::vector<InverseReport> inversion_suite(std::uint64_t seed, int draws, int max_n, const Window& w) {
  std::mt19937_64 rng(seed);
  std::vector<InverseReport> out;
  for (PairFamily fam : all_pair_families()) {
    const int top = is_one_dimensional(fam) ? 1 : max_n;
    for (int n = 1; n <= top; ++n) {
      InverseReport agg;
      agg.family = pair_family_name(fam);
      agg.n = n;
      agg.window = w;
      for (int d = 0; d < draws; ++d) {
        const InverseReport r = verify_inverse(draw_regular(fam, n, w, rng), w);
        agg.checked += r.checked;
        agg.violations.insert(agg.violations.end(), r.violations.begin(), r.violations.end());
      }
      out.push_back(std::move(agg));
    }
  }
  return out;
}

#define MACPIERI_INSTANTIATE(F)                                                                                     \
  template struct PairParams<F>;                                                                                    \
  template F pair_entry<F>(const PairParams<F>&, PairSide, const IntSeq&, const IntSeq&);                           \
  template InverseReport verify_entries<F>(const EntryFn<F>&, const EntryFn<F>&, int, const Window&);               \
  template InverseReport verify_inverse<F>(const PairParams<F>&, const Window&);                                    \
  template int transfer_mismatches<F>(const EntryFn<F>&, const EntryFn<F>&, const EntryFn<F>&, const EntryFn<F>&, \
                                      int, const Window&);                                                          \
  template PairParams<F> negated<F>(const PairParams<F>&);                                                          \
  template std::pair<EntryFn<F>, EntryFn<F>> substituted_limit_pair<F>(const PairParams<F>&, bool);                 \
  template PairParams<F> geometric_preset<F>(const F&, const std::vector<F>&, const std::vector<F>&, int, int);

MACPIERI_INSTANTIATE(mpq_class)
MACPIERI_INSTANTIATE(RatFunc)

#undef MACPIERI_INSTANTIATE

}  // namespace macpieri
