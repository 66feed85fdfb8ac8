// Polynomial GCD over Z[q,t].
//
// The main path is the heuristic GCD: evaluate the outer variable at a large
// integer, recurse down to integers, and rebuild candidate factors from the
// balanced x-adic digits. Every candidate is confirmed by exact division, so a
// wrong guess costs time but never correctness. When six evaluation points
// fail, a primitive polynomial remainder sequence in q over Z[t] finishes the job.

#include <algorithm>
#include <optional>
#include <utility>

#include "macpieri/errors.hpp"
#include "macpieri/poly.hpp"

namespace macpieri {
namespace {

using ZPoly = std::vector<mpz_class>;  // coefficients, lowest degree first
using BPoly = std::vector<ZPoly>;      // index = q exponent, entry = polynomial in t

constexpr int kHeuristicTries = 6;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
void trim(BPoly& p) {
  for (auto& c : p) trim(c);
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}
mpz_class content(const BPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p)
    for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

mpz_class max_norm(const ZPoly& p) {
  mpz_class m = 0;
  for (const auto& c : p)
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  return m;
}
mpz_class max_norm(const BPoly& p) {
  mpz_class m = 0;
  for (const auto& c : p)
    for (const auto& x : c)
      if (mpz_cmpabs(x.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(x);
  return m;
}

const mpz_class& ground_lc(const BPoly& p) { return p.back().back(); }

void divexact_inplace(ZPoly& p, const mpz_class& c) {
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}
void divexact_inplace(BPoly& p, const mpz_class& c) {
  for (auto& z : p) divexact_inplace(z, c);
}
void scale_inplace(ZPoly& p, const mpz_class& c) {
  for (auto& x : p) x *= c;
}
void negate_inplace(ZPoly& p) {
  for (auto& x : p) x = -x;
}
void negate_inplace(BPoly& p) {
  for (auto& z : p) negate_inplace(z);
}

BPoly to_dense(const MultiPoly& f) {
  BPoly out(f.degree(0) + 1);
  for (const auto& t : f.terms()) {
    auto& row = out[t.e0()];
    if (row.size() <= t.e1()) row.resize(t.e1() + 1);
    row[t.e1()] = t.coeff;
  }
  trim(out);
  return out;
}

MultiPoly from_dense(const BPoly& p, VarSet v) {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      if (p[i][j] != 0)
        terms.push_back({MultiPoly::make_key(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)),
                         p[i][j]});
  return MultiPoly::from_terms(std::move(terms), v);
}

// ---------- univariate helpers over Z ----------

std::optional<ZPoly> zdiv_exact(const ZPoly& f, const ZPoly& g) {
  if (f.empty()) return ZPoly{};
  if (deg(g) > deg(f)) return std::nullopt;
  ZPoly r = f;
  ZPoly q(f.size() - g.size() + 1);
  const mpz_class& lc = g.back();
  for (int i = deg(f) - deg(g); i >= 0; --i) {
    mpz_class& top = r[i + deg(g)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (int j = 0; j <= deg(g); ++j) mpz_submul(r[i + j].get_mpz_t(), c.get_mpz_t(), g[j].get_mpz_t());
    q[i] = c;
  }
  for (const auto& x : r)
    if (x != 0) return std::nullopt;
  trim(q);
  return q;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  trim(out);
  return out;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Pseudo-remainder lc(g)^(deg f - deg g + 1) f mod g.
ZPoly zprem(ZPoly f, const ZPoly& g) {
  const int dg = deg(g);
  const mpz_class& lc = g.back();
  int n = deg(f) - dg + 1;
  while (!f.empty() && deg(f) >= dg) {
    const mpz_class top = f.back();
    const int shift = deg(f) - dg;
    for (auto& x : f) x *= lc;
    for (int j = 0; j <= dg; ++j) mpz_submul(f[shift + j].get_mpz_t(), top.get_mpz_t(), g[j].get_mpz_t());
    trim(f);
    --n;
  }
  mpz_class m;
  mpz_pow_ui(m.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(std::max(n, 0)));
  scale_inplace(f, m);
  return f;
}

ZPoly zprimitive(ZPoly p) {
  trim(p);
  if (p.empty()) return p;
  mpz_class c = content(p);
  if (p.back() < 0) c = -c;
  divexact_inplace(p, c);
  return p;
}

ZPoly zgcd_prs(ZPoly a, ZPoly b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) throw ConsistencyError("zgcd_prs needs nonzero inputs");
  const mpz_class c = gcd(content(a), content(b));
  a = zprimitive(a);
  b = zprimitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (true) {
    if (b.empty()) break;
    if (deg(b) == 0) {
      a = ZPoly{1};
      break;
    }
    ZPoly r = zprem(a, b);
    a = std::move(b);
    b = zprimitive(std::move(r));
  }
  a = zprimitive(a);
  scale_inplace(a, c);
  return a;
}

ZPoly zgcd_any(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) {
    ZPoly r = b;
    if (!r.empty() && r.back() < 0) negate_inplace(r);
    return r;
  }
  if (b.empty()) {
    ZPoly r = a;
    if (r.back() < 0) negate_inplace(r);
    return r;
  }
  return zgcd_prs(a, b);
}

mpz_class eval_at(const ZPoly& p, const mpz_class& x) {
  mpz_class s = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    s *= x;
    s += p[i];
  }
  return s;
}

ZPoly eval_outer(const BPoly& p, const mpz_class& x) {
  std::size_t w = 0;
  for (const auto& c : p) w = std::max(w, c.size());
  ZPoly out(w);
  for (std::size_t i = p.size(); i-- > 0;) {
    for (auto& y : out) y *= x;
    for (std::size_t j = 0; j < p[i].size(); ++j) out[j] += p[i][j];
  }
  trim(out);
  return out;
}

// Balanced x-adic digits of an integer, lowest first, as a polynomial.
ZPoly interpolate_int(mpz_class h, const mpz_class& x) {
  ZPoly out;
  const mpz_class half = x / 2;
  mpz_class g;
  while (h != 0) {
    mpz_fdiv_r(g.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    if (g > half) g -= x;
    out.push_back(g);
    h -= g;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
  }
  if (!out.empty() && out.back() < 0) negate_inplace(out);
  return out;
}

BPoly interpolate_poly(ZPoly h, const mpz_class& x) {
  BPoly out;
  const mpz_class half = x / 2;
  trim(h);
  while (!h.empty()) {
    ZPoly g(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) {
      mpz_fdiv_r(g[j].get_mpz_t(), h[j].get_mpz_t(), x.get_mpz_t());
      if (g[j] > half) g[j] -= x;
      h[j] -= g[j];
      mpz_divexact(h[j].get_mpz_t(), h[j].get_mpz_t(), x.get_mpz_t());
    }
    trim(g);
    trim(h);
    out.push_back(std::move(g));
  }
  trim(out);
  if (!out.empty() && ground_lc(out) < 0) negate_inplace(out);
  return out;
}

mpz_class initial_point(const mpz_class& fn, const mpz_class& gn, const mpz_class& flc,
                        const mpz_class& glc) {
  const mpz_class b = 2 * std::min(fn, gn) + 29;
  mpz_class s = sqrt(b);
  const mpz_class lhs = std::min(b, mpz_class(99 * s));
  const mpz_class rhs = 2 * std::min(mpz_class(fn / abs(flc)), mpz_class(gn / abs(glc))) + 2;
  return std::max(lhs, rhs);
}

mpz_class next_point(const mpz_class& x) {
  const mpz_class r = sqrt(sqrt(x));
  return 73794 * x * r / 27011;
}

struct ZTriple {
  ZPoly h, cf, cg;
};

std::optional<ZTriple> heu_gcd_uni(ZPoly f, ZPoly g) {
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return std::nullopt;
  const mpz_class c = gcd(content(f), content(g));
  divexact_inplace(f, c);
  divexact_inplace(g, c);
  if (deg(f) == 0 || deg(g) == 0) return ZTriple{ZPoly{c}, f, g};
  const mpz_class fn = max_norm(f), gn = max_norm(g);
  mpz_class x = initial_point(fn, gn, f.back(), g.back());
  for (int attempt = 0; attempt < kHeuristicTries; ++attempt, x = next_point(x)) {
    const mpz_class ff = eval_at(f, x), gg = eval_at(g, x);
    if (ff == 0 || gg == 0) continue;
    const mpz_class hv = gcd(ff, gg);
    const mpz_class cffv = ff / hv, cfgv = gg / hv;
    ZPoly h = zprimitive(interpolate_int(hv, x));
    if (!h.empty()) {
      if (auto cf = zdiv_exact(f, h)) {
        if (auto cg = zdiv_exact(g, h)) {
          scale_inplace(h, c);
          return ZTriple{h, *cf, *cg};
        }
      }
    }
    ZPoly cff = interpolate_int(cffv, x);
    if (!cff.empty()) {
      if (auto hh = zdiv_exact(f, cff)) {
        if (auto cg = zdiv_exact(g, *hh)) {
          scale_inplace(*hh, c);
          return ZTriple{*hh, cff, *cg};
        }
      }
    }
    ZPoly cfg = interpolate_int(cfgv, x);
    if (!cfg.empty()) {
      if (auto hh = zdiv_exact(g, cfg)) {
        if (auto cf = zdiv_exact(f, *hh)) {
          scale_inplace(*hh, c);
          return ZTriple{*hh, *cf, cfg};
        }
      }
    }
  }
  return std::nullopt;
}

struct BTriple {
  MultiPoly h, cf, cg;
};

BPoly bprimitive_int(BPoly p) {
  const mpz_class c = content(p);
  if (c != 0 && c != 1) divexact_inplace(p, c);
  return p;
}

std::optional<BTriple> heu_gcd_bi(const MultiPoly& F, const MultiPoly& G) {
  const VarSet vs = merge_vars(F, G);
  BPoly f = to_dense(F), g = to_dense(G);
  const mpz_class c = gcd(content(f), content(g));
  divexact_inplace(f, c);
  divexact_inplace(g, c);
  const MultiPoly fm = from_dense(f, vs), gm = from_dense(g, vs);
  const mpz_class fn = max_norm(f), gn = max_norm(g);
  mpz_class x = initial_point(fn, gn, ground_lc(f), ground_lc(g));
  const MultiPoly cpoly(c, vs);
  for (int attempt = 0; attempt < kHeuristicTries; ++attempt, x = next_point(x)) {
    const ZPoly ff = eval_outer(f, x), gg = eval_outer(g, x);
    if (ff.empty() || gg.empty()) continue;
    auto sub = heu_gcd_uni(ff, gg);
    if (!sub) continue;
    {
      const MultiPoly h = from_dense(bprimitive_int(interpolate_poly(sub->h, x)), vs);
      if (!h.is_zero()) {
        if (auto cf = fm.divide_exact(h)) {
          if (auto cg = gm.divide_exact(h)) return BTriple{h * cpoly, *cf, *cg};
        }
      }
    }
    {
      const MultiPoly cff = from_dense(interpolate_poly(sub->cf, x), vs);
      if (!cff.is_zero()) {
        if (auto h = fm.divide_exact(cff)) {
          if (auto cg = gm.divide_exact(*h)) return BTriple{*h * cpoly, cff, *cg};
        }
      }
    }
    {
      const MultiPoly cfg = from_dense(interpolate_poly(sub->cg, x), vs);
      if (!cfg.is_zero()) {
        if (auto h = gm.divide_exact(cfg)) {
          if (auto cf = fm.divide_exact(*h)) return BTriple{*h * cpoly, *cf, cfg};
        }
      }
    }
  }
  return std::nullopt;
}

// ---------- primitive PRS in q over Z[t] ----------

ZPoly bcontent(const BPoly& p) {
  ZPoly c;
  for (const auto& z : p) {
    c = zgcd_any(c, z);
    if (c.size() == 1 && (c[0] == 1 || c[0] == -1)) break;
  }
  return c;
}

BPoly bdiv_content(const BPoly& p, const ZPoly& c) {
  BPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].empty()) continue;
    auto q = zdiv_exact(p[i], c);
    if (!q) throw ConsistencyError("content division failed in PRS");
    out[i] = std::move(*q);
  }
  trim(out);
  return out;
}

BPoly bprimitive(const BPoly& p) {
  if (p.empty()) return p;
  ZPoly c = bcontent(p);
  if (c.back() < 0) negate_inplace(c);
  BPoly out = bdiv_content(p, c);
  if (!out.empty() && ground_lc(out) < 0) negate_inplace(out);
  return out;
}

BPoly bprem(BPoly f, const BPoly& g) {
  const int dg = static_cast<int>(g.size()) - 1;
  const ZPoly& lc = g.back();
  while (!f.empty() && static_cast<int>(f.size()) - 1 >= dg) {
    const ZPoly top = f.back();
    const int shift = static_cast<int>(f.size()) - 1 - dg;
    for (auto& z : f) z = zmul(z, lc);
    for (int j = 0; j <= dg; ++j) f[shift + j] = zsub(f[shift + j], zmul(top, g[j]));
    trim(f);
  }
  return f;
}

}  // namespace

MultiPoly gcd_prs(const MultiPoly& a, const MultiPoly& b) {
  const VarSet vs = merge_vars(a, b);
  if (a.is_zero() && b.is_zero()) return MultiPoly(vs);
  BPoly f = to_dense(a), g = to_dense(b);
  if (f.empty()) std::swap(f, g);
  if (g.empty()) {
    BPoly r = f;
    if (ground_lc(r) < 0) negate_inplace(r);
    return from_dense(r, vs);
  }
  ZPoly cf = bcontent(f), cg = bcontent(g);
  ZPoly c = zgcd_any(cf, cg);
  BPoly A = bprimitive(f), B = bprimitive(g);
  if (A.size() < B.size()) std::swap(A, B);
  while (true) {
    if (B.size() == 1) {
      A = BPoly{ZPoly{1}};
      break;
    }
    BPoly r = bprem(A, B);
    A = std::move(B);
    if (r.empty()) break;
    B = bprimitive(r);
  }
  A = bprimitive(A);
  for (auto& z : A) z = zmul(z, c);
  trim(A);
  MultiPoly res = from_dense(A, vs);
  if (res.leading_coeff() < 0) res = -res;
  return res;
}

GcdResult gcd_cofactors(const MultiPoly& a, const MultiPoly& b) {
  const VarSet vs = merge_vars(a, b);
  auto normalize = [&](MultiPoly g) -> GcdResult {
    if (g.leading_coeff() < 0) g = -g;
    auto ca = a.divide_exact(g);
    auto cb = b.divide_exact(g);
    if (!ca || !cb) throw ConsistencyError("gcd does not divide its inputs");
    return {g.with_vars(vs), ca->with_vars(vs), cb->with_vars(vs)};
  };
  if (a.is_zero() && b.is_zero()) return {MultiPoly(vs), MultiPoly(vs), MultiPoly(vs)};
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  if (a.is_constant() || b.is_constant()) return normalize(MultiPoly(gcd(a.content(), b.content()), vs));
  if (a.is_monomial() || b.is_monomial()) {
    const MultiPoly& m = a.is_monomial() ? a : b;
    const MultiPoly& o = a.is_monomial() ? b : a;
    const auto& mt = m.leading();
    const std::uint32_t e0 = std::min(mt.e0(), o.min_degree(0));
    const std::uint32_t e1 = std::min(mt.e1(), o.min_degree(1));
    return normalize(MultiPoly::monomial(gcd(mt.coeff, o.content()), e0, e1, vs));
  }
  if (a == b) return {a.leading_coeff() < 0 ? -a : a, MultiPoly(a.leading_coeff() < 0 ? -1 : 1, vs),
                      MultiPoly(a.leading_coeff() < 0 ? -1 : 1, vs)};
  if (auto r = heu_gcd_bi(a, b)) {
    GcdResult out{r->h, r->cf, r->cg};
    if (out.gcd.leading_coeff() < 0) {
      out.gcd = -out.gcd;
      out.cofactor_a = -out.cofactor_a;
      out.cofactor_b = -out.cofactor_b;
    }
    return out;
  }
  return normalize(gcd_prs(a, b));
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_cofactors(a, b).gcd; }

}  // namespace macpieri
