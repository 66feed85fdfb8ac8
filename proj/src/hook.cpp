#include "macpieri/hook.hpp"

#include <algorithm>

#include "macpieri/errors.hpp"
#include "macpieri/partitions.hpp"

namespace macpieri {

namespace {

RatFunc mono(long a, long b) { return RatFunc::from_monomial(MonomialArg(a, b)); }

// prod_{i<k} (1 - a base^i)
RatFunc poch(const MonomialArg& a, const MonomialArg& base, int k) {
  RatFunc r(1);
  MonomialArg x = a;
  for (int i = 0; i < k; ++i) {
    r *= RatFunc(1) - RatFunc::from_monomial(x);
    x = x * base;
  }
  return r;
}

std::vector<int> partial_sums(const Composition& c) {
  std::vector<int> ps(c.size() + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) ps[i + 1] = ps[i] + c[i];
  return ps;
}

void require_hook(int r, int s) {
  if (r < 1 || s < 0) throw ParameterError("hook (r,1^s) needs r >= 1 and s >= 0");
}

// Laplace expansion along rows; only nonzero entries are visited, so the
// surviving permutations are enumerated directly.
struct DetExpander {
  const std::vector<std::vector<RatFunc>>& coef;
  const std::vector<std::vector<int>>& index;
  std::size_t n;
  std::vector<bool> used;
  std::vector<int> picked;
  SymFunc out;

  void run(std::size_t row, const RatFunc& acc, int sign) {
    if (row == n) {
      std::vector<int> parts;
      for (int k : picked)
        if (k > 0) parts.push_back(k);
      std::sort(parts.rbegin(), parts.rend());
      out.add(Partition(parts), sign > 0 ? acc : -acc);
      return;
    }
    // sign of the permutation: count used columns to the right of the chosen one
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || index[row][j] < 0 || coef[row][j].is_zero()) continue;
      int later = 0;
      for (std::size_t k = j + 1; k < n; ++k) later += used[k] ? 1 : 0;
      used[j] = true;
      picked.push_back(index[row][j]);
      run(row + 1, acc * coef[row][j], later % 2 ? -sign : sign);
      picked.pop_back();
      used[j] = false;
    }
  }
};

}  // namespace

SymFunc kerov_det(int r, int s) {
  require_hook(r, s);
  const std::size_t n = static_cast<std::size_t>(s) + 1;
  std::vector<int> lam(n, 1);
  lam[0] = r;
  std::vector<std::vector<RatFunc>> coef(n, std::vector<RatFunc>(n));
  std::vector<std::vector<int>> index(n, std::vector<int>(n));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const int k = lam[i - 1] - static_cast<int>(i) + static_cast<int>(j);
      index[i - 1][j - 1] = k;
      if (k < 0) continue;
      coef[i - 1][j - 1] = (RatFunc(1) - mono(k, s - static_cast<long>(j) + 1)) /
                           (RatFunc(1) - mono(lam[i - 1], s - static_cast<long>(i) + 1));
    }
  DetExpander d{coef, index, n, std::vector<bool>(n, false), {}, SymFunc(Basis::gprod, r + s)};
  d.run(0, RatFunc(1), 1);
  return d.out;
}

RatFunc hook_pieri_scalar(int r, int s) {
  require_hook(r, s);
  if (s < 1) throw ParameterError("the two-term rule needs s >= 1");
  return (RatFunc(1) - mono(0, s)) / (RatFunc(1) - mono(1, s - 1)) * (RatFunc(1) - mono(r + 1, s - 1)) /
         (RatFunc(1) - mono(r, s));
}

std::vector<ExpansionTerm> hook_expand(int r, int s, HookSide side) {
  require_hook(r, s);
  std::vector<ExpansionTerm> out;
  if (side == HookSide::q_g) {
    const RatFunc pre = (s % 2 ? RatFunc(-1) : RatFunc(1)) * poch(MonomialArg(0, 1), MonomialArg(0, 1), s) /
                        poch(MonomialArg(1, 0), MonomialArg(0, 1), s);
    for (const Composition& c : enumerate_compositions(s + 1)) {
      const auto ps = partial_sums(c);
      const std::size_t l = c.size();
      RatFunc coeff = pre;
      IntSeq idx;
      for (std::size_t i = 0; i + 1 < l; ++i) {
        coeff *= (mono(c[i], ps[i]) - RatFunc(1)) / (RatFunc(1) - mono(0, ps[i + 1]));
        idx.push_back(c[i]);
      }
      const int cl = c[l - 1];
      coeff *= (RatFunc(1) - mono(r + cl - 1, s - cl + 1)) / (RatFunc(1) - mono(r, s));
      idx.push_back(r + cl - 1);
      out.push_back({idx, coeff, c});
    }
    return out;
  }
  const RatFunc pre = ((r - 1) % 2 ? RatFunc(-1) : RatFunc(1)) * poch(MonomialArg(1, 0), MonomialArg(1, 0), r - 1) /
                      poch(MonomialArg(0, 1), MonomialArg(1, 0), r - 1);
  for (const Composition& c : enumerate_compositions(r)) {
    const auto ps = partial_sums(c);
    const std::size_t l = c.size();
    RatFunc coeff = pre;
    IntSeq idx;
    for (std::size_t i = 0; i + 1 < l; ++i) {
      coeff *= (mono(ps[i], c[i]) - RatFunc(1)) / (RatFunc(1) - mono(ps[i + 1], 0));
      idx.push_back(c[i]);
    }
    const int cl = c[l - 1];
    coeff *= (RatFunc(1) - mono(r - cl, s + cl)) / (RatFunc(1) - mono(r - 1, s + 1));
    idx.push_back(s + cl);
    out.push_back({idx, coeff, c});
  }
  return out;
}

std::vector<ExpansionTerm> column_expand(int n) {
  if (n < 1) throw ParameterError("column length must be positive");
  const RatFunc pre = (n % 2 ? RatFunc(-1) : RatFunc(1)) * poch(MonomialArg(0, 1), MonomialArg(0, 1), n) /
                      poch(MonomialArg(1, 0), MonomialArg(0, 1), n);
  std::vector<ExpansionTerm> out;
  for (const Composition& c : enumerate_compositions(n)) {
    const auto ps = partial_sums(c);
    RatFunc coeff = pre;
    for (std::size_t i = 0; i < c.size(); ++i)
      coeff *= (mono(c[i], ps[i]) - RatFunc(1)) / (RatFunc(1) - mono(0, ps[i + 1]));
    out.push_back({c, coeff, c});
  }
  return out;
}

}  // namespace macpieri
