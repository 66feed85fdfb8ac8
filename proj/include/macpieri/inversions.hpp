#pragma once

// Multidimensional inverse pairs of lower-triangular matrices indexed by Z^n,
// and exact window checks of f g = 1 and g f = 1.
//
// Entries are evaluated over a field F, either plain rationals (random numeric
// draws) or RatFunc (for example with a symbolic q). The arbitrary sequences
// a_i(y), c_i(y) are supplied by value on a finite range of y.

#include <gmpxx.h>

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "macpieri/partitions.hpp"
#include "macpieri/ratfunc.hpp"

namespace macpieri {

enum class PairFamily { prod_det, det_prod, prod_det_b, det_prod_b, closed_form, one_dim, one_dim_b };

const char* pair_family_name(PairFamily f);
PairFamily parse_pair_family(const std::string& name);
const std::vector<PairFamily>& all_pair_families();
// Families with a determinant on one side.
bool has_determinant(PairFamily f);
// One-dimensional families accept n = 1 only.
bool is_one_dimensional(PairFamily f);

template <class F>
struct PairParams {
  PairFamily family = PairFamily::prod_det;
  int n = 1;
  int lo = 0;                        // first y at which the sequences are defined
  std::vector<std::vector<F>> a, c;  // a[i][y - lo], c[i][y - lo]
  F b = F(0);
  // closed_form only: base q, t_0..t_n, u_1..u_n
  F q = F(0);
  std::vector<F> t, u;
  // prod_det_b/det_prod_b: use the ratio c_i(x_i)/c_i(k_i) to the first power instead of
  // the n-th. That variant is an inverse pair only for n = 1.
  bool first_power_prefactor = false;

  // Throws ParameterError outside the supplied range.
  const F& a_at(int i, int y) const;
  const F& c_at(int i, int y) const;
};

using InversePairSpec = PairParams<RatFunc>;
using NumericPairSpec = PairParams<mpq_class>;

enum class PairSide { f, g };

// f_{row,col} or g_{row,col}; zero unless row >= col componentwise.
template <class F>
F pair_entry(const PairParams<F>& spec, PairSide side, const IntSeq& row, const IntSeq& col);

// Multi-indices in [lo, lo + side - 1]^n.
struct Window {
  int lo = 0;
  int side = 3;
};
std::vector<IntSeq> window_indices(int n, const Window& w);

struct Violation {
  std::string relation;  // "fg" or "gf"
  IntSeq m, l;
  std::string value;
};

struct InverseReport {
  std::string family;
  int n = 0;
  Window window;
  long checked = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

template <class F>
using EntryFn = std::function<F(const IntSeq&, const IntSeq&)>;

// Sum_{m >= k >= l} f_mk g_kl = delta_ml and the dual relation for every m >= l in the window.
template <class F>
InverseReport verify_entries(const EntryFn<F>& f, const EntryFn<F>& g, int n, const Window& w);
template <class F>
InverseReport verify_inverse(const PairParams<F>& spec, const Window& w);

// Checks f2 = x_m y_k f1 and g2 = g1 / (y_k x_l) for some nonzero x, y on the
// window (a transfer of diagonal factors). Returns the number of mismatches.
template <class F>
int transfer_mismatches(const EntryFn<F>& f1, const EntryFn<F>& g1, const EntryFn<F>& f2, const EntryFn<F>& g2, int n,
                        const Window& w);

// Sequences a~(y) = a(-y), c~(y) = c(-y).
template <class F>
PairParams<F> negated(const PairParams<F>& spec);

// prod_det pair in the limit b -> infinity, with every sequence value
// v replaced by v + b/v first (the construction behind the b-deformed
// pairs). `dual` selects the transposed-type pair (f with determinant).
template <class F>
std::pair<EntryFn<F>, EntryFn<F>> substituted_limit_pair(const PairParams<F>& spec, bool dual);

// det_prod pair with b = t_0^{-1} prod u_j, a_i(y) = q^y u_i / t_i,
// c_i(y) = q^y u_i on y in [lo, hi].
template <class F>
PairParams<F> geometric_preset(const F& q, const std::vector<F>& t, const std::vector<F>& u, int lo, int hi);

// Random rational parameters on a window, redrawn until every entry m >= k of
// the window is finite and nonzero (generic position).
NumericPairSpec draw_regular(PairFamily family, int n, const Window& w, std::mt19937_64& rng);

// Report of 'draws' random draws of every family, n = 1..max_n.
std::vector<InverseReport> inversion_suite(std::uint64_t seed, int draws, int max_n, const Window& w);

}  // namespace macpieri
