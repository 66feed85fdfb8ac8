#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace macpieri {

// Finite integer sequence, any sign, any order.
using IntSeq = std::vector<int>;
// Sequence of positive integers.
using Composition = std::vector<int>;
// Nonnegative integer vector.
using ThetaVector = std::vector<int>;

class Partition {
 public:
  Partition() = default;
  // Throws ParameterError unless the entries are weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  // Partition (1^{m_1} 2^{m_2} ...) from multiplicities m[0] = m_1, m[1] = m_2, ...
  static Partition from_multiplicities(const std::vector<int>& m);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  // i-th part, 1-based, zero beyond the length.
  int operator[](int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int multiplicity(int i) const;
  // Multiplicities m_1..m_k for k = max(largest part, min_len).
  std::vector<int> multiplicities(int min_len = 0) const;
  // Parts padded with zeros to the requested length.
  std::vector<int> padded(int len) const;

  Partition conjugate() const;
  mpz_class z_factor() const;
  bool dominated_by(const Partition& o) const;  // *this <= o in dominance order
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

bool is_partition(const IntSeq& s);
// Sorted copy of a nonnegative sequence with zeros dropped.
Partition sorted_partition(const IntSeq& s);

// Partitions of n, reverse-lexicographic order. Bounds < 0 mean unbounded.
std::vector<Partition> enumerate_partitions(int n, int max_len = -1, int max_part = -1);
// All partitions of weight <= n in order of weight, then reverse-lex.
std::vector<Partition> enumerate_partitions_up_to(int n, int max_len = -1, int max_part = -1);
// Compositions of n: by length, then reverse-lexicographic within a length.
std::vector<Composition> enumerate_compositions(int n);
// theta in N^n with |theta| <= bound, lexicographic.
std::vector<ThetaVector> enumerate_theta(int n, int bound);

// Skew diagram kappa - lambda has at most one box per column.
bool is_horizontal_strip(const Partition& kappa, const Partition& lambda);

// Strictly upper triangular n x n matrix of nonnegative integers; indices are 1-based.
class ThetaMatrix {
 public:
  ThetaMatrix() = default;
  explicit ThetaMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n * n), 0) {}
  int size() const { return n_; }
  int operator()(int i, int j) const { return i < j ? e_[idx(i, j)] : 0; }
  void set(int i, int j, int v);
  int total() const;
  // Column j (1-based) entries theta_{1j}..theta_{j-1,j}.
  std::vector<int> column(int j) const;
  // Embed into a larger size, new rows/columns zero.
  ThetaMatrix grown(int n) const;
  std::string to_string() const;
  auto operator<=>(const ThetaMatrix&) const = default;
  bool operator==(const ThetaMatrix&) const = default;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }
  int n_ = 0;
  std::vector<int> e_;
};

std::string seq_to_string(const std::vector<int>& s);
// Parses "2,1,1" (empty string gives the empty sequence). Throws ParameterError.
IntSeq parse_int_seq(const std::string& text);

}  // namespace macpieri
