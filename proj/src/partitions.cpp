#include "macpieri/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "macpieri/errors.hpp"

namespace macpieri {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ParameterError("partition with a negative part: " + seq_to_string(parts_));
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ParameterError("partition parts must be weakly decreasing: " + seq_to_string(parts_));
  }
}

Partition Partition::from_multiplicities(const std::vector<int>& m) {
  std::vector<int> parts;
  for (int i = static_cast<int>(m.size()); i >= 1; --i) {
    if (m[i - 1] < 0) throw ParameterError("negative multiplicity");
    parts.insert(parts.end(), static_cast<std::size_t>(m[i - 1]), i);
  }
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<int> Partition::multiplicities(int min_len) const {
  std::vector<int> m(static_cast<std::size_t>(std::max(largest(), min_len)), 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p - 1)];
  return m;
}

std::vector<int> Partition::padded(int len) const {
  std::vector<int> r = parts_;
  if (static_cast<int>(r.size()) < len) r.resize(static_cast<std::size_t>(len), 0);
  return r;
}

Partition Partition::conjugate() const {
  std::vector<int> c(static_cast<std::size_t>(largest()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

mpz_class Partition::z_factor() const {
  mpz_class z = 1;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    const auto m = static_cast<unsigned long>(j - i);
    mpz_class f, pw;
    mpz_fac_ui(f.get_mpz_t(), m);
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts_[i]), m);
    z *= f * pw;
    i = j;
  }
  return z;
}

bool Partition::dominated_by(const Partition& o) const {
  if (weight() != o.weight()) return false;
  int a = 0, b = 0;
  const int n = std::max(length(), o.length());
  for (int i = 1; i <= n; ++i) {
    a += (*this)[i];
    b += o[i];
    if (a > b) return false;
  }
  return true;
}

std::string Partition::to_string() const { return "(" + seq_to_string(parts_) + ")"; }

bool is_partition(const IntSeq& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0) return false;
    if (i > 0 && s[i] > s[i - 1]) return false;
  }
  return true;
}

Partition sorted_partition(const IntSeq& s) {
  std::vector<int> r;
  for (int x : s) {
    if (x < 0) throw ParameterError("negative entry cannot be sorted into a partition");
    if (x > 0) r.push_back(x);
  }
  std::sort(r.begin(), r.end(), std::greater<>());
  return Partition(std::move(r));
}

std::vector<Partition> enumerate_partitions(int n, int max_len, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, max_part < 0 ? n : max_part);
  return out;
}

std::vector<Partition> enumerate_partitions_up_to(int n, int max_len, int max_part) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto part = enumerate_partitions(k, max_len, max_part);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Composition> enumerate_compositions(int n) {
  if (n < 1) throw ParameterError("compositions need n >= 1");
  std::vector<Composition> all;
  Composition cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      all.push_back(cur);
      return;
    }
    for (int p = remaining; p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p);
      cur.pop_back();
    }
  };
  rec(n);
  std::stable_sort(all.begin(), all.end(), [](const Composition& a, const Composition& b) { return a.size() < b.size(); });
  return all;
}

std::vector<ThetaVector> enumerate_theta(int n, int bound) {
  std::vector<ThetaVector> out;
  if (bound < 0) return out;
  ThetaVector cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(i)] = v;
      rec(i + 1, left - v);
    }
    cur[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, bound);
  return out;
}

bool is_horizontal_strip(const Partition& kappa, const Partition& lambda) {
  const int n = std::max(kappa.length(), lambda.length());
  for (int i = 1; i <= n; ++i) {
    if (kappa[i] < lambda[i]) return false;
    if (i > 1 && kappa[i] > lambda[i - 1]) return false;
  }
  return true;
}

void ThetaMatrix::set(int i, int j, int v) {
  if (i < 1 || j > n_ || i >= j) throw ParameterError("theta matrix entries live strictly above the diagonal");
  if (v < 0) throw ParameterError("theta matrix entries are nonnegative");
  e_[idx(i, j)] = v;
}

int ThetaMatrix::total() const { return std::accumulate(e_.begin(), e_.end(), 0); }

std::vector<int> ThetaMatrix::column(int j) const {
  std::vector<int> c;
  for (int i = 1; i < j; ++i) c.push_back((*this)(i, j));
  return c;
}

ThetaMatrix ThetaMatrix::grown(int n) const {
  ThetaMatrix r(n);
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) r.set(i, j, (*this)(i, j));
  return r;
}

std::string ThetaMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if ((*this)(i, j) != 0) {
        os << (first ? "" : " ") << "t" << i << j << "=" << (*this)(i, j);
        first = false;
      }
  os << "]";
  return os.str();
}

std::string seq_to_string(const std::vector<int>& s) {
  std::string r;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) r += ",";
    r += std::to_string(s[i]);
  }
  return r;
}

IntSeq parse_int_seq(const std::string& text) {
  IntSeq out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ParameterError("not an integer: '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw ParameterError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace macpieri
