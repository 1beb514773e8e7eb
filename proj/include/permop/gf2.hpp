#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace permop {

/// Dense bit vector over GF(2).
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int n) : n_(n), w_(static_cast<std::size_t>((n + 63) / 64), 0) {}

  int size() const { return n_; }
  bool get(int i) const { return (w_[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1u; }
  void set(int i, bool v = true) {
    auto& x = w_[static_cast<std::size_t>(i / 64)];
    const std::uint64_t m = std::uint64_t{1} << (i % 64);
    x = v ? (x | m) : (x & ~m);
  }
  void flip(int i) { w_[static_cast<std::size_t>(i / 64)] ^= std::uint64_t{1} << (i % 64); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  bool any() const {
    return std::any_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x != 0; });
  }

  /// Highest set index, or -1.
  int last() const {
    for (std::size_t i = w_.size(); i-- > 0;)
      if (w_[i]) return static_cast<int>(i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(w_[i])));
    return -1;
  }

  int popcount() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }

  std::vector<int> ones() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (get(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Dense GF(2) matrix stored by columns.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols) : rows_(rows), cols_(static_cast<std::size_t>(cols), BitVec(rows)) {}

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(cols_.size()); }

  bool get(int r, int c) const { return cols_.at(static_cast<std::size_t>(c)).get(r); }
  void set(int r, int c, bool v = true) { cols_.at(static_cast<std::size_t>(c)).set(r, v); }
  void flip(int r, int c) { cols_.at(static_cast<std::size_t>(c)).flip(r); }

  const BitVec& column(int c) const { return cols_.at(static_cast<std::size_t>(c)); }
  const std::vector<BitVec>& columns() const { return cols_; }

  void append_column(BitVec v) {
    if (v.size() != rows_) throw std::invalid_argument("Gf2Matrix: column length mismatch");
    cols_.push_back(std::move(v));
  }

  bool is_zero() const {
    return std::none_of(cols_.begin(), cols_.end(), [](const BitVec& v) { return v.any(); });
  }

  BitVec apply(const BitVec& x) const {
    if (x.size() != cols()) throw std::invalid_argument("Gf2Matrix::apply: size mismatch");
    BitVec y(rows_);
    for (int c = 0; c < cols(); ++c)
      if (x.get(c)) y ^= cols_[static_cast<std::size_t>(c)];
    return y;
  }

  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Gf2Matrix: product shape mismatch");
    Gf2Matrix out(a.rows(), 0);
    for (const auto& col : b.cols_) out.cols_.push_back(a.apply(col));
    return out;
  }

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

  int rank() const {
    std::vector<BitVec> reduced;
    std::vector<int> pivot_of(static_cast<std::size_t>(rows_), -1);
    int r = 0;
    for (BitVec v : cols_) {
      int low;
      while ((low = v.last()) >= 0 && pivot_of[static_cast<std::size_t>(low)] >= 0)
        v ^= reduced[static_cast<std::size_t>(pivot_of[static_cast<std::size_t>(low)])];
      if (low >= 0) {
        pivot_of[static_cast<std::size_t>(low)] = static_cast<int>(reduced.size());
        reduced.push_back(std::move(v));
        ++r;
      }
    }
    return r;
  }

  /// Basis of {x : A x = 0}, as vectors of length cols().
  std::vector<BitVec> kernel_basis() const {
    std::vector<BitVec> reduced, track;
    std::vector<int> pivot_of(static_cast<std::size_t>(rows_), -1);
    std::vector<BitVec> kernel;
    for (int c = 0; c < cols(); ++c) {
      BitVec v = cols_[static_cast<std::size_t>(c)];
      BitVec t(cols());
      t.set(c);
      int low;
      while ((low = v.last()) >= 0 && pivot_of[static_cast<std::size_t>(low)] >= 0) {
        const auto p = static_cast<std::size_t>(pivot_of[static_cast<std::size_t>(low)]);
        v ^= reduced[p];
        t ^= track[p];
      }
      if (low >= 0) {
        pivot_of[static_cast<std::size_t>(low)] = static_cast<int>(reduced.size());
        reduced.push_back(std::move(v));
        track.push_back(std::move(t));
      } else {
        kernel.push_back(std::move(t));
      }
    }
    return kernel;
  }

 private:
  int rows_ = 0;
  std::vector<BitVec> cols_;
};

}  // namespace permop
