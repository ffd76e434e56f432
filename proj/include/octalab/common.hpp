#pragma once

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace octalab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void msg_cat(std::ostringstream&) {}
template <typename T, typename... Rest>
void msg_cat(std::ostringstream& os, const T& v, const Rest&... rest) {
  os << v;
  msg_cat(os, rest...);
}
}  // namespace detail

template <typename... Args>
[[noreturn]] void fail(const Args&... args) {
  std::ostringstream os;
  detail::msg_cat(os, args...);
  throw Error(os.str());
}

template <typename... Args>
void require(bool cond, const Args&... args) {
  if (!cond) fail(args...);
}

// Square 0/1 matrix stored as 64-bit words per row. Used for adjacency and
// set masks; rows are directly usable as bitsets over the vertex range.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), words_(cols == 0 ? 0 : (cols + 63) / 64),
        bits_(rows * words_, 0) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t words() const { return words_; }

  bool get(size_t r, size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(size_t r, size_t c) { bits_[r * words_ + c / 64] |= uint64_t(1) << (c % 64); }
  void clear(size_t r, size_t c) { bits_[r * words_ + c / 64] &= ~(uint64_t(1) << (c % 64)); }

  const uint64_t* row(size_t r) const { return bits_.data() + r * words_; }
  uint64_t* row(size_t r) { return bits_.data() + r * words_; }

  size_t count_and(size_t r1, size_t r2) const {
    const uint64_t* a = row(r1);
    const uint64_t* b = row(r2);
    size_t total = 0;
    for (size_t w = 0; w < words_; ++w) total += std::popcount(a[w] & b[w]);
    return total;
  }

  size_t row_count(size_t r) const {
    const uint64_t* a = row(r);
    size_t total = 0;
    for (size_t w = 0; w < words_; ++w) total += std::popcount(a[w]);
    return total;
  }

  bool operator==(const BitMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
  }

 private:
  size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<uint64_t> bits_;
};

// Single bit row with the same word layout; handy for set arithmetic over points.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(size_t n) : n_(n), bits_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }
  bool get(size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1u; }
  void set(size_t i) { bits_[i / 64] |= uint64_t(1) << (i % 64); }
  void reset(size_t i) { bits_[i / 64] &= ~(uint64_t(1) << (i % 64)); }

  size_t count() const {
    size_t total = 0;
    for (uint64_t w : bits_) total += std::popcount(w);
    return total;
  }

  size_t count_and(const uint64_t* other) const {
    size_t total = 0;
    for (size_t w = 0; w < bits_.size(); ++w) total += std::popcount(bits_[w] & other[w]);
    return total;
  }

  const uint64_t* words() const { return bits_.data(); }
  bool operator==(const BitRow&) const = default;

 private:
  size_t n_ = 0;
  std::vector<uint64_t> bits_;
};

inline int valuation2(uint64_t n) {
  require(n != 0, "valuation2(0) undefined");
  return std::countr_zero(n);
}

}  // namespace octalab
