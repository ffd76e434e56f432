#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "octalab/common.hpp"

namespace octalab {

// Permutation of {0, ..., n-1} as an image array.
// Composition convention: (a.then(b))[i] == b[a[i]]  (apply a first, then b).
class Perm {
 public:
  Perm() = default;
  explicit Perm(size_t n);  // identity
  static Perm from_images(std::vector<uint16_t> images);

  size_t degree() const { return img_.size(); }
  uint16_t operator[](size_t i) const { return img_[i]; }
  const std::vector<uint16_t>& images() const { return img_; }

  bool is_identity() const;
  Perm then(const Perm& next) const;
  Perm inverse() const;
  // g^-1 * this * g under the then-convention (conjugation in the acting group).
  Perm conjugated_by(const Perm& g) const;
  bool commutes_with(const Perm& other) const;
  uint64_t order() const;

  // Cycle lengths > 1, sorted; fixed points are counted separately.
  std::vector<size_t> cycle_lengths() const;
  size_t num_fixed_points() const;
  std::string cycle_string() const;

  uint64_t hash() const;
  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<uint16_t> img_;
};

// Insertion-ordered set of permutations with an open-addressing index.
// Element indices are stable and reproducible (hash only accelerates lookup).
class PermSet {
 public:
  PermSet() { rehash(1024); }

  // Returns the element's index; inserts if absent.
  uint32_t insert(const Perm& p);
  // Returns index or -1.
  int64_t find(const Perm& p) const;
  bool contains(const Perm& p) const { return find(p) >= 0; }

  size_t size() const { return items_.size(); }
  const Perm& operator[](size_t i) const { return items_[i]; }
  const std::vector<Perm>& items() const { return items_; }

 private:
  void rehash(size_t capacity);

  std::vector<Perm> items_;
  std::vector<int32_t> slots_;
  size_t mask_ = 0;
};

struct Domain {
  std::vector<std::string> labels;
  size_t size() const { return labels.size(); }
};

std::shared_ptr<const Domain> make_indexed_domain(const std::string& prefix, size_t n);

}  // namespace octalab
