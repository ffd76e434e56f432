#include "octalab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace octalab {

Perm::Perm(size_t n) : img_(n) {
  for (size_t i = 0; i < n; ++i) img_[i] = uint16_t(i);
}

Perm Perm::from_images(std::vector<uint16_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (uint16_t v : images) {
    require(v < images.size() && !seen[v], "image array is not a permutation");
    seen[v] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::then(const Perm& next) const {
  require(degree() == next.degree(), "degree mismatch in composition");
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = next.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = uint16_t(i);
  return r;
}

Perm Perm::conjugated_by(const Perm& g) const {
  require(degree() == g.degree(), "degree mismatch in conjugation");
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[g.img_[i]] = g.img_[img_[i]];
  return r;
}

bool Perm::commutes_with(const Perm& other) const {
  require(degree() == other.degree(), "degree mismatch");
  for (size_t i = 0; i < img_.size(); ++i)
    if (other.img_[img_[i]] != img_[other.img_[i]]) return false;
  return true;
}

uint64_t Perm::order() const {
  uint64_t ord = 1;
  for (size_t len : cycle_lengths()) ord = std::lcm(ord, uint64_t(len));
  return ord;
}

std::vector<size_t> Perm::cycle_lengths() const {
  std::vector<size_t> out;
  std::vector<bool> seen(img_.size(), false);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0, j = i;
    do {
      seen[j] = true;
      j = img_[j];
      ++len;
    } while (j != i);
    if (len > 1) out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

size_t Perm::num_fixed_points() const {
  size_t n = 0;
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] == i) ++n;
  return n;
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    os << '(';
    size_t j = i;
    bool first = true;
    do {
      if (!first) os << ' ';
      os << j;
      first = false;
      seen[j] = true;
      j = img_[j];
    } while (j != i);
    os << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

uint64_t Perm::hash() const {
  uint64_t h = 1469598103934665603ULL;
  for (uint16_t v : img_) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

uint32_t PermSet::insert(const Perm& p) {
  if ((items_.size() + 1) * 10 > slots_.size() * 7) rehash(slots_.size() * 2);
  uint64_t h = p.hash();
  size_t pos = h & mask_;
  while (slots_[pos] >= 0) {
    if (items_[slots_[pos]] == p) return uint32_t(slots_[pos]);
    pos = (pos + 1) & mask_;
  }
  slots_[pos] = int32_t(items_.size());
  items_.push_back(p);
  return uint32_t(items_.size() - 1);
}

int64_t PermSet::find(const Perm& p) const {
  uint64_t h = p.hash();
  size_t pos = h & mask_;
  while (slots_[pos] >= 0) {
    if (items_[slots_[pos]] == p) return slots_[pos];
    pos = (pos + 1) & mask_;
  }
  return -1;
}

void PermSet::rehash(size_t capacity) {
  size_t cap = 1024;
  while (cap < capacity) cap <<= 1;
  slots_.assign(cap, -1);
  mask_ = cap - 1;
  for (size_t i = 0; i < items_.size(); ++i) {
    size_t pos = items_[i].hash() & mask_;
    while (slots_[pos] >= 0) pos = (pos + 1) & mask_;
    slots_[pos] = int32_t(i);
  }
}

std::shared_ptr<const Domain> make_indexed_domain(const std::string& prefix, size_t n) {
  auto d = std::make_shared<Domain>();
  d->labels.reserve(n);
  for (size_t i = 0; i < n; ++i) d->labels.push_back(prefix + std::to_string(i));
  return d;
}

}  // namespace octalab
