#include "octalab/perm_group.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>

namespace octalab {

PermGroup PermGroup::closure(std::shared_ptr<const Domain> domain, std::vector<Perm> generators,
                             uint64_t element_budget) {
  require(domain != nullptr, "closure needs a domain");
  for (const Perm& g : generators)
    require(g.degree() == domain->size(), "generator degree does not match domain");

  PermGroup grp;
  grp.domain_ = std::move(domain);
  grp.gens_ = std::move(generators);
  grp.elems_.insert(Perm(grp.domain_->size()));
  for (size_t head = 0; head < grp.elems_.size(); ++head) {
    for (const Perm& g : grp.gens_) {
      // copy: PermSet may reallocate its storage while we hold the product
      Perm product = grp.elems_[head].then(g);
      grp.elems_.insert(product);
      if (grp.elems_.size() > element_budget)
        throw BudgetExceeded("group closure exceeded element budget of " +
                             std::to_string(element_budget) +
                             " (wrong generators or budget too small)");
    }
  }
  return grp;
}

uint32_t PermGroup::index_of(const Perm& p) const {
  int64_t i = elems_.find(p);
  require(i >= 0, "permutation is not a group element");
  return uint32_t(i);
}

std::vector<uint32_t> PermGroup::conjugacy_class(const Perm& g) const {
  uint32_t start = index_of(g);
  std::vector<uint32_t> orbit{start};
  std::set<uint32_t> seen{start};
  for (size_t head = 0; head < orbit.size(); ++head) {
    const Perm& x = elems_[orbit[head]];
    for (const Perm& h : gens_) {
      uint32_t y = index_of(x.conjugated_by(h));
      if (seen.insert(y).second) orbit.push_back(y);
    }
  }
  return orbit;
}

uint64_t PermGroup::centralizer_order(const Perm& g) const {
  return order() / conjugacy_class(g).size();
}

std::vector<Perm> PermGroup::central_involutions() const {
  const int group_val = valuation2(order());
  std::vector<Perm> out;
  std::vector<bool> classified(elems_.size(), false);
  for (size_t i = 0; i < elems_.size(); ++i) {
    const Perm& g = elems_[i];
    if (classified[i] || g.is_identity() || !g.then(g).is_identity()) continue;
    std::vector<uint32_t> cls = conjugacy_class(g);
    for (uint32_t j : cls) classified[j] = true;
    uint64_t centralizer = order() / cls.size();
    if (valuation2(centralizer) == group_val)
      for (uint32_t j : cls) out.push_back(elems_[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Triple make_triple(const PermGroup& g, const Perm& x, const Perm& y) {
  require(!x.is_identity() && !y.is_identity() && x != y, "triple needs distinct involutions");
  require(x.then(x).is_identity() && y.then(y).is_identity(), "triple needs involutions");
  require(x.commutes_with(y), "triple needs a commuting pair");
  Triple t{g.index_of(x), g.index_of(y), g.index_of(x.then(y))};
  std::sort(t.begin(), t.end());
  return t;
}

namespace {

Triple conjugate_triple(const PermGroup& g, const Triple& t, const Perm& h) {
  Triple r{g.index_of(g.element(t[0]).conjugated_by(h)),
           g.index_of(g.element(t[1]).conjugated_by(h)),
           g.index_of(g.element(t[2]).conjugated_by(h))};
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

TripleOrbits triple_orbits(const PermGroup& g, const std::vector<Triple>& triples) {
  TripleOrbits result;
  result.triples = triples;
  result.label.assign(triples.size(), UINT32_MAX);
  std::map<Triple, uint32_t> pos;
  for (uint32_t i = 0; i < triples.size(); ++i) pos[triples[i]] = i;

  for (uint32_t i = 0; i < triples.size(); ++i) {
    if (result.label[i] != UINT32_MAX) continue;
    uint32_t id = uint32_t(result.orbit_sizes.size());
    std::vector<Triple> orbit{triples[i]};
    std::set<Triple> seen{triples[i]};
    result.label[i] = id;
    for (size_t head = 0; head < orbit.size(); ++head)
      for (const Perm& h : g.generators()) {
        Triple t = conjugate_triple(g, orbit[head], h);
        if (seen.insert(t).second) {
          orbit.push_back(t);
          auto it = pos.find(t);
          if (it != pos.end()) result.label[it->second] = id;
        }
      }
    result.orbit_sizes.push_back(orbit.size());
  }
  return result;
}

uint64_t PermGroup::triple_orbit_size(const Perm& x, const Perm& y) const {
  Triple t = make_triple(*this, x, y);
  std::vector<Triple> orbit{t};
  std::set<Triple> seen{t};
  for (size_t head = 0; head < orbit.size(); ++head)
    for (const Perm& h : gens_) {
      Triple u = conjugate_triple(*this, orbit[head], h);
      if (seen.insert(u).second) orbit.push_back(u);
    }
  return orbit.size();
}

std::string dihedral_type(const Perm& x, const Perm& y) {
  require(x.then(x).is_identity() && !x.is_identity(), "dihedral_type needs involutions");
  require(y.then(y).is_identity() && !y.is_identity(), "dihedral_type needs involutions");
  uint64_t n = x.then(y).order();
  switch (n) {
    case 1:
      return "C2";
    case 2:
      return "C2xC2";
    case 3:
      return "S3";
    case 4:
      return "D8";
    case 5:
      return "D10";
    default:
      return "D" + std::to_string(2 * n);
  }
}

uint64_t generator_list_hash(const std::vector<Perm>& gens) {
  uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(gens.size());
  for (const Perm& g : gens) {
    mix(g.degree());
    for (uint16_t v : g.images()) mix(v);
  }
  return h;
}

uint64_t PermGroup::generator_hash() const { return generator_list_hash(gens_); }

// --- serialization -------------------------------------------------------
//
// Binary, versioned. Layout:
//   magic "OCTGRP\n", u32 version, u64 generator hash,
//   u32 domain size, labels as (u32 length, bytes),
//   u32 generator count, generators as u16 image arrays,
//   u64 element count, elements as u16 image arrays (enumeration order).

namespace {

constexpr char kMagic[8] = {'O', 'C', 'T', 'G', 'R', 'P', '\n', '\0'};
constexpr uint32_t kVersion = 1;

template <typename T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T take(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  require(bool(is), "group file truncated");
  return v;
}

void put_perm(std::ostream& os, const Perm& p) {
  os.write(reinterpret_cast<const char*>(p.images().data()),
           std::streamsize(p.degree() * sizeof(uint16_t)));
}

Perm take_perm(std::istream& is, size_t degree) {
  std::vector<uint16_t> img(degree);
  is.read(reinterpret_cast<char*>(img.data()), std::streamsize(degree * sizeof(uint16_t)));
  require(bool(is), "group file truncated");
  return Perm::from_images(std::move(img));
}

}  // namespace

void PermGroup::save(std::ostream& os) const {
  os.write(kMagic, sizeof(kMagic));
  put(os, kVersion);
  put(os, generator_hash());
  put(os, uint32_t(domain_->size()));
  for (const std::string& label : domain_->labels) {
    put(os, uint32_t(label.size()));
    os.write(label.data(), std::streamsize(label.size()));
  }
  put(os, uint32_t(gens_.size()));
  for (const Perm& g : gens_) put_perm(os, g);
  put(os, uint64_t(elems_.size()));
  for (size_t i = 0; i < elems_.size(); ++i) put_perm(os, elems_[i]);
}

PermGroup PermGroup::load(std::istream& is) {
  char magic[8];
  is.read(magic, sizeof(magic));
  require(bool(is) && std::equal(magic, magic + 8, kMagic), "not a group file (bad magic)");
  uint32_t version = take<uint32_t>(is);
  require(version == kVersion, "unsupported group file version ", version);
  uint64_t claimed_hash = take<uint64_t>(is);

  auto domain = std::make_shared<Domain>();
  uint32_t n = take<uint32_t>(is);
  domain->labels.resize(n);
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t len = take<uint32_t>(is);
    require(len < 4096, "label too long (corrupt file?)");
    domain->labels[i].resize(len);
    is.read(domain->labels[i].data(), len);
    require(bool(is), "group file truncated");
  }

  PermGroup grp;
  grp.domain_ = domain;
  uint32_t ngens = take<uint32_t>(is);
  for (uint32_t i = 0; i < ngens; ++i) grp.gens_.push_back(take_perm(is, n));
  require(grp.generator_hash() == claimed_hash, "generator hash mismatch (corrupt file?)");

  uint64_t count = take<uint64_t>(is);
  for (uint64_t i = 0; i < count; ++i) {
    uint32_t idx = grp.elems_.insert(take_perm(is, n));
    require(idx == i, "duplicate element in group file");
  }
  require(count > 0 && grp.elems_[0].is_identity(), "group file must start with the identity");
  for (const Perm& g : grp.gens_)
    require(grp.elems_.contains(g), "group file is missing a generator");
  return grp;
}

}  // namespace octalab
