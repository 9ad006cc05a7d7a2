#include "ca/lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <unordered_set>

#include "ca/error.hpp"

namespace ca {

namespace {

// Canonical tie-break: masks with equal popcount compare by their sorted
// element lists, i.e. the mask containing the smaller first-differing element
// comes first.
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t d = a ^ b;
  if (d == 0) return false;
  return (a >> std::countr_zero(d)) & 1u;
}

}  // namespace

int SubgroupLattice::index_of(std::uint64_t mask) const {
  auto it = by_mask_.find(mask);
  return it == by_mask_.end() ? -1 : it->second;
}

const std::vector<int>& SubgroupLattice::upset(int i) const {
  if (upsets_.empty()) upsets_.resize(subgroups.size());
  auto& u = upsets_[i];
  if (u.empty()) {
    for (int j = 0; j <= i; ++j)  // canonical order: larger subgroups first
      if (leq(i, j)) u.push_back(j);
  }
  return u;
}

long SubgroupLattice::mobius(int i, int j) const {
  if (!leq(i, j)) return 0;
  if (i == j) return 1;
  if (mobius_rows_.empty()) mobius_rows_.resize(subgroups.size());
  auto& row = mobius_rows_[i];
  constexpr long kUnset = std::numeric_limits<long>::min();
  if (row.empty()) row.assign(subgroups.size(), kUnset);
  if (row[j] != kUnset) return row[j];

  long sum = 0;
  for (int l : upset(i))
    if (l != j && leq(l, j)) sum += mobius(i, l);
  row[j] = -sum;
  return row[j];
}

SubgroupLattice enumerate_subgroups(const FiniteGroup& g, int max_order) {
  if (g.n > max_order || g.n > 64)
    throw LimitError("subgroup enumeration capped at order " +
                     std::to_string(std::min(max_order, 64)) + " (group has " +
                     std::to_string(g.n) + ")");

  std::vector<std::uint64_t> cyclic;
  {
    std::unordered_set<std::uint64_t> seen;
    for (int a = 0; a < g.n; ++a) {
      std::uint64_t m = 1;
      int x = a;
      while (x != 0) {
        m |= std::uint64_t{1} << x;
        x = g.mul(x, a);
      }
      if (seen.insert(m).second) cyclic.push_back(m);
    }
  }

  std::unordered_set<std::uint64_t> known(cyclic.begin(), cyclic.end());
  std::deque<std::uint64_t> work(cyclic.begin(), cyclic.end());
  while (!work.empty()) {
    std::uint64_t m = work.front();
    work.pop_front();
    for (std::uint64_t c : cyclic) {
      if ((c & ~m) == 0) continue;
      std::uint64_t j = close_mask(g, m | c);
      if (known.insert(j).second) work.push_back(j);
    }
  }

  SubgroupLattice lat;
  lat.group = &g;
  lat.subgroups.reserve(known.size());
  for (std::uint64_t m : known) lat.subgroups.push_back({m, std::popcount(m)});
  std::sort(lat.subgroups.begin(), lat.subgroups.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.order != b.order) return a.order > b.order;
              return mask_lex_less(a.mask, b.mask);
            });
  for (int i = 0; i < lat.size(); ++i) lat.by_mask_[lat.subgroups[i].mask] = i;

  lat.class_of.assign(lat.size(), -1);
  for (int i = 0; i < lat.size(); ++i) {
    if (lat.class_of[i] >= 0) continue;
    SubgroupClass cls;
    for (int x = 0; x < g.n; ++x) {
      int j = lat.index_of(conjugate_mask(g, lat.subgroups[i].mask, x));
      if (j < 0) throw std::logic_error("conjugate subgroup missing from lattice");
      if (std::find(cls.members.begin(), cls.members.end(), j) == cls.members.end())
        cls.members.push_back(j);
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();

    std::uint64_t rep_mask = lat.subgroups[cls.representative].mask;
    std::uint64_t nmask = 0;
    for (int x = 0; x < g.n; ++x)
      if (conjugate_mask(g, rep_mask, x) == rep_mask) nmask |= std::uint64_t{1} << x;
    cls.normalizer = lat.index_of(nmask);
    if (cls.normalizer < 0) throw std::logic_error("normalizer missing from lattice");

    int id = static_cast<int>(lat.classes.size());
    for (int j : cls.members) lat.class_of[j] = id;
    lat.classes.push_back(std::move(cls));
  }
  return lat;
}

bool is_dedekind(const SubgroupLattice& lat) {
  for (const auto& c : lat.classes)
    if (c.members.size() != 1) return false;
  return true;
}

MinCover min_cover(const SubgroupLattice& lat, int h_index) {
  if (h_index == 0) return {lat.order(), {}};
  MinCover mc;
  mc.least_order = lat.order() + 1;
  for (int k : lat.upset(h_index)) {
    if (k == h_index) continue;
    int ord = lat.subgroups[k].order;
    if (ord < mc.least_order) {
      mc.least_order = ord;
      mc.covers.clear();
    }
    if (ord == mc.least_order) mc.covers.push_back(k);
  }
  std::sort(mc.covers.begin(), mc.covers.end());
  return mc;
}

}  // namespace ca
