#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ca/group.hpp"
#include "ca/limits.hpp"

namespace ca {

// One conjugacy class of subgroups. Members are lattice indices; the
// representative is the member whose element list is lexicographically least
// (equivalently, the least lattice index, since class members share an order).
struct SubgroupClass {
  std::vector<int> members;
  int representative = 0;
  int normalizer = 0;  // lattice index of N_G(representative)
};

// The full subgroup lattice, canonically ordered: decreasing subgroup order,
// ties broken by lexicographic element list. Index 0 is G itself; the last
// index is the trivial subgroup.
class SubgroupLattice {
public:
  const FiniteGroup* group = nullptr;
  std::vector<Subgroup> subgroups;
  std::vector<SubgroupClass> classes;  // ordered by representative index
  std::vector<int> class_of;           // subgroup index -> class index

  int size() const { return static_cast<int>(subgroups.size()); }
  int order() const { return group->n; }

  bool leq(int i, int j) const { return subgroups[i].subset_of(subgroups[j]); }
  int index_of(std::uint64_t mask) const;  // -1 if absent
  int trivial_index() const { return size() - 1; }

  // Moebius function of the lattice, memoized on demand:
  // mu(H,H) = 1 and the values on each interval [H,K] sum to zero.
  long mobius(int i, int j) const;

  // Indices of all K with subgroups[i] <= K, decreasing order (so K = G first).
  const std::vector<int>& upset(int i) const;

private:
  friend SubgroupLattice enumerate_subgroups(const FiniteGroup&, int);
  std::unordered_map<std::uint64_t, int> by_mask_;
  mutable std::vector<std::vector<long>> mobius_rows_;
  mutable std::vector<std::vector<int>> upsets_;
};

// Enumerates every subgroup by closing joins of cyclic subgroups.
SubgroupLattice enumerate_subgroups(const FiniteGroup& g, int max_order = kMaxLatticeOrder);

// True iff every subgroup is normal (all classes are singletons).
bool is_dedekind(const SubgroupLattice& lat);

// Least order of a subgroup strictly above H, with every subgroup attaining
// it. For H = G the order is |G| and the list is empty.
struct MinCover {
  int least_order = 0;
  std::vector<int> covers;
};
MinCover min_cover(const SubgroupLattice& lat, int h_index);

}  // namespace ca
