#pragma once

#include <cstdint>
#include <vector>

#include "ca/group.hpp"
#include "ca/lattice.hpp"
#include "ca/limits.hpp"
#include "ca/numeric.hpp"

namespace ca {

// A configuration assigns a symbol in 0..q-1 to every group element. Its
// canonical key is the base-q encoding with element g contributing
// symbols[g] * q^g.
struct Configuration {
  std::vector<int> symbols;
};

// q^n, guarded against exceeding max_configs (and uint64).
std::uint64_t config_space(int n, int q, std::uint64_t max_configs = kMaxConfigurations);

std::uint64_t encode(const Configuration& x, int q);
Configuration decode(std::uint64_t code, int n, int q);

// Right action: (x.g)[h] = x[h g^{-1}].
Configuration act(const Configuration& x, int g, const FiniteGroup& G);
std::uint64_t act_encoded(std::uint64_t x, int g, const FiniteGroup& G, int q);

Subgroup stabilizer(const Configuration& x, const FiniteGroup& G);

// All orbits of the shift action on the full configuration space. Orbits are
// numbered by increasing representative encoding; the representative is the
// least encoding in its orbit.
struct OrbitTable {
  int q = 0;
  std::uint64_t space = 0;
  std::vector<std::int32_t> orbit_id;     // size q^n
  std::vector<std::uint64_t> reps;
  std::vector<Subgroup> stabilizers;      // stabilizer of each representative
  std::vector<int> class_of;              // conjugacy class of that stabilizer
  std::vector<int> orbit_size;

  int orbit_count() const { return static_cast<int>(reps.size()); }
  std::vector<std::uint64_t> members(int orbit) const;
};

OrbitTable enumerate_orbits(const FiniteGroup& G, const SubgroupLattice& lat, int q,
                            std::uint64_t max_configs = kMaxConfigurations);

// Per conjugacy class [H]: number of orbits with stabilizer in [H], the size
// of the corresponding block of configurations, and the common orbit size
// n/|H|. Entries follow the lattice's class order.
struct AlphaEntry {
  Int alpha;
  Int b_size;
  long long orbit_size = 0;
};
struct AlphaVector {
  std::vector<AlphaEntry> classes;
};

// Moebius-inversion route: |B_[H]| = |[H]| * sum over K >= H of mu(H,K) q^{n/|K|},
// and alpha = |H| |B_[H]| / n (the division is exact).
AlphaVector alpha_mobius(const SubgroupLattice& lat, int q);

// Enumeration route: tally a prebuilt orbit table.
AlphaVector alpha_direct(const SubgroupLattice& lat, const OrbitTable& orbits);

// |Fix(H)| = q^{[G:H]}.
Int fix_count(const FiniteGroup& G, const Subgroup& H, int q);

// Number of orbits on the whole space, by the averaging count
// (1/n) * sum over g of q^{n/order(g)}.
Int total_orbits_cf(const FiniteGroup& G, int q);

}  // namespace ca
