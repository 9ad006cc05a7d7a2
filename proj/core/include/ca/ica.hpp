#pragma once

#include <cstddef>
#include <vector>

#include "ca/configs.hpp"
#include "ca/lattice.hpp"
#include "ca/numeric.hpp"

namespace ca {

// One wreath factor (N_G(H)/H) wr Sym_alpha, attached to a conjugacy class
// of subgroups.  quotient_order is |N_G(H)| / |H|.
struct IcaFactor {
  std::size_t class_index = 0;
  Int quotient_order = 0;
  Int alpha = 0;
};

// The invertible cellular automata form a direct product of wreath factors,
// one per conjugacy class of subgroups of G.
struct IcaStructure {
  std::vector<IcaFactor> factors;
  Int total_order = 1;
};

struct CentralizerScan {
  Int order = 0;
  bool transitive = false;
};

// Structure and exact order of the group of invertible CA.  Factors follow
// the canonical class order of the lattice.  |C wr Sym_a| = |C|^a * a!.
IcaStructure ica_structure(const SubgroupLattice& lat, const AlphaVector& alpha);

// q^(q^n), the number of cellular automata over G and an alphabet of size q.
Int ca_order(const FiniteGroup& G, int q);

// Consistency oracle: an equivariant map is freely determined by one image
// per orbit, constrained only by stabilizer containment.  Multiplying the
// number of admissible images over all orbits must reproduce q^(q^n).
bool product_identity_check(const FiniteGroup& G, const OrbitTable& orbits);

// Brute-force centralizer of the G-action on a single orbit: scans all
// permutations of the orbit and keeps those commuting with the action.
// Only feasible for tiny orbits; throws LimitError above the cap.
CentralizerScan centralizer_on_orbit(const FiniteGroup& G, const OrbitTable& orbits,
                                     std::size_t orbit_index);

// Structural criterion for the same question: the centralizer acts
// transitively on an orbit with stabilizer class [H] iff H is normal.
bool ica_transitive_on_orbit(const SubgroupLattice& lat, std::size_t class_index);

}  // namespace ca
