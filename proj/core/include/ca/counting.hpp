#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ca/configs.hpp"
#include "ca/lattice.hpp"
#include "ca/numeric.hpp"

namespace ca {

// Count of aperiodic configurations (trivial stabilizer), tagged with the
// formula that produced it. All four routes agree on their common domain.
enum class AcMethod { General, Cyclic, PGroup, ElementaryAbelian };

struct ApCount {
  Int value;
  AcMethod method = AcMethod::General;
};

// Moebius inversion over the full subgroup lattice.
ApCount ac_general(const SubgroupLattice& lat, int q);

// Cyclic groups: divisor Moebius function only.
ApCount ac_cyclic(int n, int q);

// p-groups: the sum collapses onto elementary abelian subgroups with
// coefficient (-1)^m p^(m(m-1)/2) for |H| = p^m. Throws NotAPGroup otherwise.
ApCount ac_pgroup(const SubgroupLattice& lat, int q);

// Elementary abelian Z_p^m in closed form via Gaussian binomials.
ApCount ac_elem_abelian(int p, int m, int q);

Int gaussian_binomial(int m, int r, int p);

// Classification helpers used to decide which formulas apply.
bool is_cyclic(const FiniteGroup& g);
std::optional<int> p_group_prime(const FiniteGroup& g);             // p with |G| = p^k
std::optional<std::pair<int, int>> elem_abelian_params(const FiniteGroup& g);  // (p, m)

// lower = q^n - (n-1) q^(n/p) (subgroup-counting bound),
// lower_coarse = q^n - q^(n-1), upper = q^n - q,
// coefficient = |{g : order(g) = p}| / (p-1), the leading term of the defect.
struct BoundsReport {
  Int ac;
  Int upper;
  Int lower;
  Int lower_coarse;
  int p = 0;
  Int coefficient;
};
BoundsReport ac_bounds(const SubgroupLattice& lat, int q);

// Exact residual (q^{n/m} - |B_[H]|/|[H]|) / q^{n/p_H} for q in [q_lo, q_hi],
// where m = |H| and p_H comes from min_cover. Exactly zero for H = G.
std::vector<Rational> asymptotic_residual(const SubgroupLattice& lat, int h_index,
                                          int q_lo, int q_hi);

// |B_[H]| computed through the quotient: for normal H it equals the aperiodic
// count of G/H. Throws NotNormal otherwise.
Int b_size_quotient(const FiniteGroup& G, const Subgroup& H, int q);

}  // namespace ca
