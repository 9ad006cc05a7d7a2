#include "ca/ica.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "ca/error.hpp"

namespace ca {

IcaStructure ica_structure(const SubgroupLattice& lat, const AlphaVector& alpha) {
  if (alpha.classes.size() != lat.classes.size())
    throw std::logic_error("alpha vector does not match the lattice");
  IcaStructure out;
  out.factors.reserve(lat.classes.size());
  for (std::size_t c = 0; c < lat.classes.size(); ++c) {
    const SubgroupClass& cls = lat.classes[c];
    const Subgroup& h = lat.subgroups[cls.representative];
    const Subgroup& nm = lat.subgroups[cls.normalizer];
    IcaFactor f;
    f.class_index = c;
    f.quotient_order = nm.order / h.order;
    f.alpha = alpha.classes[c].alpha;
    if (f.alpha > kMaxWreathAlpha)
      throw LimitError("wreath factor degree " + f.alpha.get_str() +
                       " exceeds the factorial cap");
    unsigned long a = f.alpha.get_ui();
    out.total_order *= int_pow(f.quotient_order, a) * factorial(a);
    out.factors.push_back(std::move(f));
  }
  return out;
}

Int ca_order(const FiniteGroup& G, int q) {
  if (q < 2) throw PreconditionError("BadAlphabet", "alphabet size must be at least 2");
  Int configs = int_pow(q, static_cast<unsigned long>(G.n));
  if (configs > kMaxOrderExponent)
    throw LimitError("q^n exceeds the representable exponent cap");
  return int_pow(q, configs.get_ui());
}

bool product_identity_check(const FiniteGroup& G, const OrbitTable& orbits) {
  const int n = G.n;
  const int q = orbits.q;

  // Exact stabilizer mask of every configuration, tallied as a histogram.
  // gather[g][h] = h * g^{-1} is where the symbol at h lands under the shift
  // by g, so x is fixed by g iff x[gather[g][h]] == x[h] for all h.
  std::vector<std::vector<int>> gather(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) gather[g][h] = G.mul(h, G.inv[g]);

  std::unordered_map<std::uint64_t, long> hist;
  std::vector<int> digits(n);
  for (std::uint64_t x = 0; x < orbits.space; ++x) {
    std::uint64_t rest = x;
    for (int h = 0; h < n; ++h) {
      digits[h] = static_cast<int>(rest % q);
      rest /= q;
    }
    std::uint64_t mask = 1;
    for (int g = 1; g < n; ++g) {
      bool fixed = true;
      for (int h = 0; h < n; ++h)
        if (digits[gather[g][h]] != digits[h]) {
          fixed = false;
          break;
        }
      if (fixed) mask |= std::uint64_t{1} << g;
    }
    ++hist[mask];
  }

  // For a representative with stabilizer S, the admissible images are the
  // configurations whose stabilizer contains S. Tally orbits per distinct
  // stabilizer mask and take the product of count^multiplicity.
  std::unordered_map<std::uint64_t, unsigned long> mult;
  for (int o = 0; o < orbits.orbit_count(); ++o) ++mult[orbits.stabilizers[o].mask];

  Int product = 1;
  for (const auto& [s, m] : mult) {
    long admissible = 0;
    for (const auto& [t, c] : hist)
      if ((s & ~t) == 0) admissible += c;
    product *= int_pow(Int(admissible), m);
  }
  return product == int_pow(q, orbits.space);
}

CentralizerScan centralizer_on_orbit(const FiniteGroup& G, const OrbitTable& orbits,
                                     std::size_t orbit_index) {
  std::vector<std::uint64_t> members = orbits.members(static_cast<int>(orbit_index));
  const int m = static_cast<int>(members.size());
  if (m > kMaxCentralizerOrbit)
    throw LimitError("orbit of size " + std::to_string(m) +
                     " is beyond the centralizer scan cap of " +
                     std::to_string(kMaxCentralizerOrbit));

  std::unordered_map<std::uint64_t, int> pos;
  for (int i = 0; i < m; ++i) pos[members[i]] = i;

  // A permutation commutes with the whole action iff it commutes with the
  // shifts by a generating set.
  std::vector<int> gens;
  std::uint64_t closed = 1;
  for (int g = 1; g < G.n; ++g) {
    if ((closed >> g) & 1u) continue;
    gens.push_back(g);
    closed = close_mask(G, closed | (std::uint64_t{1} << g));
  }
  std::vector<std::vector<int>> pi(gens.size(), std::vector<int>(m));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int i = 0; i < m; ++i)
      pi[k][i] = pos.at(act_encoded(members[i], gens[k], G, orbits.q));

  CentralizerScan out;
  long count = 0;
  std::uint64_t reach = 0;  // images of position 0 under commuting permutations
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool commutes = true;
    for (std::size_t k = 0; commutes && k < pi.size(); ++k)
      for (int i = 0; i < m; ++i)
        if (perm[pi[k][i]] != pi[k][perm[i]]) {
          commutes = false;
          break;
        }
    if (commutes) {
      ++count;
      reach |= std::uint64_t{1} << perm[0];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  out.order = count;
  out.transitive = (m == 64) ? (~reach == 0)
                             : (reach == ((std::uint64_t{1} << m) - 1));
  return out;
}

bool ica_transitive_on_orbit(const SubgroupLattice& lat, std::size_t class_index) {
  const SubgroupClass& cls = lat.classes.at(class_index);
  return lat.subgroups[cls.normalizer].order == lat.order();
}

}  // namespace ca
