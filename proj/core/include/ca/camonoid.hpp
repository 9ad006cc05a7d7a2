#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ca/configs.hpp"
#include "ca/group.hpp"
#include "ca/limits.hpp"
#include "ca/numeric.hpp"

namespace ca {

// Materialized configuration space with every shift precomputed:
// acted[g][x] = x.g as encodings. shifted(g) is the table x -> x.g^{-1},
// which is what a local rule reads when producing the symbol at g.
struct CaSpace {
  const FiniteGroup* group = nullptr;
  int q = 0;
  std::uint64_t space = 0;
  std::vector<std::vector<std::uint32_t>> acted;

  const std::vector<std::uint32_t>& shifted(int g) const {
    return acted[static_cast<std::size_t>(group->inv[g])];
  }
};

CaSpace make_ca_space(const FiniteGroup& G, int q,
                      std::uint64_t max_configs = kMaxConfigurations);

// Local rule with full memory: one output symbol per configuration encoding.
struct LocalRule {
  int q = 0;
  std::vector<int> values;  // length q^n
};

// A cellular automaton as an explicit self-map of the configuration space.
struct TransformationTable {
  std::vector<std::uint32_t> image;

  bool operator==(const TransformationTable& other) const { return image == other.image; }
};

struct TableHash {
  std::size_t operator()(const TransformationTable& t) const;
};

// Applies the definition: the symbol of the result at g is the rule read on
// the shifted configuration x.g^{-1}. The output is equivariant by
// construction.
TransformationTable ca_from_rule(const CaSpace& space, const LocalRule& rule);

// Streams all q^(q^n) cellular automata in rule-encoding order (the rule's
// value sequence read as a base-q counter, least configuration first).
class CaEnumerator {
public:
  CaEnumerator(const CaSpace& space, std::uint64_t max_rules = kMaxRuleSpace);

  // Advances to the next CA; false when exhausted. The matching local rule
  // is available through rule() until the next call.
  bool next(TransformationTable& out);
  const LocalRule& rule() const { return rule_; }
  Int total() const { return total_; }

private:
  const CaSpace* space_;
  LocalRule rule_;
  Int total_;
  bool done_ = false;
  bool started_ = false;
};

// tau(x.g) = tau(x).g for all x, g.
bool is_equivariant(const CaSpace& space, const TransformationTable& t);

// The full-memory local rule of an equivariant map: the symbol at the
// identity of each image.
LocalRule full_rule(const CaSpace& space, const TransformationTable& t);

// Sorted list of coordinates the full-memory rule genuinely depends on (two
// configurations differing only there get different values). This is the
// unique minimal memory set of the map. Throws NotEquivariant otherwise.
std::vector<int> minimal_memory_set(const CaSpace& space, const TransformationTable& t);

TransformationTable identity_ca(const CaSpace& space);

// Applies a first, then b.
TransformationTable compose(const TransformationTable& a, const TransformationTable& b);

bool is_invertible(const TransformationTable& t);

// A configuration with no preimage. On a finite space this is equivalent to
// non-invertibility; both sides are computed independently so the
// equivalence stays testable.
bool has_garden_of_eden(const TransformationTable& t);

// Smallest composition-closed set containing the seed and the identity, by
// breadth-first right extension. Discovery order: identity, then new
// products in generation order. Throws CapExceededError at the cap.
std::vector<TransformationTable> closure(const CaSpace& space,
                                         const std::vector<TransformationTable>& seed,
                                         std::size_t cap = kMaxClosure);

// The idempotent collapsing the orbit of x onto the orbit of y along the
// action (x.g -> y.g, everything else fixed). Requires the stabilizer of x
// to lie inside the stabilizer of y, and distinct orbits.
TransformationTable idempotent_map(const CaSpace& space, std::uint64_t x, std::uint64_t y);

// The involution exchanging the orbits of x and y (x.g <-> y.g). Requires
// equal stabilizers and distinct orbits.
TransformationTable swap_map(const CaSpace& space, std::uint64_t x, std::uint64_t y);

// All invertible CA, materialized by full enumeration.
std::vector<TransformationTable> invertible_ca(const CaSpace& space,
                                               std::uint64_t max_rules = kMaxRuleSpace);

struct MemoryTheoremReport {
  Int ca_total = 0;             // q^(q^n)
  std::size_t small_memory_count = 0;  // CA whose minimal memory set is proper
  std::size_t closure_size = 0;        // size of the monoid they generate
  bool closure_proper = false;         // closure != all of CA(G;A)
  bool sigma_excluded = false;         // the constant-collapse idempotent is absent
};

// The maps with proper minimal memory set never generate the whole monoid:
// their closure misses the idempotent sending constant 0 to constant 1.
MemoryTheoremReport verify_memory_theorem(const CaSpace& space,
                                          std::uint64_t max_rules = kMaxRuleSpace,
                                          std::size_t cap = kMaxClosure);

}  // namespace ca
