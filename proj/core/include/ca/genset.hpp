#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ca/camonoid.hpp"
#include "ca/configs.hpp"
#include "ca/lattice.hpp"
#include "ca/numeric.hpp"

namespace ca {

// Directed graph on conjugacy classes of subgroups: an edge (i, j) means
// some member of class i is contained in some member of class j. Loops are
// included, so the edge count is at least the vertex count.
struct ClassGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<int, int>> edges;  // (sub, super), lexicographic
  std::size_t index2_count = 0;            // classes of subgroups of index 2

  std::size_t edge_count() const { return edges.size(); }
};

ClassGraph class_graph(const SubgroupLattice& lat);

enum class GeneratorKind { CrossClass, WithinClass };

// One idempotent generator: collapse the orbit of `source` onto the orbit of
// `target`. Cross-class generators realize a strict containment of
// stabilizer classes; within-class generators collapse between two orbits
// sharing the same stabilizer (they exist whenever a class carries at least
// two orbits).
struct GeneratorDescriptor {
  GeneratorKind kind = GeneratorKind::CrossClass;
  std::size_t source_class = 0;
  std::size_t target_class = 0;
  Configuration source;
  Configuration target;
};

struct RelRankReport {
  long long lower_bound = 0;  // |E_G| - |I_2| when q = 2, else |E_G|
  bool is_exact = false;      // the bound is the exact relative rank iff Dedekind
  std::vector<GeneratorDescriptor> generators;
};

// How many elements must be added to the invertible group to generate the
// whole monoid: a lower bound that is attained exactly on Dedekind groups,
// together with the explicit generator set of that size.
RelRankReport relrank(const FiniteGroup& G, const SubgroupLattice& lat,
                      const AlphaVector& alpha, int q);

// Materializes the generator descriptors as transformation tables.
std::vector<TransformationTable> generator_tables(const CaSpace& space,
                                                  const RelRankReport& rel);

struct GenerationReport {
  Int ca_total = 0;
  std::size_t ica_count = 0;
  std::size_t generator_count = 0;
  std::size_t closure_size = 0;
  bool generates = false;            // closure(ICA + V) is all of CA(G;A)
  std::vector<bool> proper_without;  // dropping generator k loses generation
  bool irredundant = false;          // every entry of proper_without
};

// Desk-scale proof that the generator set works: close the invertible group
// together with V and compare against q^(q^n), then drop each generator in
// turn to confirm none is redundant. Dedekind groups only.
GenerationReport verify_generation(const FiniteGroup& G, int q,
                                   std::uint64_t max_rules = kMaxRuleSpace,
                                   std::size_t cap = kMaxClosure);

// m(r-1) + r(r+5)/2 with m the least generator count of G and r its number
// of subgroups: an upper bound for the rank of the full monoid over a
// Dedekind group.
Int rank_upper_bound(const FiniteGroup& G, const SubgroupLattice& lat);

}  // namespace ca
