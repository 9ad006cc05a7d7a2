#include "ca/genset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ca/error.hpp"

namespace ca {

namespace {

// Encoding order on symbol vectors: most significant digit last.
bool encoding_less(const Configuration& a, const Configuration& b) {
  for (std::size_t h = a.symbols.size(); h-- > 0;) {
    if (a.symbols[h] != b.symbols[h]) return a.symbols[h] < b.symbols[h];
  }
  return false;
}

bool in_same_orbit(const FiniteGroup& G, const Configuration& a, const Configuration& b) {
  for (int g = 0; g < G.n; ++g)
    if (act(a, g, G).symbols == b.symbols) return true;
  return false;
}

// Up to `want` configurations with stabilizer exactly K, in increasing
// encoding order and pairwise in distinct orbits. The candidates are the
// configurations constant on left cosets of K; if there are more than the
// search cap of them the caller falls back to indicator patterns.
std::vector<Configuration> exact_stab_reps(const FiniteGroup& G, const Subgroup& K,
                                           int q, std::size_t want) {
  const int n = G.n;
  std::vector<int> coset_of(n, -1);
  int cosets = 0;
  std::vector<int> members = K.elements();
  for (int h = 0; h < n; ++h) {
    if (coset_of[h] >= 0) continue;
    for (int k : members) coset_of[G.mul(h, k)] = cosets;
    ++cosets;
  }

  std::uint64_t total = 1;
  for (int i = 0; i < cosets; ++i) {
    total *= static_cast<std::uint64_t>(q);
    if (total > kMaxRepSearch) return {};
  }

  std::vector<Configuration> matches;
  std::vector<int> digit(cosets, 0);
  Configuration x;
  x.symbols.resize(n);
  for (std::uint64_t it = 0; it < total; ++it) {
    for (int h = 0; h < n; ++h) x.symbols[h] = digit[coset_of[h]];
    if (stabilizer(x, G).mask == K.mask) matches.push_back(x);
    for (int i = 0; i < cosets && ++digit[i] == q; ++i) digit[i] = 0;
  }
  std::sort(matches.begin(), matches.end(), encoding_less);

  std::vector<Configuration> picked;
  for (const Configuration& c : matches) {
    bool fresh = true;
    for (const Configuration& p : picked)
      if (in_same_orbit(G, p, c)) {
        fresh = false;
        break;
      }
    if (fresh) {
      picked.push_back(c);
      if (picked.size() == want) break;
    }
  }
  return picked;
}

Configuration indicator(const FiniteGroup& G, const Subgroup& K, int symbol) {
  Configuration x;
  x.symbols.assign(G.n, 0);
  for (int g : K.elements()) x.symbols[g] = symbol;
  return x;
}

// Indicator of K: its stabilizer is exactly K for any q >= 2, so it serves
// as a representative when the coset search is out of reach.
Configuration fallback_source(const FiniteGroup& G, const Subgroup& K) {
  return indicator(G, K, 1);
}

// A second orbit with the same exact stabilizer: a different symbol level
// when the alphabet allows it, the complement otherwise. The complement has
// a different orbit whenever the class carries two orbits at q = 2.
Configuration fallback_partner(const FiniteGroup& G, const Subgroup& K, int q) {
  if (q >= 3) return indicator(G, K, 2);
  Configuration x;
  x.symbols.assign(G.n, 1);
  for (int g : K.elements()) x.symbols[g] = 0;
  return x;
}

}  // namespace

ClassGraph class_graph(const SubgroupLattice& lat) {
  ClassGraph g;
  const std::size_t r = lat.classes.size();
  g.vertices = r;
  for (std::size_t i = 0; i < r; ++i) {
    const Subgroup& rep = lat.subgroups[lat.classes[i].representative];
    if (rep.order * 2 == lat.order()) ++g.index2_count;
    for (std::size_t j = 0; j < r; ++j) {
      bool below = false;
      for (int m : lat.classes[j].members)
        if (rep.subset_of(lat.subgroups[m])) {
          below = true;
          break;
        }
      if (below) g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

RelRankReport relrank(const FiniteGroup& G, const SubgroupLattice& lat,
                      const AlphaVector& alpha, int q) {
  if (q < 2) throw PreconditionError("BadAlphabet", "alphabet size must be at least 2");
  if (alpha.classes.size() != lat.classes.size())
    throw std::logic_error("alpha vector does not match the lattice");

  ClassGraph graph = class_graph(lat);
  RelRankReport rep;
  rep.lower_bound = static_cast<long long>(graph.edge_count());
  if (q == 2) rep.lower_bound -= static_cast<long long>(graph.index2_count);
  rep.is_exact = is_dedekind(lat);

  // One configuration per needed subgroup, with that exact stabilizer.
  std::map<int, Configuration> rep_for;
  auto rep_of = [&](int sub_index) -> const Configuration& {
    auto it = rep_for.find(sub_index);
    if (it != rep_for.end()) return it->second;
    const Subgroup& k = lat.subgroups[sub_index];
    std::vector<Configuration> found = exact_stab_reps(G, k, q, 1);
    Configuration c = found.empty() ? fallback_source(G, k) : found[0];
    return rep_for.emplace(sub_index, std::move(c)).first->second;
  };

  for (const auto& [i, j] : graph.edges) {
    if (i == j) continue;
    const Subgroup& h = lat.subgroups[lat.classes[i].representative];
    int target = -1;
    for (int m : lat.classes[j].members)
      if (h.subset_of(lat.subgroups[m])) {
        target = m;
        break;
      }
    if (target < 0) throw std::logic_error("class graph edge without containment");
    GeneratorDescriptor d;
    d.kind = GeneratorKind::CrossClass;
    d.source_class = static_cast<std::size_t>(i);
    d.target_class = static_cast<std::size_t>(j);
    d.source = rep_of(lat.classes[i].representative);
    d.target = rep_of(target);
    rep.generators.push_back(std::move(d));
  }

  for (std::size_t c = 0; c < lat.classes.size(); ++c) {
    if (alpha.classes[c].alpha < 2) continue;
    const Subgroup& h = lat.subgroups[lat.classes[c].representative];
    std::vector<Configuration> pair = exact_stab_reps(G, h, q, 2);
    GeneratorDescriptor d;
    d.kind = GeneratorKind::WithinClass;
    d.source_class = c;
    d.target_class = c;
    if (pair.size() == 2) {
      d.source = pair[0];
      d.target = pair[1];
    } else {
      d.source = fallback_source(G, h);
      d.target = fallback_partner(G, h, q);
    }
    rep.generators.push_back(std::move(d));
  }
  return rep;
}

std::vector<TransformationTable> generator_tables(const CaSpace& space,
                                                  const RelRankReport& rel) {
  std::vector<TransformationTable> out;
  out.reserve(rel.generators.size());
  for (const GeneratorDescriptor& d : rel.generators)
    out.push_back(idempotent_map(space, encode(d.source, space.q),
                                 encode(d.target, space.q)));
  return out;
}

GenerationReport verify_generation(const FiniteGroup& G, int q,
                                   std::uint64_t max_rules, std::size_t cap) {
  SubgroupLattice lat = enumerate_subgroups(G);
  if (!is_dedekind(lat))
    throw PreconditionError("NotDedekind",
                            "generation is only verified for Dedekind groups");
  AlphaVector alpha = alpha_mobius(lat, q);
  RelRankReport rel = relrank(G, lat, alpha, q);

  CaSpace space = make_ca_space(G, q);
  std::vector<TransformationTable> seed = invertible_ca(space, max_rules);
  GenerationReport out;
  out.ica_count = seed.size();
  out.ca_total = int_pow(static_cast<unsigned long>(q), space.space);

  std::vector<TransformationTable> v = generator_tables(space, rel);
  out.generator_count = v.size();
  seed.insert(seed.end(), v.begin(), v.end());

  out.closure_size = closure(space, seed, cap).size();
  out.generates = Int(static_cast<unsigned long>(out.closure_size)) == out.ca_total;

  out.proper_without.resize(v.size());
  out.irredundant = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    std::vector<TransformationTable> pruned(seed.begin(),
                                            seed.end() - static_cast<long>(v.size()));
    for (std::size_t j = 0; j < v.size(); ++j)
      if (j != k) pruned.push_back(v[j]);
    std::size_t size = closure(space, pruned, cap).size();
    out.proper_without[k] = Int(static_cast<unsigned long>(size)) < out.ca_total;
    if (!out.proper_without[k]) out.irredundant = false;
  }
  return out;
}

Int rank_upper_bound(const FiniteGroup& G, const SubgroupLattice& lat) {
  if (!is_dedekind(lat))
    throw PreconditionError("NotDedekind", "the bound requires a Dedekind group");
  long m = group_rank(G);
  long r = lat.size();
  return Int(m) * (r - 1) + Int(r) * (r + 5) / 2;
}

}  // namespace ca
