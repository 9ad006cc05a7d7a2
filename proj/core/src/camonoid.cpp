#include "ca/camonoid.hpp"

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ca/error.hpp"

namespace ca {

namespace {

// Membership mask of the stabilizer of x, read off the shift tables.
std::uint64_t stab_mask(const CaSpace& space, std::uint64_t x) {
  std::uint64_t mask = 0;
  for (int g = 0; g < space.group->n; ++g)
    if (space.acted[g][x] == x) mask |= std::uint64_t{1} << g;
  return mask;
}

bool same_orbit(const CaSpace& space, std::uint64_t x, std::uint64_t y) {
  for (int g = 0; g < space.group->n; ++g)
    if (space.acted[g][x] == y) return true;
  return false;
}

// Coordinates on which a full-memory rule value sequence genuinely depends.
std::vector<int> dependency_set(int n, int q, const std::vector<int>& values) {
  std::vector<int> deps;
  std::uint64_t stride = 1;
  for (int g = 0; g < n; ++g, stride *= q) {
    bool depends = false;
    for (std::uint64_t x = 0; x < values.size() && !depends; ++x) {
      if ((x / stride) % q != 0) continue;
      for (int k = 1; k < q; ++k)
        if (values[x + k * stride] != values[x]) {
          depends = true;
          break;
        }
    }
    if (depends) deps.push_back(g);
  }
  return deps;
}

}  // namespace

std::size_t TableHash::operator()(const TransformationTable& t) const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t w : t.image) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

CaSpace make_ca_space(const FiniteGroup& G, int q, std::uint64_t max_configs) {
  CaSpace s;
  s.group = &G;
  s.q = q;
  s.space = config_space(G.n, q, max_configs);
  const int n = G.n;

  // (x.g)[h] = x[h g^{-1}]: per shift, a permutation of the digit positions.
  std::vector<std::vector<int>> gather(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) gather[g][h] = G.mul(h, G.inv[g]);

  std::vector<std::uint64_t> pw(n);
  pw[0] = 1;
  for (int h = 1; h < n; ++h) pw[h] = pw[h - 1] * q;

  s.acted.assign(n, std::vector<std::uint32_t>(s.space));
  std::vector<int> digits(n);
  for (std::uint64_t x = 0; x < s.space; ++x) {
    std::uint64_t rest = x;
    for (int h = 0; h < n; ++h) {
      digits[h] = static_cast<int>(rest % q);
      rest /= q;
    }
    for (int g = 0; g < n; ++g) {
      std::uint64_t code = 0;
      for (int h = 0; h < n; ++h) code += digits[gather[g][h]] * pw[h];
      s.acted[g][x] = static_cast<std::uint32_t>(code);
    }
  }
  return s;
}

TransformationTable ca_from_rule(const CaSpace& space, const LocalRule& rule) {
  if (rule.q != space.q || rule.values.size() != space.space)
    throw ValidationError("BadShape",
                          "local rule has " + std::to_string(rule.values.size()) +
                              " values, expected " + std::to_string(space.space));
  const int n = space.group->n;
  std::vector<const std::uint32_t*> rows(n);
  for (int g = 0; g < n; ++g) rows[g] = space.shifted(g).data();

  TransformationTable t;
  t.image.resize(space.space);
  for (std::uint64_t x = 0; x < space.space; ++x) {
    std::uint64_t code = 0;
    std::uint64_t pw = 1;
    for (int g = 0; g < n; ++g, pw *= space.q)
      code += static_cast<std::uint64_t>(rule.values[rows[g][x]]) * pw;
    t.image[x] = static_cast<std::uint32_t>(code);
  }
  return t;
}

CaEnumerator::CaEnumerator(const CaSpace& space, std::uint64_t max_rules)
    : space_(&space) {
  total_ = int_pow(static_cast<unsigned long>(space.q), space.space);
  if (total_ > max_rules)
    throw LimitError("rule space " + total_.get_str() + " exceeds the cap of " +
                     std::to_string(max_rules));
  rule_.q = space.q;
  rule_.values.assign(space.space, 0);
}

bool CaEnumerator::next(TransformationTable& out) {
  if (done_) return false;
  if (started_) {
    std::size_t i = 0;
    while (i < rule_.values.size() && ++rule_.values[i] == rule_.q) {
      rule_.values[i] = 0;
      ++i;
    }
    if (i == rule_.values.size()) {
      done_ = true;
      return false;
    }
  }
  started_ = true;
  out = ca_from_rule(*space_, rule_);
  return true;
}

bool is_equivariant(const CaSpace& space, const TransformationTable& t) {
  if (t.image.size() != space.space) return false;
  for (int g = 0; g < space.group->n; ++g) {
    const std::vector<std::uint32_t>& shift = space.acted[g];
    for (std::uint64_t x = 0; x < space.space; ++x)
      if (t.image[shift[x]] != shift[t.image[x]]) return false;
  }
  return true;
}

LocalRule full_rule(const CaSpace& space, const TransformationTable& t) {
  LocalRule r;
  r.q = space.q;
  r.values.resize(space.space);
  for (std::uint64_t x = 0; x < space.space; ++x)
    r.values[x] = static_cast<int>(t.image[x] % space.q);
  return r;
}

std::vector<int> minimal_memory_set(const CaSpace& space, const TransformationTable& t) {
  if (!is_equivariant(space, t))
    throw PreconditionError("NotEquivariant", "map is not a cellular automaton");
  return dependency_set(space.group->n, space.q, full_rule(space, t).values);
}

TransformationTable identity_ca(const CaSpace& space) {
  TransformationTable t;
  t.image.resize(space.space);
  std::iota(t.image.begin(), t.image.end(), 0u);
  return t;
}

TransformationTable compose(const TransformationTable& a, const TransformationTable& b) {
  TransformationTable t;
  t.image.resize(a.image.size());
  for (std::size_t x = 0; x < a.image.size(); ++x) t.image[x] = b.image[a.image[x]];
  return t;
}

bool is_invertible(const TransformationTable& t) {
  std::vector<bool> seen(t.image.size(), false);
  for (std::uint32_t y : t.image) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

bool has_garden_of_eden(const TransformationTable& t) {
  std::vector<bool> hit(t.image.size(), false);
  for (std::uint32_t y : t.image) hit[y] = true;
  for (bool b : hit)
    if (!b) return true;
  return false;
}

std::vector<TransformationTable> closure(const CaSpace& space,
                                         const std::vector<TransformationTable>& seed,
                                         std::size_t cap) {
  std::vector<TransformationTable> out;
  std::unordered_set<TransformationTable, TableHash> known;
  auto push = [&](const TransformationTable& t) {
    if (known.contains(t)) return;
    if (out.size() >= cap) throw CapExceededError(out.size(), cap);
    known.insert(t);
    out.push_back(t);
  };

  push(identity_ca(space));
  TransformationTable scratch;
  scratch.image.resize(space.space);
  for (std::size_t next = 0; next < out.size(); ++next)
    for (const TransformationTable& s : seed) {
      // scratch = out[next] then s; re-read out[next] each round, push may
      // grow the vector.
      for (std::uint64_t x = 0; x < space.space; ++x)
        scratch.image[x] = s.image[out[next].image[x]];
      push(scratch);
    }
  return out;
}

TransformationTable idempotent_map(const CaSpace& space, std::uint64_t x, std::uint64_t y) {
  if (same_orbit(space, x, y))
    throw PreconditionError("SameOrbit", "the two configurations lie in one orbit");
  std::uint64_t sx = stab_mask(space, x);
  std::uint64_t sy = stab_mask(space, y);
  if ((sx & ~sy) != 0)
    throw PreconditionError("StabilizerNotContained",
                            "the stabilizer of x must lie inside the stabilizer of y");
  TransformationTable t = identity_ca(space);
  for (int g = 0; g < space.group->n; ++g) t.image[space.acted[g][x]] = space.acted[g][y];
  return t;
}

TransformationTable swap_map(const CaSpace& space, std::uint64_t x, std::uint64_t y) {
  if (same_orbit(space, x, y))
    throw PreconditionError("SameOrbit", "the two configurations lie in one orbit");
  if (stab_mask(space, x) != stab_mask(space, y))
    throw PreconditionError("StabilizerMismatch",
                            "the two configurations must have equal stabilizers");
  TransformationTable t = identity_ca(space);
  for (int g = 0; g < space.group->n; ++g) {
    t.image[space.acted[g][x]] = space.acted[g][y];
    t.image[space.acted[g][y]] = space.acted[g][x];
  }
  return t;
}

std::vector<TransformationTable> invertible_ca(const CaSpace& space,
                                               std::uint64_t max_rules) {
  std::vector<TransformationTable> out;
  CaEnumerator en(space, max_rules);
  TransformationTable t;
  while (en.next(t))
    if (is_invertible(t)) out.push_back(t);
  return out;
}

MemoryTheoremReport verify_memory_theorem(const CaSpace& space, std::uint64_t max_rules,
                                          std::size_t cap) {
  MemoryTheoremReport rep;
  const int n = space.group->n;

  std::vector<TransformationTable> small;
  CaEnumerator en(space, max_rules);
  rep.ca_total = en.total();
  TransformationTable t;
  while (en.next(t))
    if (dependency_set(n, space.q, en.rule().values).size() < static_cast<std::size_t>(n))
      small.push_back(t);
  rep.small_memory_count = small.size();

  std::vector<TransformationTable> closed = closure(space, small, cap);
  rep.closure_size = closed.size();
  rep.closure_proper = Int(static_cast<unsigned long>(rep.closure_size)) < rep.ca_total;

  std::uint64_t ones = 0;
  std::uint64_t pw = 1;
  for (int g = 0; g < n; ++g, pw *= space.q) ones += pw;
  TransformationTable sigma = idempotent_map(space, 0, ones);
  rep.sigma_excluded = true;
  for (const TransformationTable& c : closed)
    if (c == sigma) {
      rep.sigma_excluded = false;
      break;
    }
  return rep;
}

}  // namespace ca
