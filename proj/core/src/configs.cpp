#include "ca/configs.hpp"

#include <bit>

#include "ca/error.hpp"

namespace ca {

std::uint64_t config_space(int n, int q, std::uint64_t max_configs) {
  if (q < 2) throw PreconditionError("BadAlphabet", "alphabet size must be at least 2");
  std::uint64_t space = 1;
  for (int i = 0; i < n; ++i) {
    if (space > max_configs / q)
      throw LimitError("configuration space " + std::to_string(q) + "^" +
                       std::to_string(n) + " exceeds cap " + std::to_string(max_configs));
    space *= q;
  }
  if (space > max_configs)
    throw LimitError("configuration space exceeds cap " + std::to_string(max_configs));
  return space;
}

std::uint64_t encode(const Configuration& x, int q) {
  std::uint64_t code = 0;
  for (std::size_t g = x.symbols.size(); g-- > 0;) code = code * q + x.symbols[g];
  return code;
}

Configuration decode(std::uint64_t code, int n, int q) {
  Configuration x;
  x.symbols.resize(n);
  for (int g = 0; g < n; ++g) {
    x.symbols[g] = static_cast<int>(code % q);
    code /= q;
  }
  return x;
}

Configuration act(const Configuration& x, int g, const FiniteGroup& G) {
  Configuration y;
  y.symbols.resize(G.n);
  int ig = G.inv[g];
  for (int h = 0; h < G.n; ++h) y.symbols[h] = x.symbols[G.mul(h, ig)];
  return y;
}

std::uint64_t act_encoded(std::uint64_t x, int g, const FiniteGroup& G, int q) {
  return encode(act(decode(x, G.n, q), g, G), q);
}

Subgroup stabilizer(const Configuration& x, const FiniteGroup& G) {
  std::uint64_t mask = 0;
  for (int g = 0; g < G.n; ++g)
    if (act(x, g, G).symbols == x.symbols) mask |= std::uint64_t{1} << g;
  return Subgroup{mask, std::popcount(mask)};
}

std::vector<std::uint64_t> OrbitTable::members(int orbit) const {
  std::vector<std::uint64_t> out;
  out.reserve(orbit_size[orbit]);
  for (std::uint64_t x = 0; x < space; ++x)
    if (orbit_id[x] == orbit) out.push_back(x);
  return out;
}

OrbitTable enumerate_orbits(const FiniteGroup& G, const SubgroupLattice& lat, int q,
                            std::uint64_t max_configs) {
  OrbitTable t;
  t.q = q;
  t.space = config_space(G.n, q, max_configs);
  t.orbit_id.assign(t.space, -1);

  std::vector<std::uint64_t> qpow(G.n);
  qpow[0] = 1;
  for (int i = 1; i < G.n; ++i) qpow[i] = qpow[i - 1] * q;

  // gather[g][h] = h * g^{-1}: the digit of x feeding position h of x.g
  std::vector<int> gather(static_cast<std::size_t>(G.n) * G.n);
  for (int g = 0; g < G.n; ++g)
    for (int h = 0; h < G.n; ++h)
      gather[static_cast<std::size_t>(g) * G.n + h] = G.mul(h, G.inv[g]);

  std::vector<int> sym(G.n);
  for (std::uint64_t x = 0; x < t.space; ++x) {
    if (t.orbit_id[x] >= 0) continue;
    int orbit = static_cast<int>(t.reps.size());
    std::uint64_t c = x;
    for (int h = 0; h < G.n; ++h) {
      sym[h] = static_cast<int>(c % q);
      c /= q;
    }
    std::uint64_t stab = 0;
    int size = 0;
    for (int g = 0; g < G.n; ++g) {
      const int* row = gather.data() + static_cast<std::size_t>(g) * G.n;
      std::uint64_t y = 0;
      for (int h = 0; h < G.n; ++h) y += static_cast<std::uint64_t>(sym[row[h]]) * qpow[h];
      if (y == x) stab |= std::uint64_t{1} << g;
      if (t.orbit_id[y] < 0) {
        t.orbit_id[y] = orbit;
        ++size;
      }
    }
    Subgroup s{stab, std::popcount(stab)};
    if (size != G.n / s.order)
      throw std::logic_error("orbit size disagrees with the stabilizer index");
    int sub = lat.index_of(stab);
    if (sub < 0) throw std::logic_error("stabilizer missing from lattice");
    t.reps.push_back(x);
    t.stabilizers.push_back(s);
    t.class_of.push_back(lat.class_of[sub]);
    t.orbit_size.push_back(size);
  }
  return t;
}

AlphaVector alpha_mobius(const SubgroupLattice& lat, int q) {
  const FiniteGroup& G = *lat.group;
  if (q < 2) throw PreconditionError("BadAlphabet", "alphabet size must be at least 2");
  AlphaVector av;
  av.classes.resize(lat.classes.size());
  for (std::size_t c = 0; c < lat.classes.size(); ++c) {
    const auto& cls = lat.classes[c];
    int h = cls.representative;
    int m = lat.subgroups[h].order;
    // Moebius-weighted count of configurations whose stabilizer is exactly
    // the representative; the class's block is |[H]| copies of it.
    Int exact_fixed = 0;
    for (int k : lat.upset(h))
      exact_fixed += Int(lat.mobius(h, k)) *
                     int_pow(q, static_cast<unsigned long>(G.n / lat.subgroups[k].order));
    Int b = Int(static_cast<long>(cls.members.size())) * exact_fixed;
    av.classes[c].b_size = b;
    av.classes[c].alpha = exact_div(b * m, Int(G.n));
    av.classes[c].orbit_size = G.n / m;
  }
  return av;
}

AlphaVector alpha_direct(const SubgroupLattice& lat, const OrbitTable& orbits) {
  AlphaVector av;
  av.classes.resize(lat.classes.size());
  for (std::size_t c = 0; c < lat.classes.size(); ++c) {
    av.classes[c].alpha = 0;
    av.classes[c].b_size = 0;
    av.classes[c].orbit_size =
        lat.order() / lat.subgroups[lat.classes[c].representative].order;
  }
  for (int o = 0; o < orbits.orbit_count(); ++o) {
    auto& entry = av.classes[orbits.class_of[o]];
    entry.alpha += 1;
    entry.b_size += orbits.orbit_size[o];
  }
  return av;
}

Int fix_count(const FiniteGroup& G, const Subgroup& H, int q) {
  return int_pow(q, static_cast<unsigned long>(G.n / H.order));
}

Int total_orbits_cf(const FiniteGroup& G, int q) {
  Int sum = 0;
  for (int g = 0; g < G.n; ++g)
    sum += int_pow(q, static_cast<unsigned long>(G.n / G.elt_order[g]));
  return exact_div(sum, Int(G.n));
}

}  // namespace ca
