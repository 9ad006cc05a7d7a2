#include "ca/group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ca/error.hpp"

namespace ca {

std::vector<int> Subgroup::elements() const {
  std::vector<int> out;
  out.reserve(order);
  for (int g = 0; g < 64; ++g)
    if ((mask >> g) & 1u) out.push_back(g);
  return out;
}

namespace {

std::string cell(int r, int c) {
  return "row " + std::to_string(r) + ", column " + std::to_string(c);
}

}  // namespace

FiniteGroup validate_cayley(int n, const std::vector<int>& raw, std::string name) {
  if (n <= 0) throw ValidationError("BadShape", "group order must be positive");
  if (raw.size() != static_cast<std::size_t>(n) * n)
    throw ValidationError("BadShape", "expected " + std::to_string(n * n) +
                                          " entries, got " + std::to_string(raw.size()));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int v = raw[static_cast<std::size_t>(r) * n + c];
      if (v < 0 || v >= n)
        throw ValidationError("EntryOutOfRange",
                              cell(r, c) + " holds " + std::to_string(v));
    }

  FiniteGroup g;
  g.n = n;
  g.table = raw;
  g.name = std::move(name);

  for (int h = 0; h < n; ++h)
    if (g.mul(0, h) != h)
      throw ValidationError("NoIdentityAtZero", cell(0, h) + " holds " +
                                                    std::to_string(g.mul(0, h)));
  for (int r = 0; r < n; ++r)
    if (g.mul(r, 0) != r)
      throw ValidationError("NoIdentityAtZero", cell(r, 0) + " holds " +
                                                    std::to_string(g.mul(r, 0)));

  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = g.mul(r, c);
      if (seen[v]) throw ValidationError("NotLatinSquare", cell(r, c) + " repeats " +
                                                               std::to_string(v));
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = g.mul(r, c);
      if (seen[v]) throw ValidationError("NotLatinSquare", cell(r, c) + " repeats " +
                                                               std::to_string(v));
      seen[v] = 1;
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw ValidationError("NotAssociative",
                                "triple (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ", " + std::to_string(c) + ")");

  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inv[a] = b;
        break;
      }
    if (g.inv[a] < 0)
      throw ValidationError("MissingInverse", "element " + std::to_string(a));
  }

  g.elt_order.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = g.mul(x, a);
      ++k;
    }
    g.elt_order[a] = k;
  }
  return g;
}

namespace {

FiniteGroup cyclic(int n) {
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return validate_cayley(n, t, "Z" + std::to_string(n));
}

// Element s^k r^i maps to index k*n + i.
FiniteGroup dihedral(int n) {
  int m = 2 * n;
  std::vector<int> t(static_cast<std::size_t>(m) * m);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < 2; ++l)
        for (int j = 0; j < n; ++j) {
          int ii = l ? (n - i) % n : i;
          t[static_cast<std::size_t>(k * n + i) * m + (l * n + j)] =
              ((k + l) % 2) * n + (ii + j) % n;
        }
  return validate_cayley(m, t, "D" + std::to_string(n));
}

// Quaternions ordered 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion8() {
  auto idx = [](int basis, int sign) { return basis * 2 + (sign == 1 ? 0 : 1); };
  // basis products with the extra sign they introduce
  static constexpr int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<int> t(64);
  for (int b1 = 0; b1 < 4; ++b1)
    for (int s1 : {1, -1})
      for (int b2 = 0; b2 < 4; ++b2)
        for (int s2 : {1, -1})
          t[static_cast<std::size_t>(idx(b1, s1)) * 8 + idx(b2, s2)] =
              idx(prod[b1][b2], s1 * s2 * sign[b1][b2]);
  return validate_cayley(8, t, "Q8");
}

int permutation_parity(const std::vector<int>& p) {
  std::vector<char> seen(p.size());
  int parity = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t j = i;
    int len = 0;
    while (!seen[j]) {
      seen[j] = 1;
      j = p[j];
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity;
}

// Permutations in lexicographic one-line order; product means "apply left,
// then right", so that index 0 (the sorted permutation) is the identity.
FiniteGroup permutation_group(int deg, bool even_only, const std::string& name) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(deg);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || permutation_parity(p) == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  int n = static_cast<int>(perms.size());
  auto key = [deg](const std::vector<int>& q) {
    std::uint64_t k = 0;
    for (int x : q) k = k * deg + x;
    return k;
  };
  std::vector<std::pair<std::uint64_t, int>> index;
  index.reserve(n);
  for (int i = 0; i < n; ++i) index.emplace_back(key(perms[i]), i);
  std::sort(index.begin(), index.end());
  auto find = [&](const std::vector<int>& q) {
    auto it = std::lower_bound(index.begin(), index.end(),
                               std::make_pair(key(q), 0));
    return it->second;
  };

  std::vector<int> t(static_cast<std::size_t>(n) * n);
  std::vector<int> comp(deg);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < deg; ++x) comp[x] = perms[b][perms[a][x]];
      t[static_cast<std::size_t>(a) * n + b] = find(comp);
    }
  return validate_cayley(n, t, name);
}

FiniteGroup factor_from_token(const std::string& tok) {
  auto num = [&](std::size_t from) -> int {
    int v = 0;
    auto first = tok.data() + from;
    auto last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || v <= 0)
      throw DescriptorError("malformed descriptor token '" + tok + "'");
    return v;
  };
  if (tok.size() < 2) throw DescriptorError("malformed descriptor token '" + tok + "'");
  switch (tok[0]) {
    case 'Z':
      return cyclic(num(1));
    case 'D':
      return dihedral(num(1));
    case 'Q':
      if (tok == "Q8") return quaternion8();
      throw DescriptorError("unsupported descriptor token '" + tok + "'");
    case 'S': {
      int d = num(1);
      if (d > 5) throw DescriptorError("S" + std::to_string(d) + " exceeds S5");
      return permutation_group(d, false, tok);
    }
    case 'A': {
      int d = num(1);
      if (d > 5) throw DescriptorError("A" + std::to_string(d) + " exceeds A5");
      return permutation_group(d, true, tok);
    }
    default:
      throw DescriptorError("malformed descriptor token '" + tok + "'");
  }
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.n * b.n;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a1 = 0; a1 < a.n; ++a1)
    for (int b1 = 0; b1 < b.n; ++b1)
      for (int a2 = 0; a2 < a.n; ++a2)
        for (int b2 = 0; b2 < b.n; ++b2)
          t[static_cast<std::size_t>(a1 * b.n + b1) * n + (a2 * b.n + b2)] =
              a.mul(a1, a2) * b.n + b.mul(b1, b2);
  return validate_cayley(n, t, a.name + "x" + b.name);
}

FiniteGroup build_group(const std::string& descriptor) {
  if (descriptor.rfind("file:", 0) == 0) return load_cayley_file(descriptor.substr(5));
  if (descriptor.empty()) throw DescriptorError("empty group descriptor");

  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = descriptor.find('x', start);
    tokens.push_back(descriptor.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }

  FiniteGroup g = factor_from_token(tokens[0]);
  for (std::size_t i = 1; i < tokens.size(); ++i)
    g = direct_product(g, factor_from_token(tokens[i]));
  g.name = descriptor;
  return g;
}

FiniteGroup parse_cayley_stream(std::istream& in, const std::string& source) {
  auto fail = [&](int line, const std::string& what) -> ValidationError {
    return ValidationError("BadTableFile", source + ":" + std::to_string(line) + ": " + what);
  };

  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<int> raw;
  int rows_read = 0;

  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);

    auto as_index = [&](const std::string& s) -> int {
      int v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size())
        throw fail(lineno, "bad token '" + s + "'");
      return v;
    };

    if (n < 0) {
      if (toks.size() != 1) throw fail(lineno, "header must contain the order alone");
      n = as_index(toks[0]);
      if (n <= 0) throw fail(lineno, "order must be positive");
      if (n > 4096) throw fail(lineno, "order " + std::to_string(n) + " is unreasonable");
      raw.reserve(static_cast<std::size_t>(n) * n);
      continue;
    }
    if (rows_read == n) throw fail(lineno, "trailing content after the table");
    if (toks.size() != static_cast<std::size_t>(n))
      throw fail(lineno, "expected " + std::to_string(n) + " entries, got " +
                             std::to_string(toks.size()));
    for (const auto& s : toks) {
      int v = as_index(s);
      if (v < 0 || v >= n) throw fail(lineno, "entry " + s + " out of range");
      raw.push_back(v);
    }
    ++rows_read;
  }
  if (n < 0) throw ValidationError("BadTableFile", source + ": no table header");
  if (rows_read != n)
    throw ValidationError("BadTableFile", source + ": expected " + std::to_string(n) +
                                              " rows, got " + std::to_string(rows_read));
  return validate_cayley(n, raw, "file:" + source);
}

FiniteGroup load_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("BadTableFile", path + ": cannot open");
  return parse_cayley_stream(in, path);
}

void write_cayley_file(std::ostream& out, const FiniteGroup& g) {
  out << "# order " << g.n;
  if (!g.name.empty()) out << " (" << g.name << ")";
  out << "\n" << g.n << "\n";
  for (int r = 0; r < g.n; ++r) {
    for (int c = 0; c < g.n; ++c) {
      if (c) out << ' ';
      out << g.mul(r, c);
    }
    out << "\n";
  }
}

std::uint64_t close_mask(const FiniteGroup& g, std::uint64_t mask) {
  mask |= 1u;  // identity
  bool changed = true;
  while (changed) {
    changed = false;
    std::uint64_t cur = mask;
    for (int a = 0; a < g.n; ++a) {
      if (!((cur >> a) & 1u)) continue;
      for (int b = 0; b < g.n; ++b) {
        if (!((cur >> b) & 1u)) continue;
        std::uint64_t bit = std::uint64_t{1} << g.mul(a, b);
        if (!(mask & bit)) {
          mask |= bit;
          changed = true;
        }
      }
    }
  }
  return mask;
}

std::uint64_t conjugate_mask(const FiniteGroup& g, std::uint64_t mask, int by) {
  std::uint64_t out = 0;
  int ib = g.inv[by];
  for (int h = 0; h < g.n; ++h)
    if ((mask >> h) & 1u) out |= std::uint64_t{1} << g.mul(g.mul(ib, h), by);
  return out;
}

bool is_subgroup_mask(const FiniteGroup& g, std::uint64_t mask) {
  if (!(mask & 1u)) return false;
  for (int a = 0; a < g.n; ++a) {
    if (!((mask >> a) & 1u)) continue;
    for (int b = 0; b < g.n; ++b)
      if ((mask >> b) & 1u && !((mask >> g.mul(a, b)) & 1u)) return false;
  }
  return true;
}

Subgroup make_subgroup(const FiniteGroup& g, std::uint64_t mask) {
  if (g.n > 64) throw LimitError("subgroup masks require group order <= 64");
  if (g.n < 64 && (mask >> g.n) != 0)
    throw PreconditionError("NotSubgroup", "mask has bits beyond the group");
  if (!is_subgroup_mask(g, mask))
    throw PreconditionError("NotSubgroup", "subset is not closed under the operation");
  return Subgroup{mask, std::popcount(mask)};
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (int x = 0; x < g.n; ++x)
    if (conjugate_mask(g, h.mask, x) != h.mask) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

int group_rank(const FiniteGroup& g, int max_order) {
  if (g.n > max_order)
    throw LimitError("group_rank capped at order " + std::to_string(max_order));
  if (g.n == 1) return 0;

  std::uint64_t full = g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
  std::vector<int> gens;
  for (int k = 1; k <= g.n; ++k) {
    gens.assign(k, 0);
    // combinations of non-identity elements 1..n-1
    std::iota(gens.begin(), gens.end(), 1);
    while (true) {
      std::uint64_t seed = 1;
      for (int x : gens) seed |= std::uint64_t{1} << x;
      if (close_mask(g, seed) == full) return k;
      int i = k - 1;
      while (i >= 0 && gens[i] == g.n - 1 - (k - 1 - i)) --i;
      if (i < 0) break;
      ++gens[i];
      for (int j = i + 1; j < k; ++j) gens[j] = gens[j - 1] + 1;
    }
  }
  throw std::logic_error("group_rank: no generating set found");
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup_mask(g, h.mask))
    throw PreconditionError("NotSubgroup", "quotient requires a subgroup");
  if (!is_normal(g, h))
    throw PreconditionError("NotNormal", "subgroup of order " + std::to_string(h.order) +
                                             " is not normal");
  // cosets gH, numbered by least member; identity coset comes first
  std::vector<int> coset_of(g.n, -1);
  std::vector<int> reps;
  for (int x = 0; x < g.n; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int s = 0; s < g.n; ++s)
      if (h.contains(s)) coset_of[g.mul(x, s)] = id;
  }
  int m = static_cast<int>(reps.size());
  std::vector<int> t(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[static_cast<std::size_t>(i) * m + j] = coset_of[g.mul(reps[i], reps[j])];
  std::string qname = g.name.empty() ? "quotient" : g.name + "/H" + std::to_string(h.order);
  return validate_cayley(m, t, qname);
}

}  // namespace ca
