#include "ca/counting.hpp"

#include <algorithm>

#include "ca/error.hpp"

namespace ca {

namespace {

int smallest_prime_factor(int n) {
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

// Classic number-theoretic Moebius function.
int mobius_int(int n) {
  int mu = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

int int_log(int base, int n) {
  int m = 0;
  while (n > 1) {
    if (n % base) return -1;
    n /= base;
    ++m;
  }
  return m;
}

}  // namespace

ApCount ac_general(const SubgroupLattice& lat, int q) {
  if (q < 2) throw PreconditionError("BadAlphabet", "alphabet size must be at least 2");
  int n = lat.order();
  int e = lat.trivial_index();
  Int v = 0;
  for (int k : lat.upset(e))
    v += Int(lat.mobius(e, k)) *
         int_pow(q, static_cast<unsigned long>(n / lat.subgroups[k].order));
  return {v, AcMethod::General};
}

ApCount ac_cyclic(int n, int q) {
  if (q < 2) throw PreconditionError("BadAlphabet", "alphabet size must be at least 2");
  if (n < 1) throw PreconditionError("BadOrder", "order must be positive");
  Int v = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = mobius_int(d);
    if (mu) v += Int(mu) * int_pow(q, static_cast<unsigned long>(n / d));
  }
  return {v, AcMethod::Cyclic};
}

ApCount ac_pgroup(const SubgroupLattice& lat, int q) {
  if (q < 2) throw PreconditionError("BadAlphabet", "alphabet size must be at least 2");
  const FiniteGroup& G = *lat.group;
  auto p_opt = p_group_prime(G);
  if (!p_opt)
    throw PreconditionError("NotAPGroup",
                            "order " + std::to_string(G.n) + " is not a prime power");
  int p = *p_opt;

  Int v = 0;
  for (const auto& H : lat.subgroups) {
    // elementary abelian: every non-identity member has order p and commutes
    bool elem = true;
    auto elems = H.elements();
    for (std::size_t i = 0; i < elems.size() && elem; ++i) {
      if (elems[i] != 0 && G.elt_order[elems[i]] != p) elem = false;
      for (std::size_t j = i + 1; j < elems.size() && elem; ++j)
        if (G.mul(elems[i], elems[j]) != G.mul(elems[j], elems[i])) elem = false;
    }
    if (!elem) continue;
    int m = int_log(p, H.order);
    Int coeff = int_pow(p, static_cast<unsigned long>(m) * (m - 1) / 2);
    if (m & 1) coeff = -coeff;
    v += coeff * int_pow(q, static_cast<unsigned long>(G.n / H.order));
  }
  return {v, AcMethod::PGroup};
}

Int gaussian_binomial(int m, int r, int p) {
  if (r < 0 || r > m) return 0;
  Int num = 1, den = 1;
  for (int i = 1; i <= r; ++i) {
    num *= int_pow(p, static_cast<unsigned long>(m - r + i)) - 1;
    den *= int_pow(p, static_cast<unsigned long>(i)) - 1;
  }
  return exact_div(num, den);
}

ApCount ac_elem_abelian(int p, int m, int q) {
  if (q < 2) throw PreconditionError("BadAlphabet", "alphabet size must be at least 2");
  if (m < 0 || p < 2 || smallest_prime_factor(p) != p)
    throw PreconditionError("NotAPGroup", "need a prime p and m >= 0");
  if (int_pow(p, m) > kMaxOrderExponent)
    throw LimitError("p^m exceeds the representable exponent cap");
  Int v = int_pow(q, static_cast<unsigned long>(int_pow(p, m).get_ui()));
  for (int r = 1; r <= m; ++r) {
    Int term = int_pow(q, static_cast<unsigned long>(int_pow(p, m - r).get_ui())) *
               int_pow(p, static_cast<unsigned long>(r) * (r - 1) / 2) *
               gaussian_binomial(m, r, p);
    if (r & 1)
      v -= term;
    else
      v += term;
  }
  return {v, AcMethod::ElementaryAbelian};
}

bool is_cyclic(const FiniteGroup& g) {
  return std::any_of(g.elt_order.begin(), g.elt_order.end(),
                     [&](int o) { return o == g.n; });
}

std::optional<int> p_group_prime(const FiniteGroup& g) {
  if (g.n < 2) return std::nullopt;
  int p = smallest_prime_factor(g.n);
  return int_log(p, g.n) > 0 ? std::optional<int>(p) : std::nullopt;
}

std::optional<std::pair<int, int>> elem_abelian_params(const FiniteGroup& g) {
  auto p = p_group_prime(g);
  if (!p || !is_abelian(g)) return std::nullopt;
  for (int x = 1; x < g.n; ++x)
    if (g.elt_order[x] != *p) return std::nullopt;
  return std::make_pair(*p, int_log(*p, g.n));
}

BoundsReport ac_bounds(const SubgroupLattice& lat, int q) {
  const FiniteGroup& G = *lat.group;
  if (G.n < 2)
    throw PreconditionError("BadOrder", "bounds need a nontrivial group");
  BoundsReport r;
  r.ac = ac_general(lat, q).value;
  r.p = smallest_prime_factor(G.n);
  unsigned long n = static_cast<unsigned long>(G.n);
  r.upper = int_pow(q, n) - q;
  r.lower = int_pow(q, n) - Int(G.n - 1) * int_pow(q, n / r.p);
  r.lower_coarse = int_pow(q, n) - int_pow(q, n - 1);
  long order_p = std::count(G.elt_order.begin(), G.elt_order.end(), r.p);
  r.coefficient = exact_div(Int(order_p), Int(r.p - 1));
  return r;
}

std::vector<Rational> asymptotic_residual(const SubgroupLattice& lat, int h_index,
                                          int q_lo, int q_hi) {
  if (q_lo < 2 || q_hi < q_lo)
    throw PreconditionError("BadAlphabet", "need 2 <= q_lo <= q_hi");
  std::vector<Rational> out;
  out.reserve(q_hi - q_lo + 1);
  if (h_index == 0) {  // H = G: defined as exactly zero
    out.assign(q_hi - q_lo + 1, Rational(0));
    return out;
  }
  int n = lat.order();
  int m = lat.subgroups[h_index].order;
  int p_h = min_cover(lat, h_index).least_order;
  for (int q = q_lo; q <= q_hi; ++q) {
    Int exact_fixed = 0;
    for (int k : lat.upset(h_index))
      exact_fixed += Int(lat.mobius(h_index, k)) *
                     int_pow(q, static_cast<unsigned long>(n / lat.subgroups[k].order));
    Rational r(int_pow(q, static_cast<unsigned long>(n / m)) - exact_fixed,
               int_pow(q, static_cast<unsigned long>(n / p_h)));
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

Int b_size_quotient(const FiniteGroup& G, const Subgroup& H, int q) {
  FiniteGroup Q = quotient(G, H);  // validates normality
  SubgroupLattice lat = enumerate_subgroups(Q);
  return ac_general(lat, q).value;
}

}  // namespace ca
