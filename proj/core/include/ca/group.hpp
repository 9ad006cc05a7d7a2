#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ca/limits.hpp"

namespace ca {

// Finite group on elements 0..n-1 given by its Cayley table. The identity is
// always element 0; n is capped at 64 wherever subgroups enter the picture so
// a subgroup is a 64-bit membership mask.
struct FiniteGroup {
  int n = 0;
  std::vector<int> table;      // row-major, table[g*n + h] = g*h
  std::vector<int> inv;        // two-sided inverses
  std::vector<int> elt_order;  // order of each element
  std::string name;            // descriptor it was built from, when known

  int mul(int g, int h) const { return table[static_cast<std::size_t>(g) * n + h]; }
};

// Subgroup as an n-bit membership mask (bit g set iff g is a member).
struct Subgroup {
  std::uint64_t mask = 0;
  int order = 0;

  bool contains(int g) const { return (mask >> g) & 1u; }
  bool subset_of(const Subgroup& other) const { return (mask & ~other.mask) == 0; }
  std::vector<int> elements() const;
};

// Checks identity-at-0, the Latin-square property, associativity and
// inverses; throws ValidationError naming the first violating cell or triple.
FiniteGroup validate_cayley(int n, const std::vector<int>& raw, std::string name = "");

// Grammar: Z<n>, D<n> (dihedral of order 2n), Q8, S<n> (n <= 5), A<n> (n <= 5),
// x-separated products of those, or file:<path> with a Cayley table.
// Malformed descriptors throw DescriptorError.
FiniteGroup build_group(const std::string& descriptor);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Cayley-table file format: first content line is n, then n lines of n
// 0-based indices. Lines whose first non-blank character is '#' are comments.
// Anything after the table, or a malformed row, is rejected with the line
// number in the message.
FiniteGroup parse_cayley_stream(std::istream& in, const std::string& source);
FiniteGroup load_cayley_file(const std::string& path);
void write_cayley_file(std::ostream& out, const FiniteGroup& g);

// Multiplicative closure of a subset mask (identity bit is added).
std::uint64_t close_mask(const FiniteGroup& g, std::uint64_t mask);

// g^{-1} H g as a mask.
std::uint64_t conjugate_mask(const FiniteGroup& g, std::uint64_t mask, int by);

bool is_subgroup_mask(const FiniteGroup& g, std::uint64_t mask);

// Wraps a mask after checking closure; throws PreconditionError otherwise.
Subgroup make_subgroup(const FiniteGroup& g, std::uint64_t mask);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

bool is_abelian(const FiniteGroup& g);

// Size of a smallest generating set (0 for the trivial group), by breadth-
// first search over generator subsets.
int group_rank(const FiniteGroup& g, int max_order = kMaxRankOrder);

// Quotient G/H for normal H. Cosets are numbered by their least member, so
// the identity coset is element 0.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& h);

}  // namespace ca
