#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ca/camonoid.hpp"
#include "ca/configs.hpp"
#include "ca/counting.hpp"
#include "ca/error.hpp"
#include "ca/genset.hpp"
#include "ca/group.hpp"
#include "ca/ica.hpp"
#include "ca/lattice.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace ca;
using ca_test::GroupLattice;

namespace {

bool same_orbit(const FiniteGroup& G, const Configuration& a, const Configuration& b) {
  for (int g = 0; g < G.n; ++g)
    if (act(a, g, G).symbols == b.symbols) return true;
  return false;
}

int stab_class(const GroupLattice& gl, const Configuration& x) {
  int idx = gl.lattice.index_of(stabilizer(x, gl.group).mask);
  REQUIRE(idx >= 0);
  return gl.lattice.class_of[idx];
}

}  // namespace

TEST_SUITE("genset") {

TEST_CASE("class graph censuses") {
  struct Case {
    const char* g;
    std::size_t vertices, edges, index2;
  };
  const Case cases[] = {
      {"Z2", 2, 3, 1},    {"Z3", 2, 3, 0},  {"Z4", 3, 6, 1},
      {"Z2xZ2", 5, 12, 3}, {"Z6", 4, 9, 1}, {"S3", 4, 9, 1},
      {"Q8", 6, 18, 3},
  };
  for (const auto& c : cases) {
    CAPTURE(c.g);
    GroupLattice gl(c.g);
    ClassGraph graph = class_graph(gl.lattice);
    CHECK(graph.vertices == c.vertices);
    CHECK(graph.edge_count() == c.edges);
    CHECK(graph.index2_count == c.index2);
  }
}

TEST_CASE("for abelian groups the class graph is the subgroup order itself") {
  for (const char* spec : {"Z12", "Z2xZ4", "Z2xZ2xZ2", "Z3xZ3"}) {
    CAPTURE(spec);
    GroupLattice gl(spec);
    const SubgroupLattice& lat = gl.lattice;
    REQUIRE(lat.classes.size() == static_cast<std::size_t>(lat.size()));

    std::vector<std::pair<int, int>> expected;
    for (int i = 0; i < lat.size(); ++i)
      for (int j = 0; j < lat.size(); ++j)
        if (lat.leq(i, j)) expected.emplace_back(i, j);
    CHECK(class_graph(lat).edges == expected);
  }
}

TEST_CASE("class graph is a partial order realized by actual containments") {
  for (const char* spec : {"S3", "D4", "A4", "D6"}) {
    CAPTURE(spec);
    GroupLattice gl(spec);
    const SubgroupLattice& lat = gl.lattice;
    ClassGraph graph = class_graph(lat);
    CHECK(graph.vertices == lat.classes.size());

    std::set<std::pair<int, int>> edges(graph.edges.begin(), graph.edges.end());
    CHECK(edges.size() == graph.edges.size());
    for (std::size_t i = 0; i < lat.classes.size(); ++i)
      CHECK(edges.count({static_cast<int>(i), static_cast<int>(i)}) == 1);

    // edges hold exactly when some member pair is nested, recomputed by a
    // full double scan over the classes
    for (std::size_t i = 0; i < lat.classes.size(); ++i)
      for (std::size_t j = 0; j < lat.classes.size(); ++j) {
        bool nested = false;
        for (int a : lat.classes[i].members)
          for (int b : lat.classes[j].members)
            nested = nested || lat.subgroups[a].subset_of(lat.subgroups[b]);
        CHECK(nested == (edges.count({static_cast<int>(i), static_cast<int>(j)}) == 1));
      }

    for (const auto& [i, j] : graph.edges) {
      if (i == j) continue;
      CHECK(lat.subgroups[lat.classes[i].representative].order <
            lat.subgroups[lat.classes[j].representative].order);
      CHECK(edges.count({j, i}) == 0);  // antisymmetry
      for (const auto& [k, l] : graph.edges)
        if (k == j && l != j) CHECK(edges.count({i, l}) == 1);  // transitivity
    }

    std::size_t index2 = 0;
    for (const Subgroup& h : lat.subgroups)
      if (2 * h.order == gl.group.n) ++index2;
    CHECK(graph.index2_count == index2);
  }
}

TEST_CASE("relative rank bounds, frozen") {
  struct Case {
    const char* g;
    int q;
    long long lower;
    bool exact;
  };
  const Case cases[] = {
      {"Z2", 2, 2, true},    {"Z3", 2, 3, true},  {"Z4", 2, 5, true},
      {"Z2xZ2", 2, 9, true}, {"Z6", 2, 8, true},  {"Q8", 2, 15, true},
      {"S3", 2, 8, false},   {"D4", 2, 23, false},
      {"Z2", 3, 3, true},    {"Z6", 3, 9, true},  {"Z2xZ2", 3, 12, true},
      {"S3", 3, 9, false},
  };
  for (const auto& c : cases) {
    CAPTURE(c.g);
    CAPTURE(c.q);
    GroupLattice gl(c.g);
    RelRankReport r = relrank(gl.group, gl.lattice, alpha_mobius(gl.lattice, c.q), c.q);
    CHECK(r.lower_bound == c.lower);
    CHECK(r.is_exact == c.exact);
    CHECK(static_cast<long long>(r.generators.size()) == r.lower_bound);
  }
}

TEST_CASE("generator list splits into strict edges plus doubled classes") {
  struct Case {
    const char* g;
    int q;
  };
  const Case cases[] = {{"Z2", 2},    {"Z4", 2},  {"Z2xZ2", 2}, {"Z6", 2},
                        {"S3", 2},    {"D4", 2},  {"Q8", 2},    {"A4", 2},
                        {"Z12", 2},   {"D6", 2},  {"Z2xZ2xZ2", 2},
                        {"Z2", 3},    {"Z6", 3},  {"S3", 3},    {"Z12", 3},
                        {"D6", 3},    {"Z3xZ3", 3}};
  for (const auto& c : cases) {
    CAPTURE(c.g);
    CAPTURE(c.q);
    GroupLattice gl(c.g);
    AlphaVector alpha = alpha_mobius(gl.lattice, c.q);
    RelRankReport r = relrank(gl.group, gl.lattice, alpha, c.q);
    ClassGraph graph = class_graph(gl.lattice);

    std::size_t cross = 0, within = 0, singles = 0;
    for (const GeneratorDescriptor& d : r.generators)
      (d.kind == GeneratorKind::CrossClass ? cross : within)++;
    for (const auto& cls : alpha.classes)
      if (cls.alpha < 2) ++singles;

    CHECK(cross == graph.edge_count() - graph.vertices);
    CHECK(within == graph.vertices - singles);
    // alpha = 1 happens exactly at index two over the binary alphabet, which
    // is what turns the loop count into the index-two correction
    CHECK(singles == (c.q == 2 ? graph.index2_count : 0));
  }
}

TEST_CASE("generator descriptors carry the stabilizers they promise") {
  struct Case {
    const char* g;
    int q;
  };
  const Case cases[] = {{"Z4", 2}, {"Z2xZ2", 2}, {"S3", 2},  {"Q8", 2},
                        {"D4", 2}, {"A4", 2},    {"Z6", 3},  {"D6", 3},
                        {"Z12", 3}};
  for (const auto& c : cases) {
    CAPTURE(c.g);
    CAPTURE(c.q);
    GroupLattice gl(c.g);
    AlphaVector alpha = alpha_mobius(gl.lattice, c.q);
    RelRankReport r = relrank(gl.group, gl.lattice, alpha, c.q);

    for (std::size_t k = 0; k < r.generators.size(); ++k) {
      CAPTURE(k);
      const GeneratorDescriptor& d = r.generators[k];
      CHECK(stab_class(gl, d.source) == static_cast<int>(d.source_class));
      CHECK(stab_class(gl, d.target) == static_cast<int>(d.target_class));
      CHECK(!same_orbit(gl.group, d.source, d.target));

      Subgroup hs = stabilizer(d.source, gl.group);
      Subgroup ht = stabilizer(d.target, gl.group);
      if (d.kind == GeneratorKind::CrossClass) {
        CHECK(d.source_class != d.target_class);
        // literal containment, not merely up to conjugacy
        CHECK(hs.subset_of(ht));
        CHECK(hs.order < ht.order);
      } else {
        CHECK(d.source_class == d.target_class);
        CHECK(hs.mask == ht.mask);
        CHECK(alpha.classes[d.source_class].alpha >= 2);
      }
    }
  }
}

TEST_CASE("representatives are the smallest encodings with their stabilizer") {
  struct Case {
    const char* g;
    int q;
  };
  const Case cases[] = {{"Z4", 2}, {"Z2xZ2", 2}, {"S3", 2}, {"Z6", 3}};
  for (const auto& c : cases) {
    CAPTURE(c.g);
    CAPTURE(c.q);
    GroupLattice gl(c.g);
    const FiniteGroup& G = gl.group;
    RelRankReport r = relrank(gl.group, gl.lattice, alpha_mobius(gl.lattice, c.q), c.q);

    auto min_code_with_stab = [&](std::uint64_t mask,
                                  const Configuration* other_orbit) -> std::uint64_t {
      for (std::uint64_t code = 0; code < config_space(G.n, c.q); ++code) {
        Configuration x = decode(code, G.n, c.q);
        if (stabilizer(x, G).mask != mask) continue;
        if (other_orbit && same_orbit(G, x, *other_orbit)) continue;
        return code;
      }
      FAIL("no configuration with the requested stabilizer");
      return 0;
    };

    for (const GeneratorDescriptor& d : r.generators) {
      Subgroup hs = stabilizer(d.source, G);
      CHECK(encode(d.source, c.q) == min_code_with_stab(hs.mask, nullptr));
      if (d.kind == GeneratorKind::WithinClass) {
        CHECK(encode(d.target, c.q) == min_code_with_stab(hs.mask, &d.source));
      } else {
        // the target sits inside the first member of the target class that
        // contains the source stabilizer
        int target_sub = -1;
        for (int m : gl.lattice.classes[d.target_class].members)
          if (hs.subset_of(gl.lattice.subgroups[m])) {
            target_sub = m;
            break;
          }
        REQUIRE(target_sub >= 0);
        CHECK(stabilizer(d.target, G).mask == gl.lattice.subgroups[target_sub].mask);
        CHECK(encode(d.target, c.q) ==
              min_code_with_stab(gl.lattice.subgroups[target_sub].mask, nullptr));
      }
    }
  }
}

TEST_CASE("materialized generators are non-invertible equivariant idempotents") {
  struct Case {
    const char* g;
    int q;
  };
  const Case cases[] = {{"Z2", 2}, {"Z3", 2}, {"Z4", 2}, {"Z2xZ2", 2}, {"Z2", 3}};
  for (const auto& c : cases) {
    CAPTURE(c.g);
    CAPTURE(c.q);
    GroupLattice gl(c.g);
    CaSpace space = make_ca_space(gl.group, c.q);
    RelRankReport r = relrank(gl.group, gl.lattice, alpha_mobius(gl.lattice, c.q), c.q);
    std::vector<TransformationTable> tables = generator_tables(space, r);
    REQUIRE(tables.size() == r.generators.size());

    TransformationTable id = identity_ca(space);
    for (std::size_t k = 0; k < tables.size(); ++k) {
      const TransformationTable& t = tables[k];
      CHECK(is_equivariant(space, t));
      CHECK(compose(t, t) == t);
      CHECK(!is_invertible(t));
      CHECK(!(t == id));
      CHECK(t.image[encode(r.generators[k].source, c.q)] ==
            encode(r.generators[k].target, c.q));
    }
    // distinct descriptors materialize as distinct maps
    for (std::size_t a = 0; a < tables.size(); ++a)
      for (std::size_t b = a + 1; b < tables.size(); ++b)
        CHECK(!(tables[a] == tables[b]));
  }
}

TEST_CASE("a non-invertible map reaches y from x exactly when stabilizers nest") {
  struct Case {
    const char* g;
    int q;
  };
  const Case cases[] = {{"Z2", 2}, {"Z3", 2}, {"Z4", 2}, {"Z2xZ2", 2}};
  for (const auto& c : cases) {
    CAPTURE(c.g);
    CAPTURE(c.q);
    GroupLattice gl(c.g);
    const FiniteGroup& G = gl.group;
    CaSpace space = make_ca_space(gl.group, c.q);
    const std::uint64_t m = space.space;

    std::vector<char> reached_noninv(m * m, 0), reached_any(m * m, 0);
    CaEnumerator en(space);
    TransformationTable t;
    while (en.next(t)) {
      bool inv = is_invertible(t);
      for (std::uint64_t x = 0; x < m; ++x) {
        reached_any[x * m + t.image[x]] = 1;
        if (!inv) reached_noninv[x * m + t.image[x]] = 1;
      }
    }

    for (std::uint64_t x = 0; x < m; ++x) {
      Subgroup sx = stabilizer(decode(x, G.n, c.q), G);
      for (std::uint64_t y = 0; y < m; ++y) {
        if (same_orbit(G, decode(x, G.n, c.q), decode(y, G.n, c.q))) continue;
        Subgroup sy = stabilizer(decode(y, G.n, c.q), G);
        CHECK(reached_noninv[x * m + y] == (sx.subset_of(sy) ? 1 : 0));
        // any equivariant image still needs the stabilizer to grow
        if (!sx.subset_of(sy)) CHECK(reached_any[x * m + y] == 0);
      }
    }
  }
}

TEST_CASE("closing the units with the generator set yields the whole monoid") {
  GenerationReport z2 = verify_generation(build_group("Z2"), 2);
  CHECK(z2.ca_total == 16);
  CHECK(z2.ica_count == 4);
  CHECK(z2.generator_count == 2);
  CHECK(z2.closure_size == 16);
  CHECK(z2.generates);
  CHECK(z2.irredundant);
  for (bool proper : z2.proper_without) CHECK(proper);

  GenerationReport z3 = verify_generation(build_group("Z3"), 2);
  CHECK(z3.ca_total == 256);
  CHECK(z3.ica_count == 36);
  CHECK(z3.generator_count == 3);
  CHECK(z3.closure_size == 256);
  CHECK(z3.generates);
  CHECK(z3.irredundant);

  GenerationReport z2t = verify_generation(build_group("Z2"), 3);
  CHECK(z2t.ca_total == 19683);
  CHECK(z2t.ica_count == 288);
  CHECK(z2t.generator_count == 3);
  CHECK(z2t.closure_size == 19683);
  CHECK(z2t.generates);
  CHECK(z2t.irredundant);
}

TEST_CASE("generation check is fenced to Dedekind groups and small monoids") {
  CHECK(ca_test::contains(
      ca_test::message_of<PreconditionError>([] { verify_generation(build_group("S3"), 2); }),
      "NotDedekind"));
  CHECK_THROWS_AS(verify_generation(build_group("Z5"), 2), LimitError);
}

TEST_CASE("rank upper bound, frozen and fenced") {
  struct Case {
    const char* g;
    long expect;
  };
  const Case cases[] = {{"Z2", 8},     {"Z3", 8},  {"Z5", 8},  {"Z4", 14},
                        {"Z2xZ2", 33}, {"Q8", 43}, {"Z12", 38}};
  for (const auto& c : cases) {
    CAPTURE(c.g);
    GroupLattice gl(c.g);
    CHECK(rank_upper_bound(gl.group, gl.lattice) == c.expect);
  }

  GroupLattice s3("S3");
  CHECK(ca_test::contains(ca_test::message_of<PreconditionError>(
                              [&] { rank_upper_bound(s3.group, s3.lattice); }),
                          "NotDedekind"));
}

TEST_CASE("a greedy generating set stays under the rank bound") {
  GroupLattice gl("Z2");
  CaSpace space = make_ca_space(gl.group, 2);
  std::vector<TransformationTable> all;
  CaEnumerator en(space);
  TransformationTable t;
  while (en.next(t)) all.push_back(t);
  REQUIRE(all.size() == 16);

  std::vector<TransformationTable> gen;
  std::size_t covered = closure(space, gen).size();
  while (covered < all.size()) {
    std::size_t best = covered;
    const TransformationTable* pick = nullptr;
    for (const TransformationTable& cand : all) {
      std::vector<TransformationTable> trial = gen;
      trial.push_back(cand);
      std::size_t size = closure(space, trial).size();
      if (size > best) {
        best = size;
        pick = &cand;
      }
    }
    REQUIRE(pick != nullptr);
    gen.push_back(*pick);
    covered = best;
  }
  CHECK(covered == 16);
  CHECK(Int(static_cast<long>(gen.size())) <= rank_upper_bound(gl.group, gl.lattice));
}

TEST_CASE("tiny alphabets are rejected") {
  GroupLattice gl("Z4");
  AlphaVector alpha = alpha_mobius(gl.lattice, 2);
  CHECK(ca_test::contains(
      ca_test::message_of<PreconditionError>(
          [&] { relrank(gl.group, gl.lattice, alpha, 1); }),
      "BadAlphabet"));
}

}  // TEST_SUITE
