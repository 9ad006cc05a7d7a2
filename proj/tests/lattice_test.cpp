#include <string>
#include <vector>

#include "ca/error.hpp"
#include "ca/group.hpp"
#include "ca/lattice.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace ca;
using ca_test::GroupLattice;

TEST_SUITE("lattice") {

TEST_CASE("subgroup and class censuses") {
  struct Case {
    const char* g;
    int subgroups, classes;
  };
  const Case cases[] = {
      {"Z2", 2, 2},        {"Z4", 3, 3},         {"Z2xZ2", 5, 5},
      {"Z6", 4, 4},        {"S3", 6, 4},         {"D4", 10, 8},
      {"Q8", 6, 6},        {"A4", 10, 5},        {"D6", 16, 10},
      {"Z12", 6, 6},       {"Z2xZ6", 10, 10},    {"Z2xZ4", 8, 8},
      {"Z2xZ2xZ2", 16, 16}, {"Z3xZ3", 6, 6},
  };
  for (const auto& c : cases) {
    CAPTURE(c.g);
    GroupLattice gl(c.g);
    CHECK(gl.lattice.size() == c.subgroups);
    CHECK(static_cast<int>(gl.lattice.classes.size()) == c.classes);
  }
}

TEST_CASE("canonical order: G first, trivial last, orders decreasing") {
  for (const char* spec : {"S3", "D4", "Z12", "A4"}) {
    CAPTURE(spec);
    GroupLattice gl(spec);
    const SubgroupLattice& lat = gl.lattice;
    const FiniteGroup& g = gl.group;

    CHECK(lat.subgroups[0].order == g.n);
    CHECK(lat.subgroups[lat.trivial_index()].mask == 1);
    CHECK(lat.index_of(lat.subgroups[0].mask) == 0);
    CHECK(lat.index_of(1) == lat.trivial_index());
    CHECK(lat.index_of(0xDEADBEEF) == -1);

    for (int i = 0; i + 1 < lat.size(); ++i) {
      const Subgroup& a = lat.subgroups[i];
      const Subgroup& b = lat.subgroups[i + 1];
      bool ordered = a.order > b.order ||
                     (a.order == b.order && a.elements() < b.elements());
      CHECK(ordered);
    }

    // every subgroup really is one, and masks are unique
    for (int i = 0; i < lat.size(); ++i) {
      CHECK(is_subgroup_mask(g, lat.subgroups[i].mask));
      CHECK(lat.index_of(lat.subgroups[i].mask) == i);
    }
  }
}

TEST_CASE("classes partition the lattice into conjugates") {
  for (const char* spec : {"S3", "D4", "A4", "Q8"}) {
    CAPTURE(spec);
    GroupLattice gl(spec);
    const SubgroupLattice& lat = gl.lattice;
    const FiniteGroup& g = gl.group;

    int seen = 0;
    for (std::size_t c = 0; c < lat.classes.size(); ++c) {
      const SubgroupClass& cls = lat.classes[c];
      seen += static_cast<int>(cls.members.size());
      CHECK(cls.representative == cls.members.front());
      const Subgroup& rep = lat.subgroups[cls.representative];

      for (int m : cls.members) {
        CHECK(lat.class_of[m] == static_cast<int>(c));
        CHECK(lat.subgroups[m].order == rep.order);
        bool conjugate = false;
        for (int x = 0; x < g.n && !conjugate; ++x)
          conjugate = conjugate_mask(g, rep.mask, x) == lat.subgroups[m].mask;
        CHECK(conjugate);
      }

      // the recorded normalizer is N_G(rep), recomputed from scratch
      std::uint64_t nmask = 0;
      for (int x = 0; x < g.n; ++x)
        if (conjugate_mask(g, rep.mask, x) == rep.mask) nmask |= std::uint64_t{1} << x;
      CHECK(lat.subgroups[cls.normalizer].mask == nmask);

      // orbit-stabilizer for the conjugation action
      CHECK(cls.members.size() * lat.subgroups[cls.normalizer].order ==
            static_cast<std::size_t>(g.n));
    }
    CHECK(seen == lat.size());
  }
}

TEST_CASE("S3 has one class of three reflections, self-normalizing") {
  GroupLattice gl("S3");
  const SubgroupLattice& lat = gl.lattice;
  REQUIRE(lat.classes.size() == 4);
  int found = 0;
  for (const auto& cls : lat.classes) {
    const Subgroup& rep = lat.subgroups[cls.representative];
    if (rep.order == 2) {
      ++found;
      CHECK(cls.members.size() == 3);
      CHECK(lat.subgroups[cls.normalizer].order == 2);
    }
    if (rep.order == 3) {
      CHECK(cls.members.size() == 1);
      CHECK(lat.subgroups[cls.normalizer].order == 6);
    }
  }
  CHECK(found == 1);
}

TEST_CASE("Moebius values on classical lattices") {
  auto mu_bottom_top = [](const char* spec) {
    GroupLattice gl(spec);
    return gl.lattice.mobius(gl.lattice.trivial_index(), 0);
  };
  CHECK(mu_bottom_top("S3") == 3);
  CHECK(mu_bottom_top("Z2xZ2") == 2);
  CHECK(mu_bottom_top("Z2xZ2xZ2") == -8);
  CHECK(mu_bottom_top("Z4") == 0);
  CHECK(mu_bottom_top("Z6") == 1);
  CHECK(mu_bottom_top("Q8") == 0);
  CHECK(mu_bottom_top("Z2") == -1);

  // for cyclic groups the lattice Moebius function is the number-theoretic one
  GroupLattice z12("Z12");
  const SubgroupLattice& lat = z12.lattice;
  int e = lat.trivial_index();
  for (int k : lat.upset(e)) {
    int d = lat.subgroups[k].order;  // interval [e, K] is the divisor lattice of d
    long expect = 0;
    switch (d) {
      case 1: expect = 1; break;
      case 2: case 3: expect = -1; break;
      case 4: case 9: expect = 0; break;
      case 6: expect = 1; break;
      case 12: expect = 0; break;
    }
    CHECK(lat.mobius(e, k) == expect);
  }
}

TEST_CASE("Moebius rows sum to zero on every proper interval") {
  for (const char* spec : {"S3", "D4", "Q8", "Z12", "A4", "Z2xZ2xZ2"}) {
    CAPTURE(spec);
    GroupLattice gl(spec);
    const SubgroupLattice& lat = gl.lattice;
    for (int i = 0; i < lat.size(); ++i) {
      CHECK(lat.mobius(i, i) == 1);
      for (int j : lat.upset(i)) {
        if (j == i) continue;
        long down = 0, up = 0;
        for (int k = 0; k < lat.size(); ++k) {
          if (!(lat.leq(i, k) && lat.leq(k, j))) continue;
          down += lat.mobius(i, k);
          up += lat.mobius(k, j);
        }
        CHECK(down == 0);
        CHECK(up == 0);
      }
    }
  }
}

TEST_CASE("upsets are complete and ordered big-to-small") {
  GroupLattice gl("D4");
  const SubgroupLattice& lat = gl.lattice;
  for (int i = 0; i < lat.size(); ++i) {
    const auto& up = lat.upset(i);
    REQUIRE(!up.empty());
    CHECK(up.front() == 0);
    CHECK(up.back() == i);
    for (std::size_t k = 0; k + 1 < up.size(); ++k) CHECK(up[k] < up[k + 1]);
    int count = 0;
    for (int j = 0; j < lat.size(); ++j)
      if (lat.leq(i, j)) ++count;
    CHECK(count == static_cast<int>(up.size()));
    for (int j : up) CHECK(lat.leq(i, j));
  }
}

TEST_CASE("Dedekind detection") {
  for (const char* good : {"Z2", "Z12", "Q8", "Z2xZ4", "Z3xZ3", "Z2xZ2xZ2"}) {
    CAPTURE(good);
    CHECK(is_dedekind(GroupLattice(good).lattice));
  }
  for (const char* bad : {"S3", "D4", "A4", "D6", "S4"}) {
    CAPTURE(bad);
    CHECK(!is_dedekind(GroupLattice(bad).lattice));
  }
}

TEST_CASE("minimal covers") {
  GroupLattice k4("Z2xZ2");
  MinCover top = min_cover(k4.lattice, 0);
  CHECK(top.least_order == 4);
  CHECK(top.covers.empty());
  MinCover bottom = min_cover(k4.lattice, k4.lattice.trivial_index());
  CHECK(bottom.least_order == 2);
  CHECK(bottom.covers.size() == 3);

  GroupLattice z6("Z6");
  MinCover b6 = min_cover(z6.lattice, z6.lattice.trivial_index());
  CHECK(b6.least_order == 2);
  CHECK(b6.covers.size() == 1);

  GroupLattice s3("S3");
  MinCover bs = min_cover(s3.lattice, s3.lattice.trivial_index());
  CHECK(bs.least_order == 2);
  CHECK(bs.covers.size() == 3);
  // the rotation subgroup sits directly under the whole group
  for (int i = 0; i < s3.lattice.size(); ++i)
    if (s3.lattice.subgroups[i].order == 3) {
      MinCover over = min_cover(s3.lattice, i);
      CHECK(over.least_order == 6);
      CHECK(over.covers == std::vector<int>{0});
    }
}

TEST_CASE("enumeration refuses oversized groups") {
  FiniteGroup d4 = build_group("D4");
  CHECK_THROWS_AS(enumerate_subgroups(d4, 4), LimitError);
  FiniteGroup big = build_group("Z2xZ2xZ2xZ2xZ2xZ2xZ2");
  REQUIRE(big.n == 128);
  CHECK_THROWS_AS(enumerate_subgroups(big), LimitError);
}

}  // TEST_SUITE
