#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "coxeter/system.hpp"
#include "doctest.h"

using namespace cox;

namespace {

CoxeterSystem tri346() {
  return parse_system("gens a b c\npair a b 3\npair b c 4\npair a c 6\n");
}

}  // namespace

TEST_CASE("parse: smallest nontrivial system") {
  CoxeterSystem sys = parse_system("gens a b\npair a b 3");
  CHECK(sys.rank() == 2);
  CHECK(sys.m(0, 1) == MValue::finite(3));
  CHECK(sys.m(0, 0) == MValue::finite(1));
  CHECK(sys.index_of("b") == 1);
}

TEST_CASE("parse: the (3,4,6) triangle system") {
  CoxeterSystem sys = tri346();
  CHECK(sys.m(0, 1) == MValue::finite(3));
  CHECK(sys.m(1, 2) == MValue::finite(4));
  CHECK(sys.m(0, 2) == MValue::finite(6));
}

TEST_CASE("parse: defaults, comments, inf") {
  CoxeterSystem sys = parse_system("# comment\ngens a b c # trailing\npair a b inf\n\n");
  CHECK(sys.m(0, 1).is_inf());
  CHECK(sys.m(0, 2) == MValue::finite(2));
  CHECK(sys.m(1, 2) == MValue::finite(2));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_system("gens a b\npair a b 1"), ParseError);  // m < 2
  CHECK_THROWS_AS(parse_system("gens a a"), ParseError);              // duplicate name
  CHECK_THROWS_AS(parse_system("gens a b\npair a c 3"), ParseError);  // unknown name
  CHECK_THROWS_AS(parse_system("gens a b\npair a b x3"), ParseError); // malformed int
  CHECK_THROWS_AS(parse_system("gens a b\npair a b 3\npair b a 3"), ParseError);
  CHECK_THROWS_AS(parse_system("gens a b\npair a a 3"), ParseError);
  CHECK_THROWS_AS(parse_system("gens e x"), ParseError);  // reserved name
  CHECK_THROWS_AS(parse_system(""), ParseError);
  try {
    parse_system("gens a b\npair a b 1");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("serialize round-trip is the identity") {
  const char* texts[] = {
      "gens a b\npair a b 3",
      "gens a b c\npair a b 3\npair b c 4\npair a c 6",
      "gens x y z w\npair x y inf\npair z w 5",
  };
  for (const char* text : texts) {
    CoxeterSystem sys = parse_system(text);
    CoxeterSystem again = parse_system(sys.serialize());
    CHECK(again == sys);
    CHECK(again.serialize() == sys.serialize());
    CHECK(again.fingerprint() == sys.fingerprint());
  }
}

TEST_CASE("induced subsystem: submatrix restriction") {
  CoxeterSystem a3 = parse_system("gens s1 s2 s3\npair s1 s2 3\npair s2 s3 3");
  CoxeterSystem sub = induced_subsystem(a3, GenSet{0, 1});
  CHECK(sub.rank() == 2);
  CHECK(sub.m(0, 1) == MValue::finite(3));

  CoxeterSystem empty = induced_subsystem(a3, GenSet{});
  CHECK(empty.rank() == 0);  // W_empty = 1

  CoxeterSystem i26 = induced_subsystem(tri346(), GenSet{0, 2});
  CHECK(i26.rank() == 2);
  CHECK(i26.m(0, 1) == MValue::finite(6));

  CHECK_THROWS_AS(induced_subsystem(a3, GenSet{0, 5}), InvalidArgument);
}

TEST_CASE("induced subsystem is functorial") {
  CoxeterSystem hexa = parse_system(
      "gens a b c x y z\npair a b 3\npair b c 4\npair a c 6\npair x y 3\npair y z 3");
  GenSet T{0, 1, 3, 4};
  GenSet U_in_T{0, 1, 2};  // indices into the T-subsystem
  CoxeterSystem via_T = induced_subsystem(induced_subsystem(hexa, T), U_in_T);
  // relabel U back to ambient indices: positions 0,1,2 of T = {0,1,3}
  CoxeterSystem direct = induced_subsystem(hexa, GenSet{0, 1, 3});
  CHECK(via_T == direct);
}

TEST_CASE("components: m=2 gives no edge") {
  CoxeterSystem sys = parse_system("gens a b");
  auto comps = components(sys, GenSet{0, 1});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == GenSet{0});
  CHECK(comps[1] == GenSet{1});
}

TEST_CASE("components: triangle is connected, A3 ends are not") {
  auto tri = components(tri346(), GenSet{0, 1, 2});
  REQUIRE(tri.size() == 1);
  CHECK(tri[0] == GenSet{0, 1, 2});

  CoxeterSystem a3 = parse_system("gens s1 s2 s3\npair s1 s2 3\npair s2 s3 3");
  auto ends = components(a3, GenSet{0, 2});  // m_13 = 2
  REQUIRE(ends.size() == 2);
  CHECK(ends[0] == GenSet{0});
  CHECK(ends[1] == GenSet{2});
}

TEST_CASE("components partition T and cannot merge") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    CoxeterMatrix m(n);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int r = static_cast<int>(rng() % 4);
        m.set(i, j, r == 0 ? MValue::finite(2) : r == 1 ? MValue::finite(3)
                           : r == 2                     ? MValue::finite(5)
                                                        : MValue::inf());
      }
    CoxeterSystem sys(names, m);
    GenSet T;
    for (int i = 0; i < n; ++i)
      if (rng() % 2) T.add(i);
    auto comps = components(sys, T);

    GenSet unions;
    for (const auto& c : comps) {
      CHECK((c & unions).empty());  // pairwise disjoint
      unions = unions | c;
    }
    CHECK(unions == T);  // covers T
    // no diagram edge joins two different parts
    for (size_t p = 0; p < comps.size(); ++p)
      for (size_t q = p + 1; q < comps.size(); ++q)
        for (int i : comps[p].indices())
          for (int j : comps[q].indices()) {
            MValue v = sys.m(i, j);
            CHECK((v == MValue::finite(2)));
          }
  }
}

TEST_CASE("deterministic subset order") {
  CHECK(GenSet::order_before(GenSet{0}, GenSet{0, 1}));
  CHECK(GenSet::order_before(GenSet{0, 2}, GenSet{1}));
  CHECK(GenSet::order_before(GenSet{0, 1}, GenSet{0, 2}));
  CHECK(!GenSet::order_before(GenSet{1}, GenSet{0, 2}));
  CHECK(!GenSet::order_before(GenSet{}, GenSet{}));
  CHECK(GenSet::order_before(GenSet{}, GenSet{0}));
}
