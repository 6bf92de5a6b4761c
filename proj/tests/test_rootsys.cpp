#include <doctest.h>

#include <map>
#include <set>

#include "liegc/root_system.hpp"

using namespace liegc;

TEST_CASE("root counts per type") {
  std::map<std::string, std::size_t> expected = {
      {"A1", 2},  {"A2", 6},  {"A3", 12}, {"B2", 8},  {"B3", 18},
      {"C3", 18}, {"D4", 24}, {"G2", 12}, {"F4", 48}, {"A1+A1", 4},
  };
  for (auto& [name, count] : expected) {
    RootSystem rs = RootSystem::build(CartanType::parse(name));
    CHECK_MESSAGE(rs.num_roots() == count, name);
    // closed under negation, rank of span = rank
    for (std::size_t k = 0; k < rs.num_roots(); ++k) {
      RootVec neg = rs.root(static_cast<int>(k));
      for (int& x : neg) x = -x;
      CHECK(rs.index_of(neg) == rs.negative_of(static_cast<int>(k)));
    }
  }
  CHECK_THROWS_AS(CartanType::parse("H9"), UnknownType);
  CHECK_THROWS_AS(CartanType::parse("B1"), UnknownType);
  CHECK_THROWS_AS(CartanType::parse("E9"), UnknownType);
}

TEST_CASE("A2: all roots of equal length; enumeration by closure") {
  RootSystem rs = RootSystem::build(CartanType::parse("A2"));
  CHECK(rs.num_roots() == 6);
  // oracle: {±a1, ±a2, ±(a1+a2)}
  std::set<RootVec> expect = {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}};
  std::set<RootVec> got(rs.roots().begin(), rs.roots().end());
  CHECK(got == expect);
  Rational len = rs.pair(0, 0);
  for (std::size_t k = 0; k < rs.num_roots(); ++k)
    CHECK(rs.pair(static_cast<int>(k), static_cast<int>(k)) == len);
}

TEST_CASE("G2: two lengths with ratio 3") {
  RootSystem rs = RootSystem::build(CartanType::parse("G2"));
  std::map<Rational, int> lengths;
  for (std::size_t k = 0; k < rs.num_roots(); ++k)
    lengths[rs.pair(static_cast<int>(k), static_cast<int>(k))]++;
  REQUIRE(lengths.size() == 2);
  auto it = lengths.begin();
  Rational shorter = it->first;
  int nshort = it->second;
  ++it;
  CHECK(it->first / shorter == 3);
  CHECK(nshort == 6);
  CHECK(it->second == 6);
}

TEST_CASE("Cartan pairing integrality against the Killing pairing") {
  for (const char* name : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1+A2"}) {
    RootSystem rs = RootSystem::build(CartanType::parse(name));
    for (std::size_t a = 0; a < rs.num_roots(); ++a)
      for (std::size_t b = 0; b < rs.num_roots(); ++b) {
        Rational c = 2 * rs.pair(static_cast<int>(a), static_cast<int>(b)) /
                     rs.pair(static_cast<int>(b), static_cast<int>(b));
        CHECK(c.get_den() == 1);
      }
  }
}

TEST_CASE("closure table consistent with vector sums, rank <= 4") {
  for (const char* name : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4"}) {
    RootSystem rs = RootSystem::build(CartanType::parse(name));
    for (std::size_t a = 0; a < rs.num_roots(); ++a)
      for (std::size_t b = 0; b < rs.num_roots(); ++b) {
        RootVec sum = rs.root(static_cast<int>(a));
        for (int i = 0; i < rs.rank(); ++i) sum[i] += rs.root(static_cast<int>(b))[i];
        auto si = rs.sum_index(static_cast<int>(a), static_cast<int>(b));
        CHECK((si ? rs.index_of(sum) == *si : rs.index_of(sum) == -1));
      }
  }
}

TEST_CASE("heights") {
  RootSystem rs = RootSystem::build(CartanType::parse("A2"));
  std::vector<int> all(6);
  for (int k = 0; k < 6; ++k) all[k] = k;
  std::vector<int> simples = simple_system_of(rs, all);
  CHECK(simples.size() == 2);
  int a1 = rs.index_of({1, 0}), hi = rs.index_of({1, 1});
  CHECK(height_in(rs, a1, simples) == 1);
  CHECK(height_in(rs, hi, simples) == 2);
  CHECK(height_in(rs, rs.negative_of(hi), simples) == -2);
  // additivity where defined
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      auto s = rs.sum_index(a, b);
      if (!s) continue;
      CHECK(height_in(rs, *s, simples) ==
            height_in(rs, a, simples) + height_in(rs, b, simples));
    }
  // a root outside the subsystem span
  RootSystem rs2 = RootSystem::build(CartanType::parse("A1+A1"));
  int u = rs2.index_of({1, 0}), v = rs2.index_of({0, 1});
  CHECK_THROWS_AS(height_in(rs2, v, {u}), NotInSubsystem);
}

TEST_CASE("classify_subset") {
  RootSystem rs = RootSystem::build(CartanType::parse("A2"));
  SigmaAction sigma = SigmaAction::inner(rs);
  CHECK(sigma.is_inner(rs));

  std::vector<int> all(6);
  for (int k = 0; k < 6; ++k) all[k] = k;
  auto full = classify_subset({&rs, all}, sigma);
  CHECK(full.closed);
  CHECK(full.sigma_parabolic);
  CHECK(!full.sigma_positive);
  CHECK(full.symmetric_part.size() == 6);

  // A1 sigma-positive case
  RootSystem a1 = RootSystem::build(CartanType::parse("A1"));
  SigmaAction s1 = SigmaAction::inner(a1);
  auto c = classify_subset({&a1, {0}}, s1);
  CHECK(c.closed);
  CHECK(c.sigma_parabolic);
  CHECK(c.sigma_positive);

  // non-closed subset: checker reports the exact violations
  int a1i = rs.index_of({1, 0}), a2i = rs.index_of({0, 1});
  int hi = rs.index_of({1, 1}), na1 = rs.index_of({-1, 0});
  auto bad = classify_subset({&rs, {a1i, a2i, hi, na1}}, sigma);
  CHECK(!bad.closed);
  bool found = false;
  for (auto& v : bad.closure_violations) {
    // -a1 + (a1+a2) = a2 is inside; a2 + (-a1) is not a root; the genuine
    // violation is hi + na1 ... check that each reported triple really leaves
    auto si = rs.sum_index(v[0], v[1]);
    REQUIRE(si);
    CHECK(*si == v[2]);
    found = true;
  }
  CHECK(found);
}

TEST_CASE("enumerate sigma-parabolic subsets") {
  RootSystem a1 = RootSystem::build(CartanType::parse("A1"));
  SigmaAction s1 = SigmaAction::inner(a1);
  auto subs = enumerate_sigma_parabolic(a1, s1, 100);
  REQUIRE(subs.size() == 3);  // {a}, {-a}, R
  CHECK(subs[0].members == std::vector<int>{0});
  CHECK(subs[1].members == std::vector<int>{1});
  CHECK(subs[2].members == std::vector<int>{0, 1});

  RootSystem a2 = RootSystem::build(CartanType::parse("A2"));
  SigmaAction s2 = SigmaAction::inner(a2);
  EnumerateOptions pos_only;
  pos_only.sigma_positive_only = true;
  auto positives = enumerate_sigma_parabolic(a2, s2, 100, pos_only);
  CHECK(positives.size() == 6);  // Weyl group count of positive systems
  for (auto& r0 : positives) {
    auto c = classify_subset(r0, s2);
    CHECK(c.sigma_positive);
    CHECK(c.closed);
  }

  // sigma-positivity implies sigma-parabolicity on every enumerated subset
  auto all_parabolic = enumerate_sigma_parabolic(a2, s2, 1000);
  for (auto& r0 : all_parabolic) {
    auto c = classify_subset(r0, s2);
    CHECK(c.closed);
    CHECK(c.sigma_parabolic);
  }

  EnumerateOptions tiny_budget;
  tiny_budget.budget = 4;
  CHECK_THROWS_AS(enumerate_sigma_parabolic(a2, s2, 100, tiny_budget), SearchBudgetExceeded);
}

TEST_CASE("outer sigma action on A2") {
  RootSystem rs = RootSystem::build(CartanType::parse("A2"));
  SigmaAction sigma = SigmaAction::from_theta(rs, {1, 0});
  CHECK(!sigma.is_inner(rs));
  int a1 = rs.index_of({1, 0}), a2 = rs.index_of({0, 1});
  CHECK(sigma(a1) == rs.negative_of(a2));
  // sigma^2 = id and sigma(-a) = -sigma(a)
  for (std::size_t k = 0; k < rs.num_roots(); ++k) {
    int idx = static_cast<int>(k);
    CHECK(sigma(sigma(idx)) == idx);
    CHECK(sigma(rs.negative_of(idx)) == rs.negative_of(sigma(idx)));
  }
  // swapping nodes of B2 is not a diagram automorphism
  RootSystem b2 = RootSystem::build(CartanType::parse("B2"));
  CHECK_THROWS_AS(SigmaAction::from_theta(b2, {1, 0}), ThetaNotAutomorphism);
}
