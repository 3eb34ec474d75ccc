#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "brauercat/diagram.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace brauercat;

namespace {

long double_factorial(int n) {  // n!! for odd n, 1 for n <= 0
  long out = 1;
  for (int k = n; k > 1; k -= 2) out *= k;
  return out;
}

// Independent count of perfect matchings by recursion, without constructing.
long count_pairings(int free_points) {
  if (free_points <= 0) return 1;
  return (free_points - 1) * count_pairings(free_points - 2);
}

// Replays a word through a plain union-find on strand segments; independent
// of the rewriting engine.
Matching replay(const GeneratorWord& word) {
  validate_word(word);
  std::vector<int> parent;
  auto fresh = [&] {
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(parent.size()) - 1;
  };
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  const int m = word.input_width;
  std::vector<int> bottom_node(m), row;
  for (int j = 0; j < m; ++j) {
    bottom_node[j] = fresh();
    row.push_back(bottom_node[j]);
  }
  for (const Slice& s : word.slices) {
    int p = s.pos - 1;
    switch (s.kind) {
      case Slice::Kind::Cross:
        std::swap(row[p], row[p + 1]);
        break;
      case Slice::Kind::Cap:
        unite(row[p], row[p + 1]);
        row.erase(row.begin() + p, row.begin() + p + 2);
        break;
      case Slice::Kind::Cup: {
        int n1 = fresh(), n2 = fresh();
        unite(n1, n2);
        row.insert(row.begin() + p, {n1, n2});
        break;
      }
      case Slice::Kind::Dot:
        break;
    }
  }
  std::map<int, std::vector<int>> classes;
  for (int j = 0; j < m; ++j) classes[find(bottom_node[j])].push_back(j + 1);
  for (size_t k = 0; k < row.size(); ++k)
    classes[find(row[k])].push_back(m + static_cast<int>(k) + 1);
  std::vector<std::pair<int, int>> pairs;
  for (auto& [root, members] : classes) {
    REQUIRE(members.size() == 2);
    pairs.emplace_back(members[0], members[1]);
  }
  return canonicalize(pairs, m, static_cast<int>(row.size()));
}

}  // namespace

TEST_CASE("canonicalize sorts and validates") {
  CHECK(canonicalize({{2, 1}}, 1, 1).pairs == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(canonicalize({{3, 1}, {4, 2}}, 2, 2).pairs ==
        std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  CHECK(canonicalize({{1, 2}, {4, 3}}, 2, 2).pairs ==
        std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});

  CHECK_THROWS_AS(canonicalize({{1, 2}, {2, 3}}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize({{1, 2}}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize({{1, 2}}, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize({{1, 1}}, 1, 1), std::invalid_argument);
}

TEST_CASE("canonicalize is idempotent and input-order invariant") {
  for (int trial = 0; trial < 50; ++trial) {
    Matching mt = testing::random_matching(3, 3);
    auto shuffled = mt.pairs;
    std::shuffle(shuffled.begin(), shuffled.end(), testing::rng());
    for (auto& p : shuffled)
      if (testing::rand_int(0, 1)) std::swap(p.first, p.second);
    CHECK(canonicalize(shuffled, 3, 3) == mt);
    CHECK(canonicalize(mt.pairs, 3, 3) == mt);
  }
}

TEST_CASE("endpoint roles") {
  Matching cup = canonicalize({{1, 2}}, 0, 2);
  CHECK(role(cup, 1) == EndpointRole::CupLeft);
  CHECK(role(cup, 2) == EndpointRole::CupRight);

  Matching cap = canonicalize({{1, 2}}, 2, 0);
  CHECK(role(cap, 1) == EndpointRole::CapLeft);
  CHECK(role(cap, 2) == EndpointRole::CapRight);

  Matching wire = canonicalize({{1, 2}}, 1, 1);
  CHECK(role(wire, 1) == EndpointRole::VerticalBottom);
  CHECK(role(wire, 2) == EndpointRole::VerticalTop);

  CHECK_THROWS_AS(role(wire, 3), std::out_of_range);
  CHECK_THROWS_AS(role(wire, 0), std::out_of_range);

  CHECK(dots_allowed(wire, 2));
  CHECK_FALSE(dots_allowed(wire, 1));
  CHECK(dot_home(cup, 1) == 2);
  CHECK(dot_home(cap, 2) == 1);
}

TEST_CASE("equivalence is key equality at fixed arity") {
  Matching e = canonicalize({{1, 2}, {3, 4}}, 2, 2);
  CHECK(equivalent(make_diagram(e), make_diagram(e)));

  Matching s = canonicalize({{1, 4}, {2, 3}}, 2, 2);
  CHECK_FALSE(equivalent(make_diagram(s, {1, 0}), make_diagram(s, {0, 1})));
  Matching cup = canonicalize({{1, 2}}, 0, 2);
  CHECK_FALSE(equivalent(make_diagram(cup, {}, {}, {{0, 1}}), make_diagram(cup)));
  CHECK_THROWS_AS(equivalent(make_diagram(e), make_diagram(cup)), std::invalid_argument);
}

TEST_CASE("diagram invariants are enforced") {
  Matching cup = canonicalize({{1, 2}}, 0, 2);
  CHECK_THROWS_AS(make_diagram(cup, {1, 0}), std::invalid_argument);  // dot at cup-left
  Matching wire = canonicalize({{1, 2}}, 1, 1);
  CHECK_THROWS_AS(make_diagram(wire, {0}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(make_diagram(cup, {0, 0}, {}, {{1, 1}}), std::invalid_argument);  // odd bubble
}

TEST_CASE("matching enumeration counts are double factorials") {
  CHECK(enumerate_matchings(0, 2).size() == 1);
  CHECK(enumerate_matchings(0, 6).size() == 15);
  CHECK(enumerate_matchings(1, 2).empty());

  for (int r = 1; r <= 6; ++r) {
    long expect = double_factorial(2 * r - 1);
    CHECK(static_cast<long>(enumerate_matchings(0, 2 * r).size()) == expect);
    CHECK(count_pairings(2 * r) == expect);
    if (r <= 4) CHECK(static_cast<long>(enumerate_matchings(r, r).size()) == expect);
  }
  auto all = enumerate_matchings(2, 2);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("dotted basis enumeration") {
  CHECK(enumerate_nd_basis(1, 1, 3, false).size() == 3);
  CHECK(enumerate_nd_basis(2, 2, 2, false).size() == 12);
  CHECK(enumerate_nd_basis(0, 4, 1, false).size() == 3);
  CHECK_THROWS_AS(enumerate_nd_basis(1, 1, std::nullopt, false), std::invalid_argument);

  for (int a = 1; a <= 4; ++a)
    for (int r = 1; r <= 3; ++r) {
      long expect = 1;
      for (int i = 0; i < r; ++i) expect *= a;
      expect *= double_factorial(2 * r - 1);
      auto basis = enumerate_nd_basis(r, r, a, false);
      CHECK(static_cast<long>(basis.size()) == expect);
      // Brute recount: dots assign independently over each matching's strands.
      long recount = 0;
      for (const Matching& mt : enumerate_matchings(r, r)) {
        long ways = 1;
        for (size_t i = 0; i < mt.pairs.size(); ++i) ways *= a;
        recount += ways;
      }
      CHECK(recount == static_cast<long>(basis.size()));
      for (const auto& d : basis) CHECK_NOTHROW(validate_diagram(d));
    }
}

TEST_CASE("degree-cutoff enumeration lists all low-degree diagrams") {
  auto basis = enumerate_nd_basis(1, 1, std::nullopt, false, 2);
  CHECK(basis.size() == 3);  // 0, 1 or 2 dots on the single strand
  auto with_bub = enumerate_nd_basis(0, 2, std::nullopt, true, 2);
  CHECK(with_bub.size() == 4);  // cup with 0..2 dots, plus cup * Delta_2
}

TEST_CASE("slicing replays to the same matching") {
  for (int total = 2; total <= 8; total += 2) {
    for (int m = 0; m <= total; ++m) {
      int s = total - m;
      for (const Matching& mt : enumerate_matchings(m, s)) {
        GeneratorWord word = slice_matching(mt);
        validate_word(word);
        CHECK(word.output_width() == s);
        CHECK(replay(word) == mt);
        GeneratorWord alt = slice_matching_alt(mt);
        validate_word(alt);
        CHECK(replay(alt) == mt);
      }
    }
  }
}

TEST_CASE("slice words for the small generators") {
  Matching e = canonicalize({{1, 2}, {3, 4}}, 2, 2);
  auto word = slice_matching(e);
  REQUIRE(word.slices.size() == 2);
  CHECK(word.slices[0] == Slice{Slice::Kind::Cap, 1});
  CHECK(word.slices[1] == Slice{Slice::Kind::Cup, 1});

  Matching s = canonicalize({{1, 4}, {2, 3}}, 2, 2);
  auto sword = slice_matching(s);
  REQUIRE(sword.slices.size() == 1);
  CHECK(sword.slices[0] == Slice{Slice::Kind::Cross, 1});

  Matching nested = canonicalize({{1, 4}, {2, 3}}, 0, 4);
  CHECK(replay(slice_matching(nested)) == nested);
}

TEST_CASE("word validation rejects inconsistent chains") {
  GeneratorWord w;
  w.input_width = 1;
  w.append({Slice::Kind::Cap, 1});
  CHECK_THROWS_AS(validate_word(w), std::invalid_argument);
  GeneratorWord w2;
  w2.input_width = 2;
  w2.append({Slice::Kind::Cross, 2});
  CHECK_THROWS_AS(validate_word(w2), std::invalid_argument);
  GeneratorWord w3;
  w3.input_width = 0;
  w3.append({Slice::Kind::Dot, 1});
  CHECK_THROWS_AS(validate_word(w3), std::invalid_argument);
}

TEST_CASE("canonical text form") {
  Matching cup = canonicalize({{1, 2}}, 0, 2);
  CHECK(to_string(make_diagram(cup, {0, 1})) == "pairs=[(1,2)] top=[0,1]");
  Matching empty = canonicalize({}, 0, 0);
  CHECK(to_string(make_diagram(empty, {}, {}, {{0, 1}})) == "bub {0:1}");
  Matching wire = canonicalize({{1, 2}}, 1, 1);
  CHECK(to_string(make_diagram(wire, {2}, {0}, {{2, 1}})) ==
        "pairs=[(1,2)] top=[2] bot=[0] bub {2:1}");
}
