#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hf/exactmath.hpp>
#include <hf/gradedroot.hpp>
#include <hf/seifert.hpp>
#include <hf/tau.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

using namespace hf;

namespace {

SeifertData bk(long a1, long a2, long a3) {
  return brieskorn(Int(a1), Int(a2), Int(a3));
}

ReducedTau zigzag(std::vector<long long> values) {
  ReducedTau r;
  r.values = values;
  for (size_t i = 0; i < values.size(); ++i)
    r.extrema.push_back({values[i], static_cast<long long>(i),
                         static_cast<long long>(i)});
  return r;
}

// Slow pairing oracle: repeatedly take the lowest remaining saddle (leftmost
// on ties), kill its higher neighbor minimum (right neighbor on value ties),
// and splice the sequence.  Returns (dead minimum, saddle) value pairs plus
// the surviving trunk value.
std::pair<std::vector<std::pair<long long, long long>>, long long> pair_oracle(
    std::vector<long long> seq) {
  std::vector<std::pair<long long, long long>> out;
  while (seq.size() > 1) {
    size_t best = 1;
    for (size_t i = 3; i < seq.size(); i += 2)
      if (seq[i] < seq[best]) best = i;
    long long left = seq[best - 1], right = seq[best + 1];
    size_t dead = (right >= left) ? best + 1 : best - 1;
    out.push_back({seq[dead], seq[best]});
    size_t lo = std::min(best, dead), hi = std::max(best, dead);
    seq.erase(seq.begin() + lo, seq.begin() + hi + 1);
  }
  std::sort(out.begin(), out.end());
  return {out, seq[0]};
}

std::pair<std::vector<std::pair<long long, long long>>, long long> pairs_of(
    const GradedRoot& root) {
  std::vector<std::pair<long long, long long>> out;
  for (const auto& p : root.pairs) out.push_back({p.leaf_value, p.merge_value});
  std::sort(out.begin(), out.end());
  return {out, root.trunk_value};
}

}  // namespace

TEST_CASE("merge pairing on hand-built zigzags") {
  {
    GradedRoot r = build_root(zigzag({3, 5, 1, 4, 2, 6, 0}));
    REQUIRE(r.leaves.size() == 4);
    CHECK(r.merge_values == std::vector<long long>{5, 4, 6});
    CHECK(r.pairs == std::vector<LeafPairing>{{3, 5, 0}, {1, 6, 1}, {2, 4, 2}});
    CHECK(r.trunk_leaf == 3);
    CHECK(r.trunk_value == 0);
  }
  {
    GradedRoot r = build_root(zigzag({0, 5, 2, 5, 2, 3, 1}));
    CHECK(r.pairs == std::vector<LeafPairing>{{2, 5, 1}, {2, 3, 2}, {1, 5, 3}});
    CHECK(r.trunk_leaf == 0);
  }
  {
    // all minima equal: the leftmost one is the trunk, ties die rightward
    GradedRoot r = build_root(zigzag({0, 3, 0, 3, 0}));
    CHECK(r.pairs == std::vector<LeafPairing>{{0, 3, 1}, {0, 3, 2}});
    CHECK(r.trunk_leaf == 0);
  }
  {
    GradedRoot r = build_root(zigzag({7}));
    CHECK(r.pairs.empty());
    CHECK(r.trunk_value == 7);
  }
}

TEST_CASE("build_root rejects non-alternating input") {
  CHECK_THROWS_AS(build_root(zigzag({})), MalformedSequence);
  CHECK_THROWS_AS(build_root(zigzag({0, 1})), MalformedSequence);
  CHECK_THROWS_AS(build_root(zigzag({0, 1, 2})), MalformedSequence);
  CHECK_THROWS_AS(build_root(zigzag({1, 0, 1})), MalformedSequence);
  CHECK_THROWS_AS(build_root(zigzag({0, 1, 1})), MalformedSequence);
}

TEST_CASE("pairing agrees with the splice-out oracle") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 300; ++trial) {
    // random strict zigzag of odd length
    size_t mins = 1 + rng() % 8;
    std::vector<long long> seq;
    for (size_t i = 0; i < mins; ++i) {
      long long lo = static_cast<long long>(rng() % 9) - 4;
      if (!seq.empty()) {
        long long prev = seq.back();
        long long peak = std::max(prev, lo) + 1 + static_cast<long long>(rng() % 4);
        seq.push_back(peak);
      }
      seq.push_back(lo);
    }
    GradedRoot root = build_root(zigzag(seq));
    CHECK(pairs_of(root) == pair_oracle(seq));
  }
  // and on real reduced sequences
  for (auto s : {bk(2, 7, 17), bk(2, 7, 19), bk(3, 4, 13), bk(3, 5, 16),
                 bk(2, 5, 27), bk(2, 7, 33)}) {
    ReducedTau r = reduce(tau_sequence(s));
    CHECK(pairs_of(build_root(r)) == pair_oracle(r.values));
  }
}

TEST_CASE("merge tree of the (2,7,17) manifold") {
  GradedRoot r = build_root(reduce(tau_sequence(bk(2, 7, 17))));
  REQUIRE(r.leaves.size() == 8);
  CHECK(r.trunk_leaf == 2);
  CHECK(r.trunk_value == -3);
  CHECK(r.pairs == std::vector<LeafPairing>{{0, 1, 0},
                                            {-2, -1, 1},
                                            {-3, -2, 3},
                                            {-3, -2, 4},
                                            {-3, -2, 5},
                                            {-2, -1, 6},
                                            {0, 1, 7}});
}

TEST_CASE("grading shift anchors") {
  CHECK(grading_shift(bk(2, 3, 5)) == -2);
  CHECK(grading_shift(bk(2, 3, 11)) == -2);
  CHECK(grading_shift(bk(2, 5, 7)) == 0);
  CHECK(grading_shift(bk(2, 5, 9)) == -2);
  CHECK(grading_shift(bk(2, 5, 13)) == 0);
  for (long n = 1; n <= 3; ++n)
    CHECK(grading_shift(bk(2, 7, 14 * n + 3)) == 6 * n);
}

TEST_CASE("full modules of the small manifolds") {
  auto mod = [](long a1, long a2, long a3) { return hf_plus(bk(a1, a2, a3)); };

  HFPlusModule m235 = mod(2, 3, 5);
  CHECK(m235.d == -2);
  CHECK(m235.towers.empty());
  CHECK(m235.odd_rank == 0);

  CHECK(mod(2, 3, 11) == HFPlusModule{-2, {{-2, 1, 1}}, 0});
  CHECK(mod(2, 5, 7) == HFPlusModule{0, {{0, 1, 2}}, 0});
  CHECK(mod(2, 5, 9) == HFPlusModule{-2, {{-2, 1, 2}}, 0});
  CHECK(mod(2, 5, 13) == HFPlusModule{-2, {{-2, 1, 1}, {0, 1, 2}}, 0});
  CHECK(mod(2, 7, 13) == HFPlusModule{-4, {{-2, 1, 2}, {0, 1, 2}}, 0});
  CHECK(mod(2, 7, 17) == HFPlusModule{0, {{0, 1, 3}, {2, 1, 2}, {6, 1, 2}}, 0});
  CHECK(mod(2, 7, 19) == HFPlusModule{0, {{0, 1, 4}, {2, 1, 2}, {6, 1, 2}}, 0});
}

TEST_CASE("assembly bookkeeping") {
  SeifertData s = bk(2, 7, 17);
  GradedRoot root = build_root(reduce(tau_sequence(s)));
  long long shift = grading_shift(s);
  HFPlusModule m = assemble_hf(root, shift);
  CHECK(m.d == 2 * root.trunk_value + shift);
  CHECK(m == hf_plus(s));
  CHECK(finite_rank(m) == 7);
  // towers sorted by (bottom, length), multiplicities positive
  for (size_t i = 0; i + 1 < m.towers.size(); ++i) {
    auto &a = m.towers[i], &b = m.towers[i + 1];
    CHECK((a.bottom < b.bottom || (a.bottom == b.bottom && a.length < b.length)));
  }
  for (const auto& t : m.towers) {
    CHECK(t.length >= 1);
    CHECK(t.mult >= 1);
  }
}

TEST_CASE("direct d-invariant agrees with the assembled module") {
  for (auto s : {bk(2, 3, 7), bk(2, 5, 17), bk(2, 7, 15), bk(3, 4, 11), bk(3, 5, 14)})
    CHECK(d_invariant_direct(s) == hf_plus(s).d);
}

TEST_CASE("renderings") {
  GradedRoot r = build_root(reduce(tau_sequence(bk(2, 5, 13))));
  std::string ascii = root_ascii(r);
  CHECK(ascii.find("trunk") != std::string::npos);

  std::string dot = root_dot(r);
  CHECK(dot.rfind("graph gradedroot {", 0) == 0);
  CHECK(dot.back() == '\n');
  size_t edges = 0, pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
    ++edges;
    pos += 4;
  }
  CHECK(edges == 2 * r.pairs.size());
}
