#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hf/exactmath.hpp>
#include <hf/seifert.hpp>
#include <hf/tau.hpp>

#include <random>
#include <vector>

using namespace hf;

namespace {

SeifertData bk(long a1, long a2, long a3) {
  return brieskorn(Int(a1), Int(a2), Int(a3));
}

// Step sequence recomputed with plain 64-bit arithmetic, independent of the
// bignum layer.  Only safe for the small parameters used here.
std::vector<long long> tau_oracle(const SeifertData& s, long long len) {
  long long e0 = to_i64(s.e0, "e0");
  std::vector<std::pair<long long, long long>> arms;
  for (const auto& arm : s.arms)
    arms.push_back({to_i64(arm.a, "a"), to_i64(arm.b, "b")});
  std::vector<long long> tau{0};
  long long acc = 0;
  for (long long j = 0; j + 1 < len; ++j) {
    long long d = 1 - j * e0;
    for (auto [a, b] : arms) d -= (j * b + a - 1) / a;  // ceil, j*b >= 0
    acc += d;
    tau.push_back(acc);
  }
  return tau;
}

std::vector<long long> values_of(const std::vector<Extremum>& es) {
  std::vector<long long> v;
  for (const auto& e : es) v.push_back(e.value);
  return v;
}

std::vector<long long> firsts_of(const std::vector<Extremum>& es) {
  std::vector<long long> v;
  for (const auto& e : es) v.push_back(e.first);
  return v;
}

}  // namespace

TEST_CASE("two step formulas agree everywhere below the truncation bound") {
  for (auto s : {bk(2, 3, 7), bk(2, 5, 9), bk(2, 7, 19), bk(3, 4, 11), bk(3, 5, 16)}) {
    Int bound = truncation_bound(s);
    for (Int j = 0; j <= bound; ++j) CHECK(delta_ceil(s, j) == delta_sawtooth(s, j));
  }
}

TEST_CASE("tau accumulates the step function from zero") {
  SeifertData s = bk(2, 5, 13);
  TauFunction t = tau_sequence(s, 5);
  CHECK(t.bound == to_i64(truncation_bound(s), "bound"));
  REQUIRE(static_cast<long long>(t.values.size()) == t.bound + 5 + 1);
  CHECK(t.values[0] == 0);
  for (long long j = 0; j + 1 < static_cast<long long>(t.values.size()); ++j)
    CHECK(t.values[j + 1] - t.values[j] == to_i64(delta_ceil(s, from_i64(j)), "d"));
  CHECK_THROWS_AS(tau_sequence(s, -1), InvalidArgs);

  SeifertData invalid = s;
  invalid.e0 += 1;
  CHECK_THROWS_AS(tau_sequence(invalid), MalformedInput);
}

TEST_CASE("tau values match an independent 64-bit recomputation") {
  for (auto s : {bk(2, 3, 5), bk(2, 5, 9), bk(2, 7, 17), bk(3, 4, 13), bk(3, 5, 14)}) {
    TauFunction t = tau_sequence(s);
    CHECK(t.values == tau_oracle(s, static_cast<long long>(t.values.size())));
  }
}

TEST_CASE("step function is invariant under representative changes") {
  std::mt19937 rng(424242);
  const long triples[][3] = {{2, 3, 5}, {2, 5, 9}, {2, 7, 19}, {3, 4, 11}, {3, 5, 14}};
  for (int trial = 0; trial < 100; ++trial) {
    auto& tr = triples[trial % 5];
    SeifertData s = bk(tr[0], tr[1], tr[2]);
    SeifertData shifted = s;
    int moves = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < moves; ++k) {
      size_t i = rng() % shifted.arms.size();
      if (rng() % 2) {
        shifted.arms[i].b += shifted.arms[i].a;
        shifted.e0 -= 1;
      } else {
        shifted.arms[i].b -= shifted.arms[i].a;
        shifted.e0 += 1;
      }
    }
    Int bound = truncation_bound(s);
    for (int probe = 0; probe < 25; ++probe) {
      Int j = from_i64(static_cast<long long>(rng() % 2000));
      if (j > bound) j = j % (bound + 1);
      CHECK(delta_ceil(s, j) == delta_ceil(shifted, j));
      CHECK(delta_sawtooth(shifted, j) == delta_ceil(shifted, j));
    }
  }
}

TEST_CASE("reduce on hand-built sequences") {
  CHECK_THROWS_AS(reduce(std::vector<long long>{}), MalformedSequence);

  ReducedTau single = reduce(std::vector<long long>{5});
  CHECK(single.values == std::vector<long long>{5});
  CHECK(single.extrema == std::vector<Extremum>{{5, 0, 0}});

  ReducedTau flat = reduce(std::vector<long long>{3, 3, 3});
  CHECK(flat.extrema == std::vector<Extremum>{{3, 0, 2}});

  // already alternating: kept verbatim
  ReducedTau zig = reduce(std::vector<long long>{3, 5, 1, 4, 2, 6, 0});
  CHECK(zig.values == std::vector<long long>{3, 5, 1, 4, 2, 6, 0});

  // plateaus collapse to spans; the rising tail is dropped
  ReducedTau pl = reduce(std::vector<long long>{0, 0, 1, 1, 0, 2, 2, 2});
  CHECK(pl.values == std::vector<long long>{0, 1, 0});
  CHECK(pl.extrema ==
        std::vector<Extremum>{{0, 0, 1}, {1, 2, 3}, {0, 4, 4}});

  // falling shoulder at the start is not a minimum
  CHECK(reduce(std::vector<long long>{2, 1}).values == std::vector<long long>{1});
  CHECK(reduce(std::vector<long long>{2, 1, 2}).values == std::vector<long long>{1});

  // monotone pass-through runs disappear
  CHECK(reduce(std::vector<long long>{0, 1, 1, 2, 3, 1}).values ==
        std::vector<long long>{0, 3, 1});
}

TEST_CASE("reduce output alternates strictly and starts/ends on minima") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long long> seq(1 + rng() % 40);
    for (auto& x : seq) x = static_cast<long long>(rng() % 7) - 3;
    ReducedTau r = reduce(seq);
    REQUIRE(r.values.size() % 2 == 1);
    REQUIRE(r.values.size() == r.extrema.size());
    for (size_t i = 0; i + 1 < r.values.size(); ++i) {
      if (i % 2 == 0)
        CHECK(r.values[i] < r.values[i + 1]);  // min -> max
      else
        CHECK(r.values[i] > r.values[i + 1]);  // max -> min
    }
    for (const auto& e : r.extrema) {
      CHECK(e.first <= e.last);
      CHECK(e.first >= 0);
      CHECK(e.last < static_cast<long long>(seq.size()));
      CHECK(seq[static_cast<size_t>(e.first)] == e.value);
      CHECK(seq[static_cast<size_t>(e.last)] == e.value);
    }
  }
}

TEST_CASE("reduced sequences of the small manifolds") {
  CHECK(reduce(tau_sequence(bk(2, 3, 5))).values == std::vector<long long>{0});
  CHECK(reduce(tau_sequence(bk(2, 5, 9))).values ==
        std::vector<long long>{0, 1, 0, 1, 0});
  CHECK(reduce(tau_sequence(bk(2, 5, 13))).values ==
        std::vector<long long>{0, 1, -1, 0, -1, 1, 0});
}

TEST_CASE("extrema tables of the benchmark manifolds") {
  {
    ExtremaTable t = measured_extrema(bk(2, 5, 7));
    CHECK(values_of(t.mins) == std::vector<long long>{0, 0, 0});
    CHECK(values_of(t.maxes) == std::vector<long long>{1, 1});
    CHECK(t.mins[1].first == 2);
    CHECK(t.mins[1].last == 10);
  }
  {
    ExtremaTable t = measured_extrema(bk(2, 5, 9));
    CHECK(values_of(t.mins) == std::vector<long long>{0, 0, 0});
    CHECK(values_of(t.maxes) == std::vector<long long>{1, 1});
    CHECK(t.mins[1].first == 8);
    CHECK(t.mins[1].last == 10);
  }
  {
    ExtremaTable t = measured_extrema(bk(2, 5, 17));
    CHECK(values_of(t.mins) == std::vector<long long>{0, -1, -1, -1, -1, 0});
    CHECK(values_of(t.maxes) == std::vector<long long>{1, 0, 0, 0, 1});
  }
  {
    ExtremaTable t = measured_extrema(bk(2, 7, 9));
    CHECK(values_of(t.mins) == std::vector<long long>{0, -1, -1, 0});
    CHECK(values_of(t.maxes) == std::vector<long long>{1, 0, 1});
    CHECK(firsts_of(t.mins) == std::vector<long long>{0, 14, 18, 32});
    CHECK(firsts_of(t.maxes) == std::vector<long long>{1, 15, 29});
  }
  {
    ExtremaTable t = measured_extrema(bk(2, 7, 11));
    CHECK(values_of(t.mins) == std::vector<long long>{0, -1, -1, -1, 0});
    CHECK(values_of(t.maxes) == std::vector<long long>{1, 0, 0, 1});
    CHECK(firsts_of(t.mins) == std::vector<long long>{0, 14, 20, 28, 42});
    CHECK(firsts_of(t.maxes) == std::vector<long long>{1, 15, 23, 37});
  }
  {
    ExtremaTable t = measured_extrema(bk(2, 7, 17));
    CHECK(values_of(t.mins) ==
          std::vector<long long>{0, -2, -3, -3, -3, -3, -2, 0});
    CHECK(values_of(t.maxes) == std::vector<long long>{1, -1, -2, -2, -2, -1, 1});
  }
  {
    ExtremaTable t = measured_extrema(bk(2, 7, 19));
    CHECK(t.mins ==
          std::vector<Extremum>{{0, 0, 0},
                                {-2, 12, 14},
                                {-3, 26, 28},
                                {-3, 30, 38},
                                {-3, 40, 42},
                                {-3, 44, 52},
                                {-3, 54, 56},
                                {-2, 68, 70},
                                {0, 82, 84}});
    CHECK(t.maxes ==
          std::vector<Extremum>{{1, 1, 1},
                                {-1, 15, 15},
                                {-2, 29, 29},
                                {-2, 39, 39},
                                {-2, 43, 43},
                                {-2, 53, 53},
                                {-1, 67, 67},
                                {1, 81, 81}});
  }
}

TEST_CASE("split keeps one more minimum than maxima") {
  for (auto s : {bk(2, 5, 9), bk(2, 7, 13), bk(3, 4, 11), bk(3, 5, 14)}) {
    ReducedTau r = reduce(tau_sequence(s));
    ExtremaTable t = split_extrema(r);
    CHECK(t.mins.size() == t.maxes.size() + 1);
    CHECK(2 * t.mins.size() - 1 == r.values.size());
    // interleaving: m_0 M_0 m_1 ... M_{k-1} m_k
    for (size_t i = 0; i < t.maxes.size(); ++i) {
      CHECK(t.mins[i].last < t.maxes[i].first);
      CHECK(t.maxes[i].last < t.mins[i + 1].first);
    }
  }
}
