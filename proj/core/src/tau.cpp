#include "hf/tau.hpp"

#include <utility>

#include "hf/errors.hpp"

namespace hf {

namespace {

void check_arms(const SeifertData& s) {
  for (const auto& arm : s.arms) {
    if (arm.a < 1) throw InvalidArgs("tau: arm multiplicity must be >= 1");
  }
}

}  // namespace

Int epsilon_count(const SeifertData& s, const Int& j) {
  check_arms(s);
  Int cnt = 0;
  for (const auto& arm : s.arms) {
    if (j % arm.a == 0) cnt++;
  }
  return cnt;
}

Int delta_ceil(const SeifertData& s, const Int& j) {
  check_arms(s);
  Int d = 1 - j * s.e0;
  for (const auto& arm : s.arms) {
    d -= ceil_div(j * arm.b, arm.a);
  }
  return d;
}

Int delta_sawtooth(const SeifertData& s, const Int& j) {
  check_arms(s);
  // Note this display has no e0 term: it presumes the homology-sphere
  // identity, which determines e0 from the arms.  Both step forms are
  // invariant under the representative change (e0, b_i) -> (e0-1, b_i+a_i),
  // so they agree on every representative of valid data.
  Int m = static_cast<long>(s.arms.size());
  Rat d = Rat(1) - make_rat(m, 2) + make_rat(j, arm_product(s)) +
          make_rat(epsilon_count(s, j), 2);
  for (const auto& arm : s.arms) {
    d += sawtooth(make_rat(j * arm.b, arm.a));
  }
  if (!is_integer(d)) {
    throw InternalInconsistency("delta_sawtooth produced a non-integer step");
  }
  return Int(d.get_num());
}

Int truncation_bound(const SeifertData& s) {
  check_arms(s);
  Int m = static_cast<long>(s.arms.size());
  return (m - 1) * arm_product(s);
}

TauFunction tau_sequence(const SeifertData& s, long long margin) {
  if (margin < 0) throw InvalidArgs("tau: margin must be >= 0");
  if (!validate(s)) {
    throw MalformedInput("tau: seifert data fails the homology-sphere identity");
  }
  Int bound_big = truncation_bound(s);
  long long bound = to_i64(bound_big, "tau truncation bound");
  if (bound + margin > 20000000LL) {
    throw InvalidArgs("tau: truncation bound too large to materialize");
  }
  TauFunction t;
  t.seifert = s;
  t.bound = bound;
  t.values.reserve(static_cast<size_t>(bound + margin + 1));
  Int acc = 0;
  t.values.push_back(0);
  for (long long j = 0; j < bound + margin; j++) {
    acc += delta_ceil(s, from_i64(j));
    t.values.push_back(to_i64(acc, "tau value"));
  }
  return t;
}

ReducedTau reduce(const std::vector<long long>& tau) {
  if (tau.empty()) throw MalformedSequence("reduce: empty sequence");

  // Collapse runs of equal values, remembering each run's index span.
  std::vector<Extremum> runs;
  for (size_t i = 0; i < tau.size(); i++) {
    if (!runs.empty() && runs.back().value == tau[i]) {
      runs.back().last = static_cast<long long>(i);
    } else {
      runs.push_back({tau[i], static_cast<long long>(i), static_cast<long long>(i)});
    }
  }

  // Keep local extrema only.  Edge runs count as extrema of the one-sided
  // kind; interior runs that pass through monotonically are dropped.
  ReducedTau r;
  int n = static_cast<int>(runs.size());
  std::vector<int> kind;  // -1 min, +1 max, parallel to r.extrema
  for (int i = 0; i < n; i++) {
    bool left_up = (i == 0) || (runs[i - 1].value > runs[i].value);
    bool right_up = (i == n - 1) || (runs[i + 1].value > runs[i].value);
    if (left_up && right_up) {
      r.extrema.push_back(runs[i]);
      kind.push_back(-1);
    } else if (!left_up && !right_up) {
      r.extrema.push_back(runs[i]);
      kind.push_back(+1);
    }
  }
  // A sequence computed past its truncation bound always ends rising; the
  // final one-sided "maximum" is an artifact of stopping, not a feature.
  if (!kind.empty() && kind.back() == +1) {
    r.extrema.pop_back();
    kind.pop_back();
  }
  r.values.reserve(r.extrema.size());
  for (const auto& e : r.extrema) r.values.push_back(e.value);
  return r;
}

ReducedTau reduce(const TauFunction& t) { return reduce(t.values); }

ExtremaTable split_extrema(const ReducedTau& r) {
  ExtremaTable t;
  for (size_t i = 0; i < r.extrema.size(); i++) {
    if (i % 2 == 0) {
      t.mins.push_back(r.extrema[i]);
    } else {
      t.maxes.push_back(r.extrema[i]);
    }
  }
  return t;
}

ExtremaTable measured_extrema(const SeifertData& s, long long margin) {
  return split_extrema(reduce(tau_sequence(s, margin)));
}

}  // namespace hf
