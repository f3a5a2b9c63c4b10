#pragma once

#include <vector>

#include "hf/seifert.hpp"

namespace hf {

// Number of arms whose multiplicity a_i divides j (every arm divides 0).
Int epsilon_count(const SeifertData& s, const Int& j);

// Step of the tau function, delta_j = tau(j+1) - tau(j), in the integer form
//   delta_j = 1 - j e0 - sum_i ceil(j b_i / a_i).
// Works for any representative of the data (b_i need not be normalized); only
// a_i >= 1 is required.
Int delta_ceil(const SeifertData& s, const Int& j);

// The same step evaluated through the sawtooth identity
//   delta_j = 1 - m/2 + j/A + eps(j)/2 + sum_i ((j b_i / a_i))
// as an exact rational.  The two forms agree identically; a non-integral
// result can only mean a bug, and throws InternalInconsistency.
Int delta_sawtooth(const SeifertData& s, const Int& j);

// B = (m-1) * A.  Guarantee: delta_j >= 1 for every j >= B.  From the sawtooth
// form, each arm contributes eps_i/2 + ((j b_i / a_i)) > -1/2 (the sawtooth
// only reaches -1/2 in the limit, and equals 0 with eps_i = 1 when a_i | j),
// so delta_j > 1 - m + j/A, which is >= 0 once j >= (m-1)A; being an integer,
// delta_j >= 1 there.  So tau is strictly increasing from B on and every local
// minimum lives below B.
Int truncation_bound(const SeifertData& s);

// tau(0..B+margin) as checked 64-bit values (exact arithmetic inside, hard
// error if a value ever leaves the int64 range).
struct TauFunction {
  SeifertData seifert;
  std::vector<long long> values;  // size bound + margin + 1
  long long bound;                // truncation_bound(seifert)
};

TauFunction tau_sequence(const SeifertData& s, long long margin = 0);

// One local extremum of a step sequence: its value and the index interval
// [first, last] of the plateau attaining it.
struct Extremum {
  long long value = 0;
  long long first = 0;
  long long last = 0;
  bool operator==(const Extremum&) const = default;
};

// The reduced tau sequence: strictly alternating local extrema
//   m_0, M_0, m_1, M_1, ..., m_t
// starting and ending with a minimum.  tau(0) = 0 always counts as m_0 (the
// first step delta_0 = 1 makes it a genuine minimum), and the strictly rising
// tail after the last minimum is dropped.
struct ReducedTau {
  std::vector<long long> values;   // alternating extremum values, odd length
  std::vector<Extremum> extrema;   // same order, with plateau spans
};

// Collapse plateaus and keep only alternating extrema.  Total on any integer
// sequence (the rising tail after the last local minimum is discarded; if the
// sequence ends on a rise, the trailing artificial maximum is discarded too).
// Throws MalformedSequence on an empty input.
ReducedTau reduce(const std::vector<long long>& tau);
ReducedTau reduce(const TauFunction& t);

// The extrema of a reduced sequence split into the two alternating ranks:
// k+1 minima and k maxima.
struct ExtremaTable {
  std::vector<Extremum> mins;
  std::vector<Extremum> maxes;
};

ExtremaTable split_extrema(const ReducedTau& r);

// Full pipeline convenience: tau_sequence + reduce + split.
ExtremaTable measured_extrema(const SeifertData& s, long long margin = 0);

}  // namespace hf
