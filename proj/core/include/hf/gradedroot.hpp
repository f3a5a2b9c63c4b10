#pragma once

#include <string>
#include <vector>

#include "hf/seifert.hpp"
#include "hf/tau.hpp"

namespace hf {

// A leaf of the merge tree together with the level at which its branch joins
// the rest of the tree.  leaf_value is the local-minimum level, merge_value
// the level of the saddle that swallows the branch.  The trunk leaf carries no
// pairing and does not appear in GradedRoot::pairs.
struct LeafPairing {
  long long leaf_value = 0;
  long long merge_value = 0;
  int leaf_index = 0;  // position among the minima, left to right

  bool operator==(const LeafPairing&) const = default;
};

// Merge tree of the sublevel sets of a zigzag sequence
//   v0 > V0 < v1 > V1 < ... > V_{n-2} < v_{n-1}
// (minima v, maxima V, strictly alternating, ends on minima).  Tracking
// connected components of {tau <= level} as the level rises: each minimum
// births a component, each maximum joins two.  Every leaf except one dies at a
// definite saddle; the survivor is the trunk - the infinite stem.
struct GradedRoot {
  std::vector<Extremum> leaves;           // minima, left to right
  std::vector<long long> merge_values;    // maxima, left to right
  std::vector<LeafPairing> pairs;         // one per non-trunk leaf
  int trunk_leaf = 0;                     // index into leaves
  long long trunk_value = 0;              // = leaves[trunk_leaf].value
};

// Builds the merge tree from a reduced sequence.  Saddles are processed in
// rising (value, index) order; at each saddle the two adjacent components
// join and the branch with the higher minimum dies there (elder rule).  Ties
// kill the younger (right) branch, so the leftmost occurrence of the global
// minimum is the trunk.  Throws MalformedSequence if the extrema do not
// strictly alternate or the sequence does not start and end on a minimum.
GradedRoot build_root(const ReducedTau& reduced);

// One summand U^{-1}Z[U] / (U^length) of the plus-flavored homology, living
// in degrees bottom, bottom+2, ..., bottom+2(length-1), with multiplicity
// mult.  length counts Z-generators per copy.
struct Tower {
  long long bottom = 0;
  long long length = 0;
  long long mult = 0;

  bool operator==(const Tower&) const = default;
};

// The plus-flavored Heegaard Floer homology in the standard spin-c structure:
// one infinite tower starting in degree d plus finitely many finite towers.
// All gradings here are even; odd_rank is kept for interface symmetry and is
// always zero for the manifolds this library computes.
struct HFPlusModule {
  long long d = 0;
  std::vector<Tower> towers;  // sorted by (bottom, length), multiplicities merged
  long long odd_rank = 0;

  bool operator==(const HFPlusModule&) const = default;
};

// Total rank of the finite part, counting multiplicity.
long long finite_rank(const HFPlusModule& m);

// Overall degree shift applied when converting combinatorial tau-levels to
// topological gradings: a rational expression in the orbifold data and
// Dedekind sums that is always an even integer for valid input.  Throws
// NonIntegralShift otherwise.
long long grading_shift(const SeifertData& s);

// Converts a merge tree to the homology module: degree 2*level + shift.  The
// trunk leaf gives the infinite tower (d = 2*trunk + shift); every pairing
// (v -> M) gives a finite tower with bottom 2*v + shift and length M - v.
HFPlusModule assemble_hf(const GradedRoot& root, long long shift);

// d-invariant without assembling the module: 2 * (min tau) + shift.
long long d_invariant_direct(const SeifertData& s);

// Full pipeline: tau sequence -> reduce -> merge tree -> module.  margin is
// the same safety slack as tau_sequence's.
HFPlusModule hf_plus(const SeifertData& s, long long margin = 0);

// Plain-text drawing of the merge tree, one leaf per column, trunk marked.
std::string root_ascii(const GradedRoot& root);

// Graphviz rendering: leaves and saddles as nodes at their levels.
std::string root_dot(const GradedRoot& root);

}  // namespace hf
