#pragma once

#include <array>
#include <string>
#include <vector>

#include "hf/exactmath.hpp"

namespace hf {

// One exceptional fiber: multiplicity a >= 2 with coefficient b, 0 < b < a in
// the normal form used throughout.  The arm multiplicities of any data set we
// accept are pairwise coprime (forced by the homology-sphere identity below).
struct SeifertArm {
  Int a;
  Int b;
  bool operator==(const SeifertArm&) const = default;
};

// Seifert invariants (e0; (a_1,b_1), ..., (a_m,b_m)) of a Seifert fibered
// integer homology sphere, oriented as the link of the corresponding
// singularity (it bounds the negative-definite star plumbing).
struct SeifertData {
  Int e0;
  std::vector<SeifertArm> arms;
  bool operator==(const SeifertData&) const = default;
};

// a_1 * ... * a_m.
Int arm_product(const SeifertData& s);

// Structural checks (a_i >= 2, 0 < b_i < a_i) throw MalformedInput.
// Returns whether the integer-homology-sphere identity holds with negative
// orbifold Euler number:  -1 = e0 * A + sum_i b_i * (A / a_i),  e < 0.
bool validate(const SeifertData& s);

// Orbifold Euler number e = e0 + sum b_i / a_i (equals -1/A for valid data).
Rat orbifold_euler(const SeifertData& s);

// epsilon = (2 - m + sum 1/a_i) / e; an integer for the class we accept.
Rat orbifold_epsilon(const SeifertData& s);

// Normal-form Seifert invariants of the Brieskorn sphere Sigma(a1,a2,a3):
// solves b_i * (A/a_i) = -1 mod a_i with 0 < b_i < a_i, then e0 from the
// identity.  Requires a_i >= 2 pairwise coprime.
SeifertData brieskorn(const Int& a1, const Int& a2, const Int& a3);

enum class SurgerySign {
  PlusOneOverN,   // +1/n surgery on the (p,q) torus knot
  MinusOneOverN,  // -1/n
};

// The Brieskorn parameters produced by 1/n-surgery on the (p,q) torus knot:
//   S^3_{+1/n}(T_{p,q}) = -Sigma(p, q, pqn - 1)
//   S^3_{-1/n}(T_{p,q}) =  Sigma(p, q, pqn + 1)
// Requires p, q >= 2 coprime and n >= 1.
std::array<Int, 3> surgery_target(const Int& p, const Int& q, const Int& n, SurgerySign sign);

// Text forms accepted on the command line:
//   "brieskorn 2 5 9"
//   "e0=-2 arms=2/1,5/3,9/8"
// Whitespace between tokens is flexible.  Throws MalformedInput / the
// constructor errors.
SeifertData parse_seifert(const std::string& text);

// "e0=-2 arms=2/1,5/3,9/8" (parseable back).
std::string seifert_to_text(const SeifertData& s);

// Label for the manifold whose invariants the pipeline reports, i.e. the
// orientation reversal of the link: "-Sigma(2,5,9)" for three-arm data,
// "-Sigma(e0=-2; arms=2/1,3/2,5/2,7/3)" otherwise.
std::string manifold_label(const SeifertData& s);

}  // namespace hf
