#pragma once

#include <stdexcept>

namespace hf {

// Everything the library throws derives from Error, so callers (the CLI in
// particular) can map any domain failure to one exit path.  Each subclass names
// the precondition it reports; the message says which argument violated it.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain (wrong range, wrong count, ...).
struct InvalidArgs : Error { using Error::Error; };
// No inverse modulo m: gcd(a, m) != 1.
struct NotInvertible : Error { using Error::Error; };
// A continued-fraction evaluation was asked for an empty coefficient list.
struct EmptyList : Error { using Error::Error; };
// Unparseable text input, or structurally broken Seifert data.
struct MalformedInput : Error { using Error::Error; };
// Parameters that must be (pairwise) coprime are not.
struct NotCoprime : Error { using Error::Error; };
// A branched-cover triple outside the class this library computes.
struct UnsupportedTriple : Error { using Error::Error; };
// The overall grading shift did not reduce to an even integer; the input is
// outside the supported class (or there is a bug upstream of it).
struct NonIntegralShift : Error { using Error::Error; };
// Two formulas that must agree disagreed; always a bug, never user error.
struct InternalInconsistency : Error { using Error::Error; };
// A value sequence fed to the merge-tree builder is not strictly alternating.
struct MalformedSequence : Error { using Error::Error; };
// A tabulated closed form evaluated at a parameter where a stated multiplicity
// goes negative; the table does not cover this edge.
struct DomainEdge : Error { using Error::Error; };

}  // namespace hf
