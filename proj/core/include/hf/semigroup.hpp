#pragma once

#include <vector>

#include "hf/errors.hpp"

namespace hf {

// The numerical semigroup S = <p, q> = {ap + bq : a, b >= 0} for coprime
// p, q >= 2, together with its gap data.  Everything downstream only needs the
// gaps up to the Frobenius number pq - p - q; beyond it every integer is in S.
class TorusKnotSemigroup {
 public:
  TorusKnotSemigroup(long long p, long long q);

  long long p() const { return p_; }
  long long q() const { return q_; }

  // Number of gaps, (p-1)(q-1)/2.
  long long genus() const;

  // Largest integer not in S: pq - p - q = 2*genus() - 1.
  long long frobenius() const;

  bool contains(long long s) const;

  // The complement of S in [1, frobenius()], sorted ascending.
  const std::vector<long long>& gaps() const { return gaps_; }

  // Number of gaps strictly greater than i, for i >= 0.
  // alpha(0) = genus(); alpha(i) = 0 once i >= frobenius().
  long long alpha(long long i) const;

 private:
  long long p_, q_;
  long long p_inv_mod_q_;  // for O(1) membership via s = ap + bq, 0 <= a < q
  std::vector<long long> gaps_;
};

}  // namespace hf
