#include "hf/semigroup.hpp"

#include <algorithm>

#include "hf/exactmath.hpp"

namespace hf {

TorusKnotSemigroup::TorusKnotSemigroup(long long p, long long q) : p_(p), q_(q) {
  if (p < 2 || q < 2)
    throw InvalidArgs("semigroup: generators must be >= 2, got " + std::to_string(p) + ", " +
                      std::to_string(q));
  if (gcd(from_i64(p), from_i64(q)) != 1)
    throw NotCoprime("semigroup: gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
  p_inv_mod_q_ = to_i64(mod_inverse(from_i64(p), from_i64(q)), "p^-1 mod q");
  for (long long s = 1; s <= frobenius(); ++s)
    if (!contains(s)) gaps_.push_back(s);
}

long long TorusKnotSemigroup::genus() const { return (p_ - 1) * (q_ - 1) / 2; }

long long TorusKnotSemigroup::frobenius() const { return p_ * q_ - p_ - q_; }

bool TorusKnotSemigroup::contains(long long s) const {
  if (s < 0) return false;
  if (s > frobenius()) return true;
  // Any s in S with s < pq is uniquely ap + bq with 0 <= a < q, b >= 0,
  // and a is forced: a = s * p^-1 mod q.  Membership is just b >= 0.
  long long a = (s % q_) * (p_inv_mod_q_ % q_) % q_;
  return s >= a * p_;
}

long long TorusKnotSemigroup::alpha(long long i) const {
  if (i < 0) throw InvalidArgs("alpha: index must be >= 0");
  auto it = std::upper_bound(gaps_.begin(), gaps_.end(), i);
  return static_cast<long long>(gaps_.end() - it);
}

}  // namespace hf
