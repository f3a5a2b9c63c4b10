#include "hf/exactmath.hpp"

#include <limits>

namespace hf {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InvalidArgs("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Int floor_div(const Int& a, const Int& b) {
  if (b <= 0) throw InvalidArgs("floor_div: divisor must be positive");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  if (b <= 0) throw InvalidArgs("ceil_div: divisor must be positive");
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

long long to_i64(const Int& v, const char* what) {
  static_assert(sizeof(long) == 8, "64-bit long assumed");
  if (!v.fits_slong_p())
    throw InvalidArgs(std::string(what) + " does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int mod_inverse(const Int& a, const Int& m) {
  if (m < 2) throw InvalidArgs("mod_inverse: modulus must be >= 2, got " + m.get_str());
  Int inv;
  if (!mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw NotInvertible("mod_inverse: " + a.get_str() + " has no inverse mod " + m.get_str());
  return inv;  // mpz_invert returns a representative in [1, m-1]
}

Rat sawtooth(const Rat& x) {
  if (is_integer(x)) return Rat(0);
  return x - floor_rat(x) - make_rat(1, 2);
}

Rat dedekind_sum(const Int& h, const Int& k) {
  if (k < 1) throw InvalidArgs("dedekind_sum: k must be >= 1, got " + k.get_str());
  if (h == 0) throw InvalidArgs("dedekind_sum: h must be nonzero");
  if (k == 1) return Rat(0);
  Int hr;
  mpz_mod(hr.get_mpz_t(), h.get_mpz_t(), k.get_mpz_t());  // hr in [0, k)
  // sum of ((i/k))((hi/k)) = sum (2r1 - k)(2r2 - k) / (4k^2) over terms where
  // neither residue vanishes; r1 = i never does for 0 < i < k.
  Int acc = 0;
  Int r2 = 0;
  for (Int i = 1; i < k; ++i) {
    r2 += hr;
    if (r2 >= k) r2 -= k;
    if (r2 == 0) continue;
    acc += (2 * i - k) * (2 * r2 - k);
  }
  return make_rat(acc, 4 * k * k);
}

std::vector<Int> euclid_chain(const Int& h, const Int& k) {
  if (!(h > 0 && h < k)) throw InvalidArgs("euclid_chain: need 0 < h < k");
  if (gcd(h, k) != 1)
    throw NotCoprime("euclid_chain: gcd(" + h.get_str() + ", " + k.get_str() + ") != 1");
  std::vector<Int> r{k, h};
  while (r.back() != 1) {
    Int next;
    mpz_mod(next.get_mpz_t(), r[r.size() - 2].get_mpz_t(), r.back().get_mpz_t());
    r.push_back(next);
  }
  return r;
}

Rat dedekind_sum_euclid(const Int& h, const Int& k) {
  const std::vector<Int> r = euclid_chain(h, k);
  const std::size_t n = r.size() - 2;
  Rat sum(0);
  for (std::size_t j = 1; j < r.size(); ++j) {
    Rat term = make_rat(1 + r[j] * r[j] + r[j - 1] * r[j - 1], r[j] * r[j - 1]);
    if (j % 2 == 0) term = -term;
    sum += term;
  }
  sum /= 12;
  if (n % 2 == 0) sum -= make_rat(1, 4);
  return sum;
}

std::vector<Int> hj_expansion(const Int& a, const Int& b) {
  if (!(a > b && b >= 1)) throw InvalidArgs("hj_expansion: need a > b >= 1");
  if (gcd(a, b) != 1)
    throw NotCoprime("hj_expansion: gcd(" + a.get_str() + ", " + b.get_str() + ") != 1");
  std::vector<Int> ks;
  Int x = a, y = b;
  while (y != 0) {
    Int k = ceil_div(x, y);
    ks.push_back(k);
    Int next = k * y - x;
    x = y;
    y = next;
  }
  return ks;
}

Rat eval_hj(const std::vector<Int>& ks) {
  if (ks.empty()) throw EmptyList("eval_hj: empty coefficient list");
  for (const Int& k : ks)
    if (k < 2) throw InvalidArgs("eval_hj: coefficients must be >= 2, got " + k.get_str());
  Rat x(ks.back());
  for (std::size_t j = ks.size() - 1; j-- > 0;) x = Rat(ks[j]) - 1 / x;
  return x;
}

}  // namespace hf
