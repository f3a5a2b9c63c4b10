#include "hf/formulas.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hf/errors.hpp"
#include "hf/exactmath.hpp"
#include "hf/semigroup.hpp"

namespace hf {

namespace {

void check_pq(long long p, long long q) {
  if (p < 2 || q < 2) {
    throw InvalidArgs("torus parameters must be at least 2");
  }
  if (std::gcd(p, q) != 1) {
    throw NotCoprime("torus parameters must be coprime");
  }
}

void check_n(long long n) {
  if (n < 1) {
    throw InvalidArgs("family parameter n must be at least 1");
  }
}

// Members of the semigroup in [0, u]: u+1 minus the gaps not exceeding u.
long long beta(const TorusKnotSemigroup& S, long long u) {
  return u + 1 - S.genus() + S.alpha(u);
}

void push_block(std::vector<Tower>& out, long long bottom, long long length,
                long long mult) {
  if (mult < 0) {
    throw DomainEdge(
        "closed-form tower multiplicity is negative for this parameter");
  }
  if (mult == 0 || length == 0) return;
  out.push_back({bottom, length, mult});
}

HFPlusModule merge_module(long long d, const std::vector<Tower>& main_part,
                          const std::vector<Tower>& indexed_part) {
  HFPlusModule m;
  m.d = d;
  std::map<std::pair<long long, long long>, long long> acc;
  for (const Tower& t : main_part) acc[{t.bottom, t.length}] += t.mult;
  for (const Tower& t : indexed_part) acc[{t.bottom, t.length}] += t.mult;
  for (const auto& [key, mult] : acc) {
    m.towers.push_back({key.first, key.second, mult});
  }
  return m;
}

// One affine case of a piecewise tabulated quantity: value c0 + ci*i on the
// inclusive index range [lo, hi], optionally restricted to one parity of i.
// Ranges are evaluated numerically, so cases that degenerate to empty at
// small n simply never match; the first matching case wins (the tables
// overlap once, consistently, at n = 1).
struct Piece {
  long long lo, hi;
  int parity;  // -1 any, 0 even i only, 1 odd i only
  long long c0, ci;
};

long long eval_pieces(const std::vector<Piece>& pieces, long long i,
                      const char* what) {
  for (const Piece& p : pieces) {
    if (i < p.lo || i > p.hi) continue;
    if (p.parity >= 0 && i % 2 != p.parity) continue;
    return p.c0 + p.ci * i;
  }
  throw InternalInconsistency(std::string("no tabulated case covers index in ") +
                              what);
}

struct FamilyTable {
  long long num_max = 0, num_min = 0;
  std::vector<Piece> pos_max, pos_min, val_max, val_min, dsame, dnext;
};

PredictedExtrema realize(const FamilyTable& t) {
  PredictedExtrema out;
  for (long long i = 0; i < t.num_min; ++i) {
    const long long pos = eval_pieces(t.pos_min, i, "minimum positions");
    const long long val = eval_pieces(t.val_min, i, "minimum values");
    out.table.mins.push_back({val, pos, pos});
  }
  for (long long i = 0; i < t.num_max; ++i) {
    const long long pos = eval_pieces(t.pos_max, i, "maximum positions");
    const long long val = eval_pieces(t.val_max, i, "maximum values");
    out.table.maxes.push_back({val, pos, pos});
    out.diff_same.push_back(eval_pieces(t.dsame, i, "same-index differences"));
    out.diff_next.push_back(eval_pieces(t.dnext, i, "next-index differences"));
  }
  return out;
}

FamilyTable table_2_5_m3(long long n) {
  FamilyTable t;
  t.num_max = 3 * n - 1;
  t.num_min = 3 * n;
  t.pos_max = {{0, 3 * n - 2, -1, 1, 10}};
  t.pos_min = {{0, 0, -1, 0, 0},
               {1, n - 1, -1, -2, 10},
               {n, 3 * n - 1, -1, -8, 10}};
  t.val_max = {{0, n - 1, -1, 1, -1},
               {n, 2 * n - 2, -1, 2 - n, 0},
               {2 * n - 1, 3 * n - 2, -1, 3 - 3 * n, 1}};
  t.val_min = {{0, n - 1, -1, 0, -1},
               {n, 2 * n - 1, -1, 1 - n, 0},
               {2 * n, 3 * n - 1, -1, 1 - 3 * n, 1}};
  t.dsame = {{0, 2 * n - 1, -1, 1, 0}, {2 * n, 3 * n - 2, -1, 2, 0}};
  t.dnext = {{0, n - 2, -1, 2, 0}, {n - 1, 3 * n - 2, -1, 1, 0}};
  return t;
}

FamilyTable table_2_5_p3(long long n) {
  FamilyTable t;
  t.num_max = 3 * n;
  t.num_min = 3 * n + 1;
  t.pos_max = {{0, 2 * n - 1, -1, 1, 10}, {2 * n, 3 * n - 1, -1, 7, 10}};
  t.pos_min = {{0, 3 * n, -1, 0, 10}};
  t.val_max = {{0, n - 1, -1, 1, -1},
               {n, 2 * n - 1, -1, 1 - n, 0},
               {2 * n, 3 * n - 1, -1, 2 - 3 * n, 1}};
  t.val_min = {{0, n - 1, -1, 0, -1},
               {n, 2 * n, -1, -n, 0},
               {2 * n + 1, 3 * n, -1, -3 * n, 1}};
  t.dsame = {{0, 2 * n - 1, -1, 1, 0}, {2 * n, 3 * n - 1, -1, 2, 0}};
  t.dnext = {{0, n - 1, -1, 2, 0}, {n, 3 * n - 1, -1, 1, 0}};
  return t;
}

FamilyTable table_2_7_m3(long long n) {
  FamilyTable t;
  t.num_max = 6 * n - 2;
  t.num_min = 6 * n - 1;
  t.pos_max = {{0, 2 * n - 1, -1, 1, 14},
               {2 * n, 4 * n - 2, 0, 14 * n - 5, 7},
               {2 * n, 4 * n - 2, 1, 14 * n - 6, 7},
               {4 * n - 1, 6 * n - 3, -1, -14 * n + 9, 14}};
  t.pos_min = {{0, 2 * n - 1, -1, 0, 14},
               {2 * n, 4 * n - 1, 0, 14 * n - 8, 7},
               {2 * n, 4 * n - 1, 1, 14 * n - 7, 7},
               {4 * n, 6 * n - 2, -1, -14 * n, 14}};
  t.val_max = {{0, n - 1, -1, 1, -2},
               {n, 2 * n - 1, -1, 2 - n, -1},
               {2 * n, 4 * n - 3, -1, 3 - 3 * n, 0},
               {4 * n - 2, 5 * n - 2, -1, 5 - 7 * n, 1},
               {5 * n - 1, 6 * n - 3, -1, 7 - 12 * n, 2}};
  t.val_min = {{0, n - 1, -1, 0, -2},
               {n, 2 * n - 1, -1, 1 - n, -1},
               {2 * n, 4 * n - 2, -1, 2 - 3 * n, 0},
               {4 * n - 1, 5 * n - 2, -1, 3 - 7 * n, 1},
               {5 * n - 1, 6 * n - 2, -1, 4 - 12 * n, 2}};
  t.dsame = {{0, 4 * n - 2, -1, 1, 0},
             {4 * n - 1, 5 * n - 2, -1, 2, 0},
             {5 * n - 1, 6 * n - 3, -1, 3, 0}};
  t.dnext = {{0, n - 2, -1, 3, 0},
             {n - 1, 2 * n - 2, -1, 2, 0},
             {2 * n - 1, 6 * n - 3, -1, 1, 0}};
  return t;
}

FamilyTable table_2_7_p3(long long n) {
  FamilyTable t;
  t.num_max = 6 * n + 1;
  t.num_min = 6 * n + 2;
  t.pos_max = {{0, 2 * n, -1, 1, 14},
               {2 * n + 1, 4 * n, 0, 14 * n + 1, 7},
               {2 * n + 1, 4 * n, 1, 14 * n, 7},
               {4 * n + 1, 6 * n, -1, -14 * n + 1, 14}};
  t.pos_min = {{0, 2 * n, -1, 0, 14},
               {2 * n + 1, 4 * n + 1, 0, 14 * n, 7},
               {2 * n + 1, 4 * n + 1, 1, 14 * n - 1, 7},
               {4 * n + 2, 6 * n + 1, -1, -14 * n - 8, 14}};
  t.val_max = {{0, n, -1, 1, -2},
               {n + 1, 2 * n - 1, -1, 1 - n, -1},
               {2 * n, 4 * n, -1, 1 - 3 * n, 0},
               {4 * n + 1, 5 * n, -1, 1 - 7 * n, 1},
               {5 * n + 1, 6 * n, -1, 1 - 12 * n, 2}};
  t.val_min = {{0, n, -1, 0, -2},
               {n + 1, 2 * n - 1, -1, -n, -1},
               {2 * n, 4 * n + 1, -1, -3 * n, 0},
               {4 * n + 2, 5 * n, -1, -1 - 7 * n, 1},
               {5 * n + 1, 6 * n + 1, -1, -2 - 12 * n, 2}};
  t.dsame = {{0, 4 * n, -1, 1, 0},
             {4 * n + 1, 5 * n, -1, 2, 0},
             {5 * n + 1, 6 * n, -1, 3, 0}};
  t.dnext = {{0, n - 1, -1, 3, 0},
             {n, 2 * n - 1, -1, 2, 0},
             {2 * n, 6 * n, -1, 1, 0}};
  return t;
}

FamilyTable table_2_7_m5(long long n) {
  FamilyTable t;
  t.num_max = 6 * n - 3;
  t.num_min = 6 * n - 2;
  t.pos_max = {{0, 2 * n - 1, -1, 1, 14},
               {2 * n, 4 * n - 3, 0, 14 * n - 9, 7},
               {2 * n, 4 * n - 3, 1, 14 * n - 6, 7},
               {4 * n - 2, 6 * n - 4, -1, -14 * n + 15, 14}};
  t.pos_min = {{0, 2 * n - 1, -1, 0, 14},
               {2 * n, 4 * n - 2, 0, 14 * n - 10, 7},
               {2 * n, 4 * n - 2, 1, 14 * n - 7, 7},
               {4 * n - 1, 6 * n - 3, -1, -14 * n + 4, 14}};
  t.val_max = {{0, n - 1, -1, 1, -2},
               {n, 2 * n - 1, -1, 2 - n, -1},
               {2 * n, 4 * n - 4, -1, 3 - 3 * n, 0},
               {4 * n - 3, 5 * n - 3, -1, 6 - 7 * n, 1},
               {5 * n - 2, 6 * n - 4, -1, 9 - 12 * n, 2}};
  t.val_min = {{0, n - 1, -1, 0, -2},
               {n, 2 * n - 1, -1, 1 - n, -1},
               {2 * n, 4 * n - 3, -1, 2 - 3 * n, 0},
               {4 * n - 2, 5 * n - 2, -1, 4 - 7 * n, 1},
               {5 * n - 1, 6 * n - 3, -1, 6 - 12 * n, 2}};
  t.dsame = {{0, 4 * n - 3, -1, 1, 0},
             {4 * n - 2, 5 * n - 3, -1, 2, 0},
             {5 * n - 2, 6 * n - 4, -1, 3, 0}};
  t.dnext = {{0, n - 2, -1, 3, 0},
             {n - 1, 2 * n - 2, -1, 2, 0},
             {2 * n - 1, 6 * n - 4, -1, 1, 0}};
  return t;
}

FamilyTable table_2_7_p5(long long n) {
  FamilyTable t;
  t.num_max = 6 * n + 2;
  t.num_min = 6 * n + 3;
  // Closing-arc positions: unlike the other five families, the last maxima
  // do NOT follow the 14(i-n)+1 pattern of the c=+3 column; the measured tau
  // attains them at 14(i-n)-3, and the last minima on plateaus whose right
  // edge is 14(i-n)-14 (the forms below use that edge).
  t.pos_max = {{0, 2 * n, -1, 1, 14},
               {2 * n + 1, 4 * n + 1, 0, 14 * n + 1, 7},
               {2 * n + 1, 4 * n + 1, 1, 14 * n + 4, 7},
               {4 * n + 2, 6 * n + 1, -1, -14 * n - 3, 14}};
  t.pos_min = {{0, 2 * n, -1, 0, 14},
               {2 * n + 1, 4 * n + 2, 0, 14 * n, 7},
               {2 * n + 1, 4 * n + 2, 1, 14 * n + 3, 7},
               {4 * n + 3, 6 * n + 2, -1, -14 * n - 14, 14}};
  t.val_max = {{0, n, -1, 1, -2},
               {n + 1, 2 * n - 1, -1, 1 - n, -1},
               {2 * n, 4 * n + 1, -1, 1 - 3 * n, 0},
               {4 * n + 2, 5 * n + 1, -1, -7 * n, 1},
               {5 * n + 2, 6 * n + 1, -1, -1 - 12 * n, 2}};
  t.val_min = {{0, n, -1, 0, -2},
               {n + 1, 2 * n - 1, -1, -n, -1},
               {2 * n, 4 * n + 2, -1, -3 * n, 0},
               {4 * n + 3, 5 * n + 2, -1, -2 - 7 * n, 1},
               {5 * n + 3, 6 * n + 2, -1, -4 - 12 * n, 2}};
  t.dsame = {{0, 4 * n + 1, -1, 1, 0},
             {4 * n + 2, 5 * n + 1, -1, 2, 0},
             {5 * n + 2, 6 * n + 1, -1, 3, 0}};
  t.dnext = {{0, n - 1, -1, 3, 0},
             {n, 2 * n - 1, -1, 2, 0},
             {2 * n, 6 * n + 1, -1, 1, 0}};
  return t;
}

long long abs_ll(long long x) { return x < 0 ? -x : x; }

}  // namespace

Family parse_family(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) {
    throw MalformedInput("family must look like p,q,minusK or p,q,plusK");
  }
  auto to_ll = [](const std::string& s) -> long long {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw MalformedInput("family has a non-numeric component: " + s);
    }
    if (used != s.size()) {
      throw MalformedInput("family has a non-numeric component: " + s);
    }
    return v;
  };
  Family f;
  f.p = to_ll(parts[0]);
  f.q = to_ll(parts[1]);
  const std::string& c = parts[2];
  if (c.rfind("minus", 0) == 0) {
    const long long k = to_ll(c.substr(5));
    if (k < 1) throw MalformedInput("family offset after 'minus' must be positive");
    f.c = -k;
  } else if (c.rfind("plus", 0) == 0) {
    const long long k = to_ll(c.substr(4));
    if (k < 1) throw MalformedInput("family offset after 'plus' must be positive");
    f.c = k;
  } else {
    f.c = to_ll(c);
  }
  if (f.p < 2 || f.q < 2 || f.c == 0) {
    throw MalformedInput("family needs p,q >= 2 and a nonzero offset");
  }
  return f;
}

std::string family_key(const Family& f) {
  std::ostringstream out;
  out << f.p << "," << f.q << "," << (f.c < 0 ? "minus" : "plus") << abs_ll(f.c);
  return out.str();
}

std::string family_label(const Family& f) {
  std::ostringstream out;
  out << "-Sigma(" << f.p << "," << f.q << "," << f.p * f.q << "n"
      << (f.c < 0 ? "-" : "+") << abs_ll(f.c) << ")";
  return out.str();
}

long long family_third(const Family& f, long long n) {
  return f.p * f.q * n + f.c;
}

bool is_tabulated(const Family& f) {
  if (f.p != 2) return false;
  const long long a = abs_ll(f.c);
  if (f.q == 5) return a == 1 || a == 3;
  if (f.q == 7) return a == 1 || a == 3 || a == 5;
  return false;
}

std::vector<Family> tabulated_families() {
  return {{2, 5, -1}, {2, 5, 1}, {2, 5, -3}, {2, 5, 3}, {2, 7, -1},
          {2, 7, 1},  {2, 7, -3}, {2, 7, 3}, {2, 7, -5}, {2, 7, 5}};
}

ClosedForm surgery_module_plus(long long p, long long q, long long n) {
  check_pq(p, q);
  check_n(n);
  const TorusKnotSemigroup S(p, q);
  const long long g = S.genus();
  const long long a_top = S.alpha(g - 1);
  ClosedForm cf;
  push_block(cf.main_part, 0, a_top, n);
  for (long long i = 1; i <= n * (g - 1); ++i) {
    const long long block = i / n;
    const long long ceil_block = (i + n - 1) / n;
    const long long bottom = (block + 1) * (i % n + i);
    push_block(cf.indexed_part, bottom, S.alpha(g - 1 + ceil_block), 2);
  }
  cf.module = merge_module(0, cf.main_part, cf.indexed_part);
  return cf;
}

ClosedForm surgery_module_minus(long long p, long long q, long long n) {
  check_pq(p, q);
  check_n(n);
  const TorusKnotSemigroup S(p, q);
  const long long g = S.genus();
  const long long a_top = S.alpha(g - 1);
  const long long d = -2 * a_top;
  ClosedForm cf;
  push_block(cf.main_part, d, a_top, n - 1);
  for (long long i = 1; i <= n * (g - 1); ++i) {
    const long long K = (i + n - 1) / n;
    const long long len = S.alpha(g - 1 + K);
    const long long bottom = K * ((i - 1) % n + i - 1) - 2 * len;
    push_block(cf.indexed_part, bottom, len, 2);
  }
  cf.module = merge_module(d, cf.main_part, cf.indexed_part);
  return cf;
}

ClosedForm table_module(const Family& f, long long n) {
  if (!is_tabulated(f)) {
    throw InvalidArgs("no tabulated module shape for this family");
  }
  check_n(n);
  ClosedForm cf;
  long long d = 0;
  std::vector<Tower>& mp = cf.main_part;
  std::vector<Tower>& ip = cf.indexed_part;
  if (f.q == 5 && f.c == -1) {
    d = -2;
    push_block(mp, -2, 1, n - 1);
    for (long long i = 0; i <= n - 1; ++i) push_block(ip, 2 * i, 1, 2);
  } else if (f.q == 5 && f.c == 1) {
    d = 0;
    push_block(mp, 0, 1, n);
    for (long long i = 1; i <= n; ++i) push_block(ip, 2 * i, 1, 2);
  } else if (f.q == 5 && f.c == -3) {
    d = 0;
    push_block(mp, 0, 1, n - 1);
    for (long long i = 0; i <= n - 1; ++i) push_block(ip, 2 * i, 1, 2);
  } else if (f.q == 5 && f.c == 3) {
    d = -2;
    push_block(mp, -2, 1, n);
    for (long long i = 0; i <= n - 1; ++i) push_block(ip, 2 * i, 1, 2);
  } else if (f.q == 7 && f.c == -1) {
    d = -4;
    push_block(mp, -4, 2, n - 1);
    for (long long i = 0; i <= n - 1; ++i) push_block(ip, 2 * i, 1, 2);
    for (long long i = 0; i <= n - 1; ++i) push_block(ip, 2 * n + 4 * i, 1, 2);
  } else if (f.q == 7 && f.c == 1) {
    d = 0;
    push_block(mp, 0, 2, n);
    for (long long i = 1; i <= n; ++i) push_block(ip, 2 * i, 1, 2);
    for (long long i = 1; i <= n; ++i) push_block(ip, 2 * n + 4 * i, 1, 2);
  } else if (f.q == 7 && f.c == -3) {
    d = -2;
    push_block(mp, -2, 1, 2 * n - 2);
    for (long long i = 0; i <= n - 1; ++i) push_block(ip, 2 * i - 2, 1, 2);
    for (long long i = 0; i <= n - 1; ++i)
      push_block(ip, 2 * n + 4 * i - 2, 1, 2);
  } else if (f.q == 7 && f.c == 3) {
    d = 0;
    push_block(mp, 0, 1, 2 * n + 1);
    for (long long i = 1; i <= n; ++i) push_block(ip, 2 * i, 1, 2);
    for (long long i = 1; i <= n; ++i) push_block(ip, 2 * n + 4 * i, 1, 2);
  } else if (f.q == 7 && f.c == -5) {
    d = -2;
    push_block(mp, -2, 1, 2 * n - 3);  // n = 1 makes this negative: DomainEdge
    for (long long i = 0; i <= n - 1; ++i) push_block(ip, 2 * i - 2, 1, 2);
    for (long long i = 0; i <= n - 1; ++i)
      push_block(ip, 2 * n + 4 * i - 2, 1, 2);
  } else {  // q == 7, c == 5
    d = 0;
    push_block(mp, 0, 1, 2 * n + 2);
    for (long long i = 1; i <= n; ++i) push_block(ip, 2 * i, 1, 2);
    for (long long i = 1; i <= n; ++i) push_block(ip, 2 * n + 4 * i, 1, 2);
  }
  cf.module = merge_module(d, mp, ip);
  return cf;
}

ClosedForm family_module(const Family& f, long long n) {
  if (f.c == 1) return surgery_module_plus(f.p, f.q, n);
  if (f.c == -1) return surgery_module_minus(f.p, f.q, n);
  if (is_tabulated(f)) return table_module(f, n);
  throw InvalidArgs("no closed form known for this family");
}

long long family_d(const Family& f, long long n) {
  check_n(n);
  if (f.c == 1) {
    check_pq(f.p, f.q);
    return 0;
  }
  if (f.c == -1) {
    check_pq(f.p, f.q);
    const TorusKnotSemigroup S(f.p, f.q);
    return -2 * S.alpha(S.genus() - 1);
  }
  if (!is_tabulated(f)) {
    throw InvalidArgs("no closed form known for this family");
  }
  if (f.q == 5) return f.c == 3 ? -2 : 0;
  return f.c < 0 ? -2 : 0;  // q == 7, |c| in {3,5}
}

PredictedExtrema surgery_extrema(long long p, long long q, long long n) {
  check_pq(p, q);
  check_n(n);
  const TorusKnotSemigroup S(p, q);
  const long long g = S.genus();
  const long long N = n * (2 * g - 1);
  const long long pq = p * q;
  PredictedExtrema out;
  out.c_constant = g * (n - n * g + 2);
  long long acc = 1;
  for (long long i = 0; i <= N - 2; ++i) {
    if (i > 0) acc += i / n + 1 - g;
    out.table.maxes.push_back({acc, pq * i + 1, pq * i + 1});
    out.diff_same.push_back(beta(S, i / n));
    out.diff_next.push_back(S.alpha((i + 1) / n));
  }
  for (long long i = 0; i <= N - 1; ++i) {
    const long long pos = pq * i - i / n;
    long long val = 0;
    if (i <= N - 2) {
      val = out.table.maxes[i].value - out.diff_same[i];
    } else if (N >= 2) {
      val = out.table.maxes[N - 2].value - out.diff_next[N - 2];
    }
    out.table.mins.push_back({val, pos, pos});
  }
  return out;
}

PredictedExtrema family_extrema(const Family& f, long long n) {
  check_n(n);
  FamilyTable t;
  if (f.p == 2 && f.q == 5 && f.c == -3) {
    t = table_2_5_m3(n);
  } else if (f.p == 2 && f.q == 5 && f.c == 3) {
    t = table_2_5_p3(n);
  } else if (f.p == 2 && f.q == 7 && f.c == -3) {
    t = table_2_7_m3(n);
  } else if (f.p == 2 && f.q == 7 && f.c == 3) {
    t = table_2_7_p3(n);
  } else if (f.p == 2 && f.q == 7 && f.c == -5) {
    t = table_2_7_m5(n);
  } else if (f.p == 2 && f.q == 7 && f.c == 5) {
    t = table_2_7_p5(n);
  } else {
    throw InvalidArgs(
        "extrema tables exist only for the |c| in {3,5} families over (2,5) "
        "and (2,7)");
  }
  return realize(t);
}

ModuleComparison compare_family(const Family& f, long long n,
                                ClosedFormSource source, long long margin) {
  check_n(n);
  ClosedForm closed;
  switch (source) {
    case ClosedFormSource::Auto:
      closed = family_module(f, n);
      break;
    case ClosedFormSource::PlusOne:
      if (f.c != 1) {
        throw InvalidArgs("the +1 surgery form applies only to c = +1 families");
      }
      closed = surgery_module_plus(f.p, f.q, n);
      break;
    case ClosedFormSource::MinusOne:
      if (f.c != -1) {
        throw InvalidArgs("the -1 surgery form applies only to c = -1 families");
      }
      closed = surgery_module_minus(f.p, f.q, n);
      break;
    case ClosedFormSource::Table:
      closed = table_module(f, n);
      break;
  }
  const SeifertData sd =
      brieskorn(from_i64(f.p), from_i64(f.q), from_i64(family_third(f, n)));
  ModuleComparison out;
  out.manifold = manifold_label(sd);
  out.pipeline = hf_plus(sd, margin);
  out.closed = std::move(closed);
  out.d_equal = out.closed.module.d == out.pipeline.d;
  out.equal = out.closed.module == out.pipeline;
  if (out.equal) {
    out.shape_equal = true;
    return out;
  }

  // Structural comparison: the fixed block must sit in the measured module
  // verbatim; the remainder must be the indexed block up to one uniform shift
  // of every bottom (compared per length class, bottoms sorted).
  std::map<std::pair<long long, long long>, long long> rem;  // (length, bottom)
  for (const Tower& t : out.pipeline.towers) rem[{t.length, t.bottom}] += t.mult;
  bool ok = true;
  for (const Tower& t : out.closed.main_part) {
    auto it = rem.find({t.length, t.bottom});
    if (it == rem.end() || it->second < t.mult) {
      ok = false;
      break;
    }
    it->second -= t.mult;
    if (it->second == 0) rem.erase(it);
  }
  if (ok) {
    std::map<long long, std::vector<long long>> have, want;
    for (const auto& [key, mult] : rem) {
      for (long long j = 0; j < mult; ++j) have[key.first].push_back(key.second);
    }
    for (const Tower& t : out.closed.indexed_part) {
      for (long long j = 0; j < t.mult; ++j) want[t.length].push_back(t.bottom);
    }
    for (auto& [len, v] : want) std::sort(v.begin(), v.end());
    long long delta = 0;
    bool delta_set = false;
    if (have.size() != want.size()) ok = false;
    auto ih = have.begin();
    auto iw = want.begin();
    while (ok && ih != have.end()) {
      if (ih->first != iw->first || ih->second.size() != iw->second.size()) {
        ok = false;
        break;
      }
      for (std::size_t j = 0; j < ih->second.size(); ++j) {
        const long long d0 = iw->second[j] - ih->second[j];
        if (!delta_set) {
          delta = d0;
          delta_set = true;
        }
        if (d0 != delta) {
          ok = false;
          break;
        }
      }
      ++ih;
      ++iw;
    }
    if (ok) {
      out.shape_equal = true;
      out.indexed_offset = delta;
      out.has_offsets = delta != 0 || out.main_offset != 0;
    }
  }
  return out;
}

bool is_prime_power(long long x) {
  if (x < 2) return false;
  long long f = 0;
  for (long long d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      f = d;
      break;
    }
  }
  if (f == 0) return true;  // prime
  while (x % f == 0) x /= f;
  return x == 1;
}

long long delta_invariant(long long cover, long long p, long long q,
                          long long margin) {
  if (cover < 2 || p < 2 || q < 2) {
    throw InvalidArgs("cover and both torus parameters must be at least 2");
  }
  if (!is_prime_power(cover)) {
    throw UnsupportedTriple("branched-cover order must be a prime power");
  }
  return 2 *
         hf_plus(brieskorn(from_i64(cover), from_i64(p), from_i64(q)), margin).d;
}

std::vector<DeltaRow> delta_family_report(long long n, long long margin) {
  check_n(n);
  struct Entry {
    Family f;
    long long by_cover;
    long long by_knot;
  };
  const std::vector<Entry> entries = {
      {{2, 5, 3}, 4, -4},   {{2, 5, -3}, 0, 0},  {{2, 7, 3}, 0, 0},
      {{2, 7, -3}, -4, -4}, {{2, 7, 5}, 0, -4},  {{2, 7, -5}, -4, 0},
  };
  std::vector<DeltaRow> rows;
  rows.reserve(entries.size());
  for (const Entry& e : entries) {
    const long long third = family_third(e.f, n);
    const SeifertData sd =
        brieskorn(from_i64(e.f.p), from_i64(e.f.q), from_i64(third));
    DeltaRow r;
    r.family = family_key(e.f);
    std::ostringstream knot;
    knot << "T(" << e.f.q << "," << third << ")";
    r.knot = knot.str();
    r.cover = 2;
    r.delta_computed = 2 * hf_plus(sd, margin).d;
    r.delta_closed_form = 2 * family_d(e.f, n);
    r.delta_stated_by_cover = e.by_cover;
    r.delta_stated_by_knot = e.by_knot;
    r.closed_form_ok = r.delta_closed_form == r.delta_computed;
    r.stated_by_cover_ok = r.delta_stated_by_cover == r.delta_computed;
    r.stated_by_knot_ok = r.delta_stated_by_knot == r.delta_computed;
    rows.push_back(std::move(r));
  }
  return rows;
}

ConjectureReport conjecture_check(long long p, long long k, long long n_lo,
                                  long long n_hi, long long margin) {
  if (p < 3 || p % 2 == 0) {
    throw InvalidArgs("p must be an odd integer greater than 1");
  }
  if (k < 1 || std::gcd(k, 2 * p) != 1) {
    throw InvalidArgs("k must be positive and coprime to 2p");
  }
  const long long km = k % (2 * p);
  if (km == 1 || km == 2 * p - 1) {
    throw InvalidArgs("k must not be congruent to +-1 modulo 2p");
  }
  if (n_lo < 1 || n_hi < n_lo) {
    throw InvalidArgs("need 1 <= n_lo <= n_hi");
  }
  ConjectureReport rep;
  rep.p = p;
  rep.k = k;
  const bool one_mod_four = p % 4 == 1;
  for (long long n = n_lo; n <= n_hi; ++n) {
    for (const char side : {'-', '+'}) {
      const long long third = 2 * p * n + (side == '-' ? -k : k);
      if (third < 2) {
        throw InvalidArgs("third multiplicity falls below 2; raise the n range");
      }
      const SeifertData sd = brieskorn(Int(2), from_i64(p), from_i64(third));
      ConjectureRow row;
      row.n = n;
      row.third = third;
      row.side = side;
      row.d_measured = hf_plus(sd, margin).d;
      row.d_conjectured =
          side == '-' ? (one_mod_four ? 0 : -2) : (one_mod_four ? -2 : 0);
      row.agree = row.d_measured == row.d_conjectured;
      row.label = manifold_label(sd);
      rep.all_agree = rep.all_agree && row.agree;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

}  // namespace hf
