#include "hf/gradedroot.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hf/errors.hpp"
#include "hf/exactmath.hpp"

namespace hf {

namespace {

struct MergeEvent {
  int saddle = 0;  // index into merge_values
  int dead = 0;    // leaf whose branch ends here
  int elder = 0;   // alive leaf of the surviving component
};

// Elder rule.  Raising the level, each minimum births a branch and each
// maximum joins the two components flanking it.  Joins fire in increasing
// saddle order (leftmost first on equal values); at a join the branch whose
// minimum is higher dies, and on equal minima the right one dies.  With these
// tie rules the survivor of the last join - the trunk - is the leftmost
// occurrence of the global minimum.
//
// A single left-to-right pass does not work here: a branch can be swallowed
// across its right saddle before its left one (3,5,1,4,2,6,0 kills the branch
// at 2 via the saddle 4, not 6), so the joins genuinely have to happen in
// height order.  Components are intervals of leaves, tracked by union-find;
// a saddle always joins the components of the leaves directly beside it,
// because every lower saddle between them has already fired.
std::pair<std::vector<MergeEvent>, int> elder_sweep(
    const std::vector<Extremum>& leaves,
    const std::vector<long long>& saddles) {
  const int m = static_cast<int>(leaves.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<int> alive(m);  // per root: the leaf representing that branch
  std::iota(alive.begin(), alive.end(), 0);

  std::vector<int> order(saddles.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&saddles](int a, int b) {
    return saddles[a] != saddles[b] ? saddles[a] < saddles[b] : a < b;
  });

  std::vector<MergeEvent> events;
  events.reserve(order.size());
  for (int s : order) {
    const int ra = find(s);      // component left of the saddle
    const int rb = find(s + 1);  // component right of it
    const int la = alive[ra];
    const int lb = alive[rb];
    // la < lb always, the components being disjoint intervals.
    const bool left_survives =
        leaves[la].value < leaves[lb].value ||
        (leaves[la].value == leaves[lb].value && la < lb);
    const int dead = left_survives ? lb : la;
    const int elder = left_survives ? la : lb;
    events.push_back({s, dead, elder});
    parent[ra] = rb;
    alive[rb] = elder;
  }
  const int trunk = alive[find(0)];
  return {std::move(events), trunk};
}

void rstrip(std::string& line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
}

}  // namespace

GradedRoot build_root(const ReducedTau& reduced) {
  const auto& ex = reduced.extrema;
  if (ex.empty()) {
    throw MalformedSequence("cannot build a root from an empty sequence");
  }
  if (ex.size() % 2 == 0) {
    throw MalformedSequence(
        "reduced sequence must start and end on a minimum");
  }
  for (std::size_t i = 0; i + 1 < ex.size(); ++i) {
    const bool ascending = (i % 2 == 0);  // minimum -> maximum
    const bool ok = ascending ? ex[i].value < ex[i + 1].value
                              : ex[i].value > ex[i + 1].value;
    if (!ok) {
      throw MalformedSequence("extrema must strictly alternate");
    }
  }

  GradedRoot root;
  for (std::size_t i = 0; i < ex.size(); ++i) {
    if (i % 2 == 0) {
      root.leaves.push_back(ex[i]);
    } else {
      root.merge_values.push_back(ex[i].value);
    }
  }

  const auto swept = elder_sweep(root.leaves, root.merge_values);
  for (const MergeEvent& ev : swept.first) {
    root.pairs.push_back({root.leaves[ev.dead].value,
                          root.merge_values[ev.saddle], ev.dead});
  }
  std::sort(root.pairs.begin(), root.pairs.end(),
            [](const LeafPairing& a, const LeafPairing& b) {
              return a.leaf_index < b.leaf_index;
            });
  root.trunk_leaf = swept.second;
  root.trunk_value = root.leaves[swept.second].value;
  return root;
}

long long finite_rank(const HFPlusModule& m) {
  long long total = 0;
  for (const Tower& t : m.towers) total += t.length * t.mult;
  return total;
}

long long grading_shift(const SeifertData& s) {
  if (!validate(s)) {
    throw MalformedInput(
        "grading shift needs data satisfying the homology-sphere identity "
        "with negative orbifold Euler number");
  }
  const Rat e = orbifold_euler(s);
  const Rat eps = orbifold_epsilon(s);
  Rat dsum = 0;
  for (const SeifertArm& arm : s.arms) {
    dsum += dedekind_sum(arm.b, arm.a);
  }
  const Rat shift = -(eps * eps * e + e + Rat(5) - Rat(12) * dsum) / Rat(4);
  if (!is_integer(shift) || shift.get_num() % 2 != 0) {
    throw NonIntegralShift("grading shift is not an even integer");
  }
  return to_i64(Int(shift.get_num()), "grading shift");
}

HFPlusModule assemble_hf(const GradedRoot& root, long long shift) {
  HFPlusModule m;
  m.d = 2 * root.trunk_value + shift;
  std::map<std::pair<long long, long long>, long long> acc;
  for (const LeafPairing& p : root.pairs) {
    acc[{2 * p.leaf_value + shift, p.merge_value - p.leaf_value}] += 1;
  }
  for (const auto& [key, mult] : acc) {
    m.towers.push_back({key.first, key.second, mult});
  }
  return m;
}

long long d_invariant_direct(const SeifertData& s) {
  const TauFunction t = tau_sequence(s);
  const long long mn = *std::min_element(t.values.begin(), t.values.end());
  return 2 * mn + grading_shift(s);
}

HFPlusModule hf_plus(const SeifertData& s, long long margin) {
  const TauFunction t = tau_sequence(s, margin);
  const GradedRoot root = build_root(reduce(t));
  return assemble_hf(root, grading_shift(s));
}

std::string root_ascii(const GradedRoot& root) {
  std::ostringstream out;
  const int m = static_cast<int>(root.leaves.size());
  out << "graded root: " << m << (m == 1 ? " leaf, " : " leaves, ")
      << root.pairs.size()
      << (root.pairs.size() == 1 ? " merge\n" : " merges\n");

  const long long lo = root.trunk_value;  // trunk sits at the global minimum
  long long hi = root.trunk_value;
  for (long long v : root.merge_values) hi = std::max(hi, v);
  const long long top = hi + 1;  // infinite stem pokes above the last join

  std::vector<long long> death(m, LLONG_MAX);
  for (const LeafPairing& p : root.pairs) death[p.leaf_index] = p.merge_value;

  const bool drawable = m <= 60 && top - lo <= 200;
  if (!drawable) {
    out << "(too large to draw)\n";
  } else {
    const std::size_t gw = std::max(std::to_string(lo).size(),
                                    std::to_string(top).size());
    for (long long level = top; level >= lo; --level) {
      std::string num = std::to_string(level);
      std::string line(gw - num.size(), ' ');
      line += num;
      line += ":";
      for (int i = 0; i < m; ++i) {
        const long long v = root.leaves[i].value;
        const bool is_trunk = (i == root.trunk_leaf);
        char c = ' ';
        if (level == v) {
          c = is_trunk ? '*' : 'o';
        } else if (level > v && (is_trunk || level < death[i])) {
          c = '|';
        } else if (!is_trunk && level == death[i]) {
          c = '^';
        }
        line += "  ";
        line += c;
      }
      rstrip(line);
      out << line << '\n';
    }
  }

  const Extremum& tr = root.leaves[root.trunk_leaf];
  out << "trunk: leaf " << root.trunk_leaf << ", level " << root.trunk_value
      << ", span [" << tr.first << ", " << tr.last << "]\n";
  for (const LeafPairing& p : root.pairs) {
    const Extremum& lf = root.leaves[p.leaf_index];
    out << "leaf " << p.leaf_index << ": level " << p.leaf_value << ", span ["
        << lf.first << ", " << lf.last << "], merges at " << p.merge_value
        << '\n';
  }
  return out.str();
}

std::string root_dot(const GradedRoot& root) {
  std::ostringstream out;
  out << "graph gradedroot {\n  node [shape=circle];\n";
  const int m = static_cast<int>(root.leaves.size());
  for (int i = 0; i < m; ++i) {
    out << "  l" << i << " [label=\"" << root.leaves[i].value << "\"";
    if (i == root.trunk_leaf) out << " peripheries=2";
    out << "];\n";
  }
  for (std::size_t i = 0; i < root.merge_values.size(); ++i) {
    out << "  m" << i << " [label=\"" << root.merge_values[i]
        << "\" shape=diamond];\n";
  }
  const auto swept = elder_sweep(root.leaves, root.merge_values);
  std::vector<std::string> rep(m);
  for (int i = 0; i < m; ++i) rep[i] = "l" + std::to_string(i);
  for (const MergeEvent& ev : swept.first) {
    const std::string node = "m" + std::to_string(ev.saddle);
    out << "  " << rep[ev.dead] << " -- " << node << ";\n";
    out << "  " << rep[ev.elder] << " -- " << node << ";\n";
    rep[ev.elder] = node;
  }
  out << "}\n";
  return out.str();
}

}  // namespace hf
