#include "hf/plumbing.hpp"

#include <algorithm>
#include <sstream>

#include "hf/errors.hpp"
#include "hf/exactmath.hpp"

namespace hf {

std::vector<int> PlumbingGraph::degrees() const {
  std::vector<int> deg(weight.size(), 0);
  for (const auto& [u, v] : edges) {
    deg[u]++;
    deg[v]++;
  }
  return deg;
}

PlumbingGraph star_plumbing(const SeifertData& s) {
  if (!validate(s)) {
    throw MalformedInput("seifert data fails the homology-sphere identity");
  }
  PlumbingGraph g;
  g.weight.push_back(s.e0);
  for (const auto& arm : s.arms) {
    std::vector<Int> ks = hj_expansion(arm.a, arm.b);
    std::vector<int> ids;
    int prev = 0;  // attach to center first
    for (const Int& k : ks) {
      int id = g.size();
      g.weight.push_back(-k);
      g.edges.emplace_back(prev, id);
      ids.push_back(id);
      prev = id;
    }
    g.arms.push_back(std::move(ids));
  }
  return g;
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
  int n = g.size();
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; i++) m[i][i] = g.weight[i];
  for (const auto& [u, v] : g.edges) {
    m[u][v] = 1;
    m[v][u] = 1;
  }
  return m;
}

// Fraction-free (Bareiss) elimination.  Every division below is exact, so the
// whole computation stays in the integers.
Int determinant(IntMatrix m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  for (int i = 0; i < n; i++) {
    if (static_cast<int>(m[i].size()) != n) {
      throw InvalidArgs("determinant: matrix not square");
    }
  }
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; k++) {
    if (m[k][k] == 0) {
      int r = -1;
      for (int i = k + 1; i < n; i++) {
        if (m[i][k] != 0) {
          r = i;
          break;
        }
      }
      if (r < 0) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++) {
      for (int j = k + 1; j < n; j++) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool is_negative_definite(const IntMatrix& m) {
  int n = static_cast<int>(m.size());
  for (int i = 0; i < n; i++) {
    if (static_cast<int>(m[i].size()) != n) {
      throw InvalidArgs("is_negative_definite: matrix not square");
    }
  }
  if (n == 0) return true;
  IntMatrix a = m;
  Int prev = 1;
  for (int k = 0; k < n; k++) {
    // Without pivoting the Bareiss pivot a[k][k] is exactly the (k+1)-st
    // leading principal minor, which definiteness forces to be nonzero with
    // sign (-1)^(k+1).  A zero pivot therefore refutes definiteness outright
    // and we never divide by it.
    int want = (k % 2 == 0) ? -1 : 1;
    if (sgn(a[k][k]) != want) return false;
    if (k + 1 == n) break;
    for (int i = k + 1; i < n; i++) {
      for (int j = k + 1; j < n; j++) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return true;
}

std::vector<int> bad_vertices(const PlumbingGraph& g) {
  std::vector<int> deg = g.degrees();
  std::vector<int> bad;
  for (int v = 0; v < g.size(); v++) {
    if (Int(deg[v]) > abs(g.weight[v])) bad.push_back(v);
  }
  return bad;
}

std::string plumbing_dot(const PlumbingGraph& g) {
  std::ostringstream out;
  out << "graph plumbing {\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < g.size(); v++) {
    out << "  v" << v << " [label=\"" << g.weight[v].get_str() << "\"];\n";
  }
  for (const auto& [u, v] : g.edges) {
    out << "  v" << u << " -- v" << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string plumbing_text(const PlumbingGraph& g) {
  std::vector<std::vector<int>> adj(g.size());
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::ostringstream out;
  out << "vertices " << g.size() << " edges " << g.edges.size() << "\n";
  for (int v = 0; v < g.size(); v++) {
    std::sort(adj[v].begin(), adj[v].end());
    out << "v" << v << " weight " << g.weight[v].get_str() << " adj";
    for (int w : adj[v]) out << " v" << w;
    out << "\n";
  }
  return out.str();
}

}  // namespace hf
