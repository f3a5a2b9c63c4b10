#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hf/seifert.hpp"

namespace hf {

using IntMatrix = std::vector<std::vector<Int>>;

// Star-shaped plumbing tree.  Vertex 0 is the central vertex; arm vertices are
// numbered consecutively outward, one block per arm.
struct PlumbingGraph {
  std::vector<Int> weight;                    // self-intersection per vertex
  std::vector<std::pair<int, int>> edges;     // tree edges (u < v)
  std::vector<std::vector<int>> arms;         // vertex ids per arm, center excluded

  int size() const { return static_cast<int>(weight.size()); }
  std::vector<int> degrees() const;
};

// The canonical negative-definite plumbing for valid Seifert data: center
// weight e0, arm i carrying the negated coefficients of hj_expansion(a_i, b_i)
// ordered outward from the center.  Throws MalformedInput when validate(s)
// fails.
PlumbingGraph star_plumbing(const SeifertData& s);

// Symmetric intersection matrix: weights on the diagonal, 1 per edge.
IntMatrix intersection_matrix(const PlumbingGraph& g);

// Exact determinant by fraction-free elimination with row pivoting.
Int determinant(IntMatrix m);

// Exact negative-definiteness test: the k-th leading principal minor must have
// sign (-1)^k for every k.  The minors come out of the same fraction-free
// elimination (after step k the pivot holds the (k+1)-st leading minor); a zero
// pivot means a singular leading block, which already refutes definiteness.
bool is_negative_definite(const IntMatrix& m);

// Vertices whose degree exceeds |weight|, sorted ascending.  For the star
// plumbing of valid data only the center can qualify, so there is at most one.
std::vector<int> bad_vertices(const PlumbingGraph& g);

// Graphviz "graph { ... }" rendering with weights as labels.
std::string plumbing_dot(const PlumbingGraph& g);

// Human-readable adjacency dump, one vertex per line.
std::string plumbing_text(const PlumbingGraph& g);

}  // namespace hf
