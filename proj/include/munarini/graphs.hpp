#pragma once

// Graph families on string vertex sets:
//   M_{n,k}   Munarini graph     0 <-> i (1 <= i < k),   00 <-> kk
//   Pi_{n,k}  generalized Pell   i <-> i+1 (i <= k-2),   (k-1)(k-1) <-> kk
//   Gamma_n   Fibonacci cube     binary strings without 11
//   Pi_n      Pell graph         Pi_{n,2}
//   Q_n       hypercube
//   S_{k-1}   star on k vertices
//
// Vertices are numbered in lexicographic order of their labels; edges are
// stored as sorted pairs (u < v) in sorted order.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "munarini/integer.hpp"
#include "munarini/strings.hpp"

namespace munarini {

enum class Family {
  Munarini,
  GeneralizedPell,
  FibonacciCube,
  PellGraph,
  Hypercube,
  Star,
};

/// CLI / file names: munarini, genpell, fibonacci, pell, hypercube, star.
std::string_view family_name(Family family);
Family parse_family(std::string_view name);

struct FamilyParams {
  Family family = Family::Munarini;
  std::size_t n = 0;
  unsigned k = 1;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Throws UnsupportedParameter for k == 0 or a generalized Pell graph with
/// k < 2.
void validate(const FamilyParams& params);

/// |V| of the family member, computed without building it.
Integer expected_order(const FamilyParams& params);

using VertexLabel = std::variant<PellString, BinaryLabel>;
using Edge = std::pair<std::size_t, std::size_t>;

std::string label_text(const VertexLabel& label);

class LabeledGraph {
 public:
  /// Validates uniqueness and uniformity of labels and simplicity of edges.
  /// Edges may be given in any order and orientation.
  LabeledGraph(FamilyParams params, std::vector<VertexLabel> vertices,
               std::vector<Edge> edges);

  const FamilyParams& params() const noexcept { return params_; }
  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<VertexLabel>& vertices() const noexcept {
    return vertices_;
  }
  const VertexLabel& label(std::size_t v) const { return vertices_.at(v); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Sorted neighbour indices.
  std::span<const std::size_t> neighbors(std::size_t v) const {
    return adjacency_.at(v);
  }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const noexcept;
  bool adjacent(std::size_t u, std::size_t v) const;

  std::optional<std::size_t> find(const VertexLabel& label) const;
  /// Throws InputError when the label is not a vertex.
  std::size_t index_of(const VertexLabel& label) const;

  /// Same family tag, parameters, labels (in order) and edges.
  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.params_ == b.params_ && a.vertices_ == b.vertices_ &&
           a.edges_ == b.edges_;
  }

 private:
  FamilyParams params_;
  std::vector<VertexLabel> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::unordered_map<VertexLabel, std::size_t> index_;
};

LabeledGraph build_munarini(std::size_t n, unsigned k);
LabeledGraph build_generalized_pell(std::size_t n, unsigned k);
LabeledGraph build_fibonacci_cube(std::size_t n);
LabeledGraph build_pell(std::size_t n);
LabeledGraph build_hypercube(std::size_t m);
/// S_{k-1}: centre "0" and leaves "1", ..., "k-1" (the same labels as M_{1,k}).
LabeledGraph build_star(unsigned k);
LabeledGraph build(const FamilyParams& params);

/// Subgraph induced by `vertices` (kept in the given order after sorting by
/// index). With strip > 0 the first `strip` symbols are removed from every
/// Pell label and the family's n is reduced accordingly.
LabeledGraph induced_subgraph(const LabeledGraph& g,
                              std::span<const std::size_t> vertices,
                              std::size_t strip = 0);

/// V(M_{n,k}) = 0F_{n-1} u ... u (k-1)F_{n-1} u kkF_{n-2}, with an edge
/// census between the parts.
struct MunariniDecomposition {
  unsigned k = 0;
  /// parts[i] for i < k holds the vertices starting with i; parts[k] those
  /// starting with kk.
  std::vector<std::vector<std::size_t>> parts;
  /// cross_edges[a][b] (a <= b): number of edges between parts a and b.
  std::vector<std::vector<std::size_t>> cross_edges;
  /// Edges joining the kk part to vertices starting with 00.
  std::vector<Edge> kk_matching;
};
MunariniDecomposition decompose_munarini(const LabeledGraph& g);

/// The map theta: F_{n,1} -> F_{n-1}: keep 0s, 11 -> 10, drop the final 0.
BinaryLabel theta(const PellString& u);
/// Inverse of theta: append 0, then rewrite every 10 as 11.
PellString theta_inverse(const BinaryLabel& v);
/// Exchange of the symbols 0 and 1 in a Pell string (k = 2).
PellString swap_zero_one(const PellString& u);

/// A vertex bijection between two graphs together with both graphs.
struct Isomorphism {
  LabeledGraph source;
  LabeledGraph target;
  std::vector<std::size_t> map;  // source index -> target index
};

/// True iff `map` is a bijection V(a) -> V(b) under which uv is an edge of
/// `a` exactly when map(u)map(v) is an edge of `b`.
bool is_isomorphism(const LabeledGraph& a, const LabeledGraph& b,
                    std::span<const std::size_t> map);

/// M_{n,1} -> Gamma_{n-1} via theta. Verified before returning.
Isomorphism iso_to_fibonacci(std::size_t n);
/// M_{n,2} -> Pi_n via the 0/1 swap. Verified before returning.
Isomorphism iso_to_pell(std::size_t n);

inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

/// Shortest-path distances from `source`; kUnreachable for other components.
std::vector<std::size_t> bfs_distances(const LabeledGraph& g,
                                       std::size_t source);
std::size_t degree(const LabeledGraph& g, std::size_t v);

bool is_connected(const LabeledGraph& g);
bool is_bipartite(const LabeledGraph& g);

/// ((k^2-k+2) n F_{n+1,k} + (k-2)(n+1) F_{n,k}) / (k^2+4); the division
/// is checked to be exact.
Integer count_edges_closed_form(std::size_t n, unsigned k);
/// |E_n| = k|E_{n-1}| + |E_{n-2}| + F_{n+1,k} - F_{n,k}, |E_0| = 0,
/// |E_1| = k - 1.
Integer count_edges_recurrence(std::size_t n, unsigned k);

}  // namespace munarini
