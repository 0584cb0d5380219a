#pragma once

// Structural checks on graphs labelled by hypercube vertices, and the
// brute-force hypercube enumeration that the polynomial formulas are tested
// against.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "munarini/graphs.hpp"
#include "munarini/polynomials.hpp"
#include "munarini/strings.hpp"

namespace munarini {

/// A graph together with an injective labelling V(G) -> B^m under which
/// adjacent vertices are at Hamming distance 1.
class EmbeddedGraph {
 public:
  /// Throws InputError on a size mismatch, mixed label lengths, repeated
  /// labels, or an edge whose endpoints are not at Hamming distance 1.
  EmbeddedGraph(LabeledGraph graph, std::vector<BinaryLabel> labels);

  const LabeledGraph& graph() const noexcept { return graph_; }
  const std::vector<BinaryLabel>& labels() const noexcept { return labels_; }
  const BinaryLabel& label(std::size_t v) const { return labels_.at(v); }
  /// Length m of every label.
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t order() const noexcept { return labels_.size(); }

  std::optional<std::size_t> find(const BinaryLabel& label) const;

  /// Labels packed into one word each when m <= 64; empty otherwise.
  std::span<const std::uint64_t> packed() const noexcept { return packed_; }
  std::optional<std::size_t> find_packed(std::uint64_t key) const;

 private:
  LabeledGraph graph_;
  std::vector<BinaryLabel> labels_;
  std::size_t dimension_ = 0;
  std::unordered_map<BinaryLabel, std::size_t> index_;
  std::vector<std::uint64_t> packed_;
  std::unordered_map<std::uint64_t, std::size_t> packed_index_;
};

/// M_{n,k} labelled by Psi.
EmbeddedGraph embed_munarini(LabeledGraph g);
/// Binary-labelled families (hypercube, Fibonacci cube) labelled by
/// themselves.
EmbeddedGraph embed_identity(LabeledGraph g);
/// Labels from the classes of the transitive closure of "opposite edges of a
/// 4-cycle", with `root` labelled 0...0. For median graphs these classes are
/// the Djokovic-Winkler classes and the labelling is isometric; the result
/// is checked and ConsistencyError is thrown if it is not.
EmbeddedGraph embed_by_square_classes(LabeledGraph g, std::size_t root = 0);
/// Picks the natural embedding for the family: Psi for M_{n,k}, identity
/// for binary families, square classes rooted at vertex 0 otherwise.
EmbeddedGraph embed(LabeledGraph g);

/// Same graph, every label XOR-ed with the label of `root`.
EmbeddedGraph rerooted(const EmbeddedGraph& e, std::size_t root);

struct IsometryReport {
  bool isometric = true;
  /// First pair (in index order) whose graph and Hamming distances differ.
  std::optional<Edge> witness;
  std::size_t graph_distance = 0;
  std::size_t hamming_distance = 0;
};
/// Compares BFS distance with Hamming distance for all pairs. Throws
/// InputError when the graph is disconnected.
IsometryReport check_isometric(const EmbeddedGraph& e);

struct DaisyReport {
  bool is_daisy = true;
  /// Indices of the <=-maximal labels, increasing.
  std::vector<std::size_t> maximal_vertices;
  /// A vertex with a 1-bit that cannot be cleared inside the label set, and
  /// the label that is missing.
  std::optional<std::size_t> witness_vertex;
  std::optional<BinaryLabel> missing_label;
};
/// Whether the label set is closed downwards in the coordinatewise order.
/// Throws InputError if the labelling is not isometric.
DaisyReport check_daisy(const EmbeddedGraph& e);

/// A vertex whose rerooted labelling is downward closed, if one exists. For
/// a partial cube the isometric labelling is unique up to coordinate
/// permutation and complementation, so nullopt means the graph is not a
/// daisy cube. Assumes `e` is isometric.
std::optional<std::size_t> find_daisy_root(const EmbeddedGraph& e);

struct MedianOptions {
  /// Triples are scanned exhaustively up to this many vertices...
  std::size_t exhaustive_limit = 400;
  /// ...and sampled uniformly above it.
  std::size_t samples = 100000;
  std::uint64_t seed = 0x6d756e6172696e69ULL;
};

struct MedianReport {
  bool median_closed = true;
  bool exhaustive = true;
  std::uint64_t triples_checked = 0;
  std::optional<std::array<std::size_t, 3>> witness;
};
MedianReport check_median_closed(const EmbeddedGraph& e,
                                 const MedianOptions& options = {});

/// The vertex labelled by the coordinatewise majority of u, v, w. Throws
/// MedianClosureError when that label is not a vertex.
std::size_t median(const EmbeddedGraph& e, std::size_t u, std::size_t v,
                   std::size_t w);

/// An induced hypercube, given by its bottom vertex and the coordinates
/// that vary on it.
struct InducedCube {
  std::size_t bottom = 0;
  std::size_t top = 0;
  std::vector<std::size_t> support;

  std::size_t dimension() const noexcept { return support.size(); }

  friend bool operator==(const InducedCube&, const InducedCube&) = default;
  /// (dimension, bottom, support) order.
  friend std::strong_ordering operator<=>(const InducedCube& a,
                                          const InducedCube& b) {
    if (auto c = a.dimension() <=> b.dimension(); c != 0) return c;
    if (auto c = a.bottom <=> b.bottom; c != 0) return c;
    return a.support <=> b.support;
  }
};

/// Every induced hypercube of every dimension (vertices are 0-cubes),
/// sorted. Assumes `e` is isometric.
std::vector<InducedCube> enumerate_cubes(const EmbeddedGraph& e);
/// The cubes not contained in a strictly larger induced cube, sorted.
std::vector<InducedCube> enumerate_maximal_cubes(const EmbeddedGraph& e);

/// Vertex indices of a cube, bottom first.
std::vector<std::size_t> cube_vertices(const EmbeddedGraph& e,
                                       const InducedCube& cube);

/// sum_p c_p x^p from enumerate_cubes.
IntPoly cube_census(const EmbeddedGraph& e);
/// sum_p h_p x^p from enumerate_maximal_cubes.
IntPoly maximal_cube_census(const EmbeddedGraph& e);
/// Vertices counted by label weight.
IntPoly weight_census(const EmbeddedGraph& e);

using DistanceCensus = std::map<std::pair<std::size_t, std::size_t>,
                                std::uint64_t>;
/// Cubes counted by (dimension, BFS distance from bottom to origin).
DistanceCensus distance_cube_census(const EmbeddedGraph& e,
                                    std::size_t origin);
/// Same, with the origin at the all-zero label (InputError if absent).
DistanceCensus distance_cube_census(const EmbeddedGraph& e);
BiPoly to_bipoly(const DistanceCensus& census);

/// Index of the all-zero label. Throws InputError if there is none.
std::size_t zero_vertex(const EmbeddedGraph& e);

}  // namespace munarini
