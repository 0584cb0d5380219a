#pragma once

// Text serializations: edge lists, DOT, JSON graphs and cube lists, and CSV
// tables of polynomials and censuses. Every writer is deterministic.

#include <string>
#include <string_view>
#include <vector>

#include "munarini/graphs.hpp"
#include "munarini/hypercube.hpp"
#include "munarini/polynomials.hpp"

namespace munarini {

/// One "u v" line per edge, labels as text, in edge order.
std::string to_edgelist(const LabeledGraph& g);
/// Undirected DOT with every label quoted.
std::string to_dot(const LabeledGraph& g);

/// {"family", "n", "k", "vertices": [labels], "edges": [[u, v], ...]}.
std::string to_json(const LabeledGraph& g);
/// Inverse of to_json. Throws InputError on malformed documents.
LabeledGraph graph_from_json(std::string_view text);

/// [{"bottom", "top", "support"}, ...] with vertex labels as text.
std::string cubes_to_json(const EmbeddedGraph& e,
                          const std::vector<InducedCube>& cubes);

/// "exponent,coefficient" rows for the nonzero coefficients.
std::string census_csv(const IntPoly& census);
/// "p,d,count" rows.
std::string census_csv(const DistanceCensus& census);

/// "n,k,exponent,coefficient" rows for the nonzero coefficients.
std::string poly_csv(std::size_t n, unsigned k, const IntPoly& p);
/// "n,k,p,d,coefficient" rows, d being the exponent of q.
std::string poly_csv(std::size_t n, unsigned k, const BiPoly& p);

}  // namespace munarini
