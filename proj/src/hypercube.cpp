#include "munarini/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "munarini/error.hpp"

namespace munarini {

namespace {

// Two interchangeable views of the labels: one machine word per label when
// m <= 64, BinaryLabel otherwise. The algorithms below are written once
// against this interface.
struct PackedView {
  using Key = std::uint64_t;
  const EmbeddedGraph& e;

  Key key(std::size_t v) const { return e.packed()[v]; }
  static Key flip(Key x, std::size_t j) { return x ^ (Key{1} << j); }
  static bool test(Key x, std::size_t j) { return (x >> j) & 1U; }
  static Key majority(Key a, Key b, Key c) {
    return (a & b) | (a & c) | (b & c);
  }
  static std::size_t hamming(Key a, Key b) {
    return static_cast<std::size_t>(std::popcount(a ^ b));
  }
  std::optional<std::size_t> find(Key x) const { return e.find_packed(x); }
};

struct WideView {
  using Key = BinaryLabel;
  const EmbeddedGraph& e;

  const Key& key(std::size_t v) const { return e.label(v); }
  static Key flip(const Key& x, std::size_t j) { return x.flipped(j); }
  static bool test(const Key& x, std::size_t j) { return x.test(j); }
  static Key majority(const Key& a, const Key& b, const Key& c) {
    return BinaryLabel::majority(a, b, c);
  }
  static std::size_t hamming(const Key& a, const Key& b) {
    return a.hamming(b);
  }
  std::optional<std::size_t> find(const Key& x) const { return e.find(x); }
};

template <typename F>
decltype(auto) with_view(const EmbeddedGraph& e, F&& f) {
  if (e.dimension() <= 64) return f(PackedView{e});
  return f(WideView{e});
}

BinaryLabel xor_labels(const BinaryLabel& a, const BinaryLabel& b) {
  BinaryLabel out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a.test(j) != b.test(j)) out.set(j);
  }
  return out;
}

// Disjoint-set forest over edge ids.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t edge_id(const LabeledGraph& g, std::size_t u, std::size_t v) {
  const Edge key{std::min(u, v), std::max(u, v)};
  const auto& edges = g.edges();
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  return static_cast<std::size_t>(it - edges.begin());
}

std::size_t count_internal_edges(const LabeledGraph& g,
                                 std::vector<std::size_t> vertices) {
  std::sort(vertices.begin(), vertices.end());
  std::size_t twice = 0;
  for (auto v : vertices) {
    for (auto w : g.neighbors(v)) {
      if (std::binary_search(vertices.begin(), vertices.end(), w)) ++twice;
    }
  }
  return twice / 2;
}

// Grows supports from each bottom vertex along its upward edges; a support
// is extended only if the whole new face is present.
template <typename View>
class CubeEnumerator {
 public:
  using Key = typename View::Key;

  CubeEnumerator(View view, bool only_maximal)
      : view_(view), only_maximal_(only_maximal) {}

  std::vector<InducedCube> run() {
    const auto& e = view_.e;
    for (std::size_t b = 0; b < e.order(); ++b) {
      bottom_ = b;
      up_.clear();
      down_.clear();
      const Key& base = view_.key(b);
      for (std::size_t j = 0; j < e.dimension(); ++j) {
        const bool present = view_.find(View::flip(base, j)).has_value();
        if (!present) continue;
        (View::test(base, j) ? down_ : up_).push_back(j);
      }
      std::vector<Key> keys{base};
      std::vector<std::size_t> support;
      grow(keys, support, 0);
    }
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  bool face_present(const std::vector<Key>& keys, std::size_t j) const {
    return std::all_of(keys.begin(), keys.end(), [&](const Key& x) {
      return view_.find(View::flip(x, j)).has_value();
    });
  }

  bool extendable(const std::vector<Key>& keys,
                  const std::vector<std::size_t>& support) const {
    for (auto j : up_) {
      if (!std::binary_search(support.begin(), support.end(), j) &&
          face_present(keys, j)) {
        return true;
      }
    }
    return std::any_of(down_.begin(), down_.end(),
                       [&](std::size_t j) { return face_present(keys, j); });
  }

  void emit(const std::vector<Key>& keys,
            const std::vector<std::size_t>& support) {
    std::vector<std::size_t> vertices;
    vertices.reserve(keys.size());
    for (const auto& x : keys) vertices.push_back(*view_.find(x));
    const std::size_t p = support.size();
    const std::size_t expected = p == 0 ? 0 : p << (p - 1);
    if (count_internal_edges(view_.e.graph(), vertices) != expected) {
      throw ConsistencyError(
          "interval of the labelling does not induce a hypercube at vertex " +
          std::to_string(bottom_));
    }
    out_.push_back(InducedCube{bottom_, vertices.back(), support});
  }

  void grow(std::vector<Key>& keys, std::vector<std::size_t>& support,
            std::size_t next) {
    if (!only_maximal_ || !extendable(keys, support)) emit(keys, support);
    for (std::size_t idx = next; idx < up_.size(); ++idx) {
      const std::size_t j = up_[idx];
      if (!face_present(keys, j)) continue;
      const std::size_t half = keys.size();
      for (std::size_t i = 0; i < half; ++i) {
        keys.push_back(View::flip(keys[i], j));
      }
      support.push_back(j);
      grow(keys, support, idx + 1);
      support.pop_back();
      keys.resize(half);
    }
  }

  View view_;
  bool only_maximal_;
  std::size_t bottom_ = 0;
  std::vector<std::size_t> up_;
  std::vector<std::size_t> down_;
  std::vector<InducedCube> out_;
};

}  // namespace

// ---------------------------------------------------------------------------
// EmbeddedGraph
// ---------------------------------------------------------------------------

EmbeddedGraph::EmbeddedGraph(LabeledGraph graph,
                             std::vector<BinaryLabel> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
  if (labels_.size() != graph_.order()) {
    throw InputError("labelling has " + std::to_string(labels_.size()) +
                     " labels for " + std::to_string(graph_.order()) +
                     " vertices");
  }
  dimension_ = labels_.empty() ? 0 : labels_.front().size();
  index_.reserve(labels_.size());
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v].size() != dimension_) {
      throw InputError("non-uniform label lengths: " +
                       std::to_string(labels_[v].size()) + " vs " +
                       std::to_string(dimension_));
    }
    if (!index_.emplace(labels_[v], v).second) {
      throw InputError("labelling is not injective at '" +
                       labels_[v].to_string() + "'");
    }
  }
  for (const auto& [u, v] : graph_.edges()) {
    if (labels_[u].hamming(labels_[v]) != 1) {
      throw InputError("edge " + labels_[u].to_string() + " - " +
                       labels_[v].to_string() +
                       " is not a hypercube edge");
    }
  }
  if (dimension_ <= 64) {
    packed_.reserve(labels_.size());
    packed_index_.reserve(labels_.size());
    for (std::size_t v = 0; v < labels_.size(); ++v) {
      std::uint64_t word = 0;
      for (auto j : labels_[v].ones()) word |= std::uint64_t{1} << j;
      packed_.push_back(word);
      packed_index_.emplace(word, v);
    }
  }
}

std::optional<std::size_t> EmbeddedGraph::find(const BinaryLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> EmbeddedGraph::find_packed(std::uint64_t key) const {
  auto it = packed_index_.find(key);
  if (it == packed_index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------------

EmbeddedGraph embed_munarini(LabeledGraph g) {
  if (g.params().family != Family::Munarini) {
    throw InputError("the Psi labelling applies to Munarini graphs");
  }
  std::vector<BinaryLabel> labels;
  labels.reserve(g.order());
  for (const auto& label : g.vertices()) {
    labels.push_back(encode_psi(std::get<PellString>(label)).label());
  }
  return EmbeddedGraph(std::move(g), std::move(labels));
}

EmbeddedGraph embed_identity(LabeledGraph g) {
  std::vector<BinaryLabel> labels;
  labels.reserve(g.order());
  for (const auto& label : g.vertices()) {
    const auto* bits = std::get_if<BinaryLabel>(&label);
    if (bits == nullptr) {
      throw InputError("identity labelling needs binary vertex labels");
    }
    labels.push_back(*bits);
  }
  return EmbeddedGraph(std::move(g), std::move(labels));
}

EmbeddedGraph embed_by_square_classes(LabeledGraph g, std::size_t root) {
  if (g.order() == 0) return EmbeddedGraph(std::move(g), {});
  if (root >= g.order()) throw InputError("root out of range");
  if (!is_connected(g)) throw InputError("graph is not connected");

  UnionFind classes(g.size());
  std::vector<std::size_t> common;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto nv = g.neighbors(v);
    for (std::size_t x = 0; x < nv.size(); ++x) {
      for (std::size_t y = x + 1; y < nv.size(); ++y) {
        const auto a = nv[x], b = nv[y];
        const auto na = g.neighbors(a), nb = g.neighbors(b);
        common.clear();
        std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                              std::back_inserter(common));
        for (auto w : common) {
          if (w == v) continue;
          // Square v-a-w-b: opposite edges are in the same class.
          classes.unite(edge_id(g, v, a), edge_id(g, b, w));
          classes.unite(edge_id(g, v, b), edge_id(g, a, w));
        }
      }
    }
  }

  // Number the classes by their smallest edge.
  std::vector<std::size_t> coordinate(g.size());
  std::unordered_map<std::size_t, std::size_t> class_index;
  for (std::size_t e = 0; e < g.size(); ++e) {
    auto [it, inserted] =
        class_index.try_emplace(classes.find(e), class_index.size());
    coordinate[e] = it->second;
  }
  const std::size_t m = class_index.size();

  // Label along a BFS tree from the root.
  const auto dist = bfs_distances(g, root);
  std::vector<std::size_t> by_distance(g.order());
  std::iota(by_distance.begin(), by_distance.end(), std::size_t{0});
  std::stable_sort(by_distance.begin(), by_distance.end(),
                   [&](auto a, auto b) { return dist[a] < dist[b]; });
  std::vector<BinaryLabel> labels(g.order(), BinaryLabel(m));
  for (auto v : by_distance) {
    if (v == root) continue;
    for (auto u : g.neighbors(v)) {
      if (dist[u] + 1 == dist[v]) {
        labels[v] = labels[u].flipped(coordinate[edge_id(g, u, v)]);
        break;
      }
    }
  }
  for (std::size_t e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.edges()[e];
    const auto& lu = labels[u];
    const auto& lv = labels[v];
    if (lu.hamming(lv) != 1 || lu.test(coordinate[e]) == lv.test(coordinate[e])) {
      throw ConsistencyError("square classes do not give a hypercube labelling");
    }
  }
  EmbeddedGraph out(std::move(g), std::move(labels));
  const auto report = check_isometric(out);
  if (!report.isometric) {
    throw ConsistencyError(
        "square-class labelling is not isometric: vertices " +
        std::to_string(report.witness->first) + " and " +
        std::to_string(report.witness->second));
  }
  return out;
}

EmbeddedGraph embed(LabeledGraph g) {
  switch (g.params().family) {
    case Family::Munarini:
      return embed_munarini(std::move(g));
    case Family::FibonacciCube:
    case Family::Hypercube:
      return embed_identity(std::move(g));
    default:
      return embed_by_square_classes(std::move(g), 0);
  }
}

EmbeddedGraph rerooted(const EmbeddedGraph& e, std::size_t root) {
  if (root >= e.order()) throw InputError("root out of range");
  std::vector<BinaryLabel> labels;
  labels.reserve(e.order());
  for (const auto& label : e.labels()) {
    labels.push_back(xor_labels(label, e.label(root)));
  }
  return EmbeddedGraph(e.graph(), std::move(labels));
}

// ---------------------------------------------------------------------------
// Structural checks
// ---------------------------------------------------------------------------

IsometryReport check_isometric(const EmbeddedGraph& e) {
  return with_view(e, [&](auto view) {
    IsometryReport report;
    const auto& g = e.graph();
    for (std::size_t s = 0; s < g.order(); ++s) {
      const auto dist = bfs_distances(g, s);
      for (std::size_t t = s + 1; t < g.order(); ++t) {
        if (dist[t] == kUnreachable) {
          throw InputError("graph is not connected");
        }
        const auto h = view.hamming(view.key(s), view.key(t));
        if (h != dist[t] && report.isometric) {
          report.isometric = false;
          report.witness = Edge{s, t};
          report.graph_distance = dist[t];
          report.hamming_distance = h;
        }
      }
      if (!report.isometric) break;
    }
    return report;
  });
}

DaisyReport check_daisy(const EmbeddedGraph& e) {
  if (!check_isometric(e).isometric) {
    throw InputError("daisy check needs an isometric labelling");
  }
  return with_view(e, [&](auto view) {
    DaisyReport report;
    for (std::size_t v = 0; v < e.order(); ++v) {
      const auto& x = view.key(v);
      bool maximal = true;
      for (std::size_t j = 0; j < e.dimension(); ++j) {
        const bool present = view.find(view.flip(x, j)).has_value();
        if (view.test(x, j)) {
          if (!present && report.is_daisy) {
            report.is_daisy = false;
            report.witness_vertex = v;
            report.missing_label = e.label(v).flipped(j);
          }
        } else if (present) {
          maximal = false;
        }
      }
      if (maximal) report.maximal_vertices.push_back(v);
    }
    return report;
  });
}

std::optional<std::size_t> find_daisy_root(const EmbeddedGraph& e) {
  return with_view(e, [&](auto view) -> std::optional<std::size_t> {
    for (std::size_t r = 0; r < e.order(); ++r) {
      const auto& root = view.key(r);
      bool closed = true;
      for (std::size_t v = 0; v < e.order() && closed; ++v) {
        const auto& x = view.key(v);
        for (std::size_t j = 0; j < e.dimension() && closed; ++j) {
          // Clearing a rerooted 1-bit moves x one step towards the root.
          if (view.test(x, j) != view.test(root, j) &&
              !view.find(view.flip(x, j))) {
            closed = false;
          }
        }
      }
      if (closed) return r;
    }
    return std::nullopt;
  });
}

MedianReport check_median_closed(const EmbeddedGraph& e,
                                 const MedianOptions& options) {
  return with_view(e, [&](auto view) {
    MedianReport report;
    const std::size_t n = e.order();
    auto check = [&](std::size_t u, std::size_t v, std::size_t w) {
      ++report.triples_checked;
      if (!view.find(view.majority(view.key(u), view.key(v), view.key(w)))) {
        report.median_closed = false;
        report.witness = std::array<std::size_t, 3>{u, v, w};
        return false;
      }
      return true;
    };
    if (n <= options.exhaustive_limit) {
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          for (std::size_t w = v + 1; w < n; ++w) {
            if (!check(u, v, w)) return report;
          }
        }
      }
      return report;
    }
    report.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < options.samples; ++i) {
      const auto u = pick(rng), v = pick(rng), w = pick(rng);
      if (!check(u, v, w)) return report;
    }
    return report;
  });
}

std::size_t median(const EmbeddedGraph& e, std::size_t u, std::size_t v,
                   std::size_t w) {
  const auto m =
      BinaryLabel::majority(e.label(u), e.label(v), e.label(w));
  if (auto index = e.find(m)) return *index;
  throw MedianClosureError("majority label " + m.to_string() +
                           " is not a vertex");
}

// ---------------------------------------------------------------------------
// Hypercube enumeration
// ---------------------------------------------------------------------------

std::vector<InducedCube> enumerate_cubes(const EmbeddedGraph& e) {
  return with_view(e, [](auto view) {
    return CubeEnumerator<decltype(view)>(view, false).run();
  });
}

std::vector<InducedCube> enumerate_maximal_cubes(const EmbeddedGraph& e) {
  return with_view(e, [](auto view) {
    return CubeEnumerator<decltype(view)>(view, true).run();
  });
}

std::vector<std::size_t> cube_vertices(const EmbeddedGraph& e,
                                       const InducedCube& cube) {
  std::vector<BinaryLabel> labels{e.label(cube.bottom)};
  for (auto j : cube.support) {
    const std::size_t half = labels.size();
    for (std::size_t i = 0; i < half; ++i) labels.push_back(labels[i].flipped(j));
  }
  std::vector<std::size_t> out;
  for (const auto& label : labels) {
    auto index = e.find(label);
    if (!index) throw InputError("cube leaves the vertex set");
    out.push_back(*index);
  }
  return out;
}

namespace {

IntPoly census_of(const std::vector<InducedCube>& cubes) {
  std::vector<Integer> counts;
  for (const auto& cube : cubes) {
    if (counts.size() <= cube.dimension()) counts.resize(cube.dimension() + 1);
    ++counts[cube.dimension()];
  }
  return IntPoly(std::move(counts));
}

}  // namespace

IntPoly cube_census(const EmbeddedGraph& e) {
  return census_of(enumerate_cubes(e));
}

IntPoly maximal_cube_census(const EmbeddedGraph& e) {
  return census_of(enumerate_maximal_cubes(e));
}

IntPoly weight_census(const EmbeddedGraph& e) {
  std::vector<Integer> counts;
  for (const auto& label : e.labels()) {
    const auto w = label.weight();
    if (counts.size() <= w) counts.resize(w + 1);
    ++counts[w];
  }
  return IntPoly(std::move(counts));
}

DistanceCensus distance_cube_census(const EmbeddedGraph& e,
                                    std::size_t origin) {
  if (origin >= e.order()) throw InputError("origin is not a vertex");
  const auto dist = bfs_distances(e.graph(), origin);
  DistanceCensus census;
  for (const auto& cube : enumerate_cubes(e)) {
    ++census[{cube.dimension(), dist[cube.bottom]}];
  }
  return census;
}

DistanceCensus distance_cube_census(const EmbeddedGraph& e) {
  return distance_cube_census(e, zero_vertex(e));
}

BiPoly to_bipoly(const DistanceCensus& census) {
  BiPoly out;
  for (const auto& [key, count] : census) {
    out.add_term(static_cast<unsigned>(key.first),
                 static_cast<unsigned>(key.second), Integer(count));
  }
  return out;
}

std::size_t zero_vertex(const EmbeddedGraph& e) {
  if (auto v = e.find(BinaryLabel(e.dimension()))) return *v;
  throw InputError("no vertex carries the all-zero label");
}

}  // namespace munarini
