#include "munarini/graphs.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include "munarini/error.hpp"
#include "munarini/polynomials.hpp"

namespace munarini {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilyNames{{
    {Family::Munarini, "munarini"},
    {Family::GeneralizedPell, "genpell"},
    {Family::FibonacciCube, "fibonacci"},
    {Family::PellGraph, "pell"},
    {Family::Hypercube, "hypercube"},
    {Family::Star, "star"},
}};

std::vector<VertexLabel> as_labels(std::vector<PellString> strings) {
  std::vector<VertexLabel> out;
  out.reserve(strings.size());
  for (auto& s : strings) out.emplace_back(std::move(s));
  return out;
}

std::size_t label_length(const VertexLabel& label) {
  return std::visit([](const auto& l) { return l.size(); }, label);
}

// Shared by M_{n,k} and Pi_{n,k}: both rules rewrite one symbol upwards or
// a pair of equal symbols to kk. `single(s)` says whether s may be raised by
// one step and to what; `pair_symbol` is the symbol whose doubled form
// becomes kk.
template <typename Raise>
LabeledGraph build_pell_family(FamilyParams params, Raise raise,
                               Symbol pair_symbol) {
  const unsigned k = params.k;
  auto strings = enumerate_pell_strings(params.n, k);
  std::unordered_map<PellString, std::size_t> index;
  index.reserve(strings.size());
  for (std::size_t i = 0; i < strings.size(); ++i) index.emplace(strings[i], i);

  std::vector<Edge> edges;
  std::vector<Symbol> work;
  for (std::size_t v = 0; v < strings.size(); ++v) {
    const auto symbols = strings[v].symbols();
    work.assign(symbols.begin(), symbols.end());
    for (std::size_t p = 0; p < work.size(); ++p) {
      const Symbol original = work[p];
      for (Symbol target : raise(original)) {
        work[p] = target;
        // Targets are below k, so the result is always a Pell string.
        edges.emplace_back(v, index.at(PellString(work, k)));
      }
      work[p] = original;
      if (p + 1 < work.size() && work[p] == pair_symbol &&
          work[p + 1] == pair_symbol) {
        work[p] = work[p + 1] = k;
        if (is_pell_string(work, k)) {
          edges.emplace_back(v, index.at(PellString(work, k)));
        }
        work[p] = work[p + 1] = pair_symbol;
      }
    }
  }
  return LabeledGraph(params, as_labels(std::move(strings)), std::move(edges));
}

void binary_strings(std::vector<BinaryLabel>& out, BinaryLabel& current,
                    std::size_t pos, bool fibonacci) {
  if (pos == current.size()) {
    out.push_back(current);
    return;
  }
  binary_strings(out, current, pos + 1, fibonacci);
  if (!fibonacci || pos == 0 || !current.test(pos - 1)) {
    current.set(pos);
    binary_strings(out, current, pos + 1, fibonacci);
    current.set(pos, false);
  }
}

LabeledGraph build_binary_family(FamilyParams params, bool fibonacci) {
  BinaryLabel current(params.n);
  std::vector<BinaryLabel> strings;
  binary_strings(strings, current, 0, fibonacci);
  std::unordered_map<BinaryLabel, std::size_t> index;
  index.reserve(strings.size());
  for (std::size_t i = 0; i < strings.size(); ++i) index.emplace(strings[i], i);

  std::vector<Edge> edges;
  for (std::size_t v = 0; v < strings.size(); ++v) {
    for (std::size_t p = 0; p < params.n; ++p) {
      if (strings[v].test(p)) continue;
      auto it = index.find(strings[v].flipped(p));
      if (it != index.end()) edges.emplace_back(v, it->second);
    }
  }
  std::vector<VertexLabel> labels(strings.begin(), strings.end());
  return LabeledGraph(params, std::move(labels), std::move(edges));
}

}  // namespace

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

std::string_view family_name(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

void validate(const FamilyParams& params) {
  if (params.k == 0) throw UnsupportedParameter("k must be at least 1");
  if (params.family == Family::GeneralizedPell && params.k < 2) {
    throw UnsupportedParameter(
        "generalized Pell graphs Pi_{n,k} are defined for k >= 2");
  }
}

Integer expected_order(const FamilyParams& params) {
  validate(params);
  switch (params.family) {
    case Family::Munarini:
    case Family::GeneralizedPell:
      return fib_k(params.n + 1, params.k);
    case Family::PellGraph:
      return fib_k(params.n + 1, 2);
    case Family::FibonacciCube:
      return fib_k(params.n + 2, 1);
    case Family::Hypercube:
      return ipow(2, static_cast<unsigned>(params.n));
    case Family::Star:
      return params.k;
  }
  return 0;
}

std::string label_text(const VertexLabel& label) {
  return std::visit([](const auto& l) { return l.to_string(); }, label);
}

// ---------------------------------------------------------------------------
// LabeledGraph
// ---------------------------------------------------------------------------

LabeledGraph::LabeledGraph(FamilyParams params,
                           std::vector<VertexLabel> vertices,
                           std::vector<Edge> edges)
    : params_(params),
      vertices_(std::move(vertices)),
      adjacency_(vertices_.size()) {
  index_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& label = vertices_[i];
    if (i > 0) {
      const auto& first = vertices_.front();
      if (label.index() != first.index() ||
          label_length(label) != label_length(first)) {
        throw InputError("vertex labels must share one kind and length");
      }
      if (const auto* pell = std::get_if<PellString>(&label);
          pell && pell->arity() != std::get<PellString>(first).arity()) {
        throw InputError("vertex labels must share one arity");
      }
    }
    if (!index_.emplace(label, i).second) {
      throw InputError("duplicate vertex label '" + label_text(label) + "'");
    }
  }
  for (auto& [u, v] : edges) {
    if (u >= vertices_.size() || v >= vertices_.size()) {
      throw InputError("edge endpoint out of range");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InputError("parallel edges");
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::size_t LabeledGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

bool LabeledGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<std::size_t> LabeledGraph::find(const VertexLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LabeledGraph::index_of(const VertexLabel& label) const {
  if (auto i = find(label)) return *i;
  throw InputError("'" + label_text(label) + "' is not a vertex");
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

LabeledGraph build_munarini(std::size_t n, unsigned k) {
  FamilyParams params{Family::Munarini, n, k};
  validate(params);
  auto raise = [k](Symbol s) {
    std::vector<Symbol> out;
    if (s == 0) {
      for (Symbol i = 1; i < k; ++i) out.push_back(i);
    }
    return out;
  };
  return build_pell_family(params, raise, 0);
}

LabeledGraph build_generalized_pell(std::size_t n, unsigned k) {
  FamilyParams params{Family::GeneralizedPell, n, k};
  validate(params);
  auto raise = [k](Symbol s) {
    std::vector<Symbol> out;
    if (s + 2 <= k) out.push_back(s + 1);
    return out;
  };
  return build_pell_family(params, raise, k - 1);
}

LabeledGraph build_fibonacci_cube(std::size_t n) {
  return build_binary_family({Family::FibonacciCube, n, 1}, true);
}

LabeledGraph build_pell(std::size_t n) {
  FamilyParams params{Family::PellGraph, n, 2};
  auto raise = [](Symbol s) {
    return s == 0 ? std::vector<Symbol>{1} : std::vector<Symbol>{};
  };
  return build_pell_family(params, raise, 1);
}

LabeledGraph build_hypercube(std::size_t m) {
  return build_binary_family({Family::Hypercube, m, 1}, false);
}

LabeledGraph build_star(unsigned k) {
  FamilyParams params{Family::Star, 1, k};
  validate(params);
  std::vector<VertexLabel> vertices;
  std::vector<Edge> edges;
  for (Symbol i = 0; i < k; ++i) {
    vertices.emplace_back(PellString({i}, k));
    if (i != 0) edges.emplace_back(0, i);
  }
  return LabeledGraph(params, std::move(vertices), std::move(edges));
}

LabeledGraph build(const FamilyParams& params) {
  validate(params);
  switch (params.family) {
    case Family::Munarini:
      return build_munarini(params.n, params.k);
    case Family::GeneralizedPell:
      return build_generalized_pell(params.n, params.k);
    case Family::FibonacciCube:
      return build_fibonacci_cube(params.n);
    case Family::PellGraph:
      return build_pell(params.n);
    case Family::Hypercube:
      return build_hypercube(params.n);
    case Family::Star:
      return build_star(params.k);
  }
  throw InputError("unknown family");
}

LabeledGraph induced_subgraph(const LabeledGraph& g,
                              std::span<const std::size_t> vertices,
                              std::size_t strip) {
  std::vector<std::size_t> kept(vertices.begin(), vertices.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<std::size_t> renumber(g.order(), kUnreachable);
  std::vector<VertexLabel> labels;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    renumber.at(kept[i]) = i;
    const auto& label = g.label(kept[i]);
    if (strip == 0) {
      labels.push_back(label);
    } else if (const auto* pell = std::get_if<PellString>(&label)) {
      if (pell->size() < strip) throw InputError("label shorter than prefix");
      auto tail = pell->symbols().subspan(strip);
      labels.emplace_back(
          PellString(std::vector<Symbol>(tail.begin(), tail.end()),
                     pell->arity()));
    } else {
      const auto& bits = std::get<BinaryLabel>(label);
      if (bits.size() < strip) throw InputError("label shorter than prefix");
      labels.emplace_back(BinaryLabel::parse(bits.to_string().substr(strip)));
    }
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (renumber[u] != kUnreachable && renumber[v] != kUnreachable) {
      edges.emplace_back(renumber[u], renumber[v]);
    }
  }
  FamilyParams params = g.params();
  params.n = params.n >= strip ? params.n - strip : 0;
  return LabeledGraph(params, std::move(labels), std::move(edges));
}

MunariniDecomposition decompose_munarini(const LabeledGraph& g) {
  const auto& params = g.params();
  if (params.family != Family::Munarini) {
    throw InputError("decomposition needs a Munarini graph");
  }
  if (params.n < 2) {
    throw InputError("decomposition needs n >= 2, got n = " +
                     std::to_string(params.n));
  }
  const unsigned k = params.k;
  MunariniDecomposition out;
  out.k = k;
  out.parts.resize(k + 1);
  out.cross_edges.assign(k + 1, std::vector<std::size_t>(k + 1, 0));
  std::vector<std::size_t> part_of(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto& s = std::get<PellString>(g.label(v));
    part_of[v] = s[0];  // first symbol k means the kk part
    out.parts[s[0]].push_back(v);
  }
  for (const auto& [u, v] : g.edges()) {
    const auto a = std::min(part_of[u], part_of[v]);
    const auto b = std::max(part_of[u], part_of[v]);
    ++out.cross_edges[a][b];
    if (a == 0 && b == k) {
      const std::size_t low = part_of[u] == 0 ? u : v;
      if (std::get<PellString>(g.label(low))[1] == 0) {
        out.kk_matching.emplace_back(u, v);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Explicit isomorphisms
// ---------------------------------------------------------------------------

BinaryLabel theta(const PellString& u) {
  if (u.arity() != 1) throw InputError("theta is defined on F_{n,1}");
  if (u.empty()) throw InputError("theta needs n >= 1");
  std::string bits;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) {
      bits += '0';
    } else {
      bits += "10";
      ++i;
    }
  }
  bits.pop_back();
  return BinaryLabel::parse(bits);
}

PellString theta_inverse(const BinaryLabel& v) {
  const std::string bits = v.to_string() + '0';
  std::vector<Symbol> symbols;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '0') {
      symbols.push_back(0);
    } else if (bits[i + 1] == '0') {
      symbols.push_back(1);
      symbols.push_back(1);
      ++i;
    } else {
      throw InputError("'" + v.to_string() + "' is not a Fibonacci string");
    }
  }
  return PellString(std::move(symbols), 1);
}

PellString swap_zero_one(const PellString& u) {
  std::vector<Symbol> symbols(u.symbols().begin(), u.symbols().end());
  for (auto& s : symbols) {
    if (s == 0) {
      s = 1;
    } else if (s == 1) {
      s = 0;
    }
  }
  return PellString(std::move(symbols), u.arity());
}

bool is_isomorphism(const LabeledGraph& a, const LabeledGraph& b,
                    std::span<const std::size_t> map) {
  if (a.order() != b.order() || map.size() != a.order() ||
      a.size() != b.size()) {
    return false;
  }
  std::vector<bool> hit(b.order(), false);
  for (auto target : map) {
    if (target >= b.order() || hit[target]) return false;
    hit[target] = true;
  }
  // Injective on vertices, hence on edges; with |E(a)| == |E(b)| this also
  // covers the reverse direction.
  return std::all_of(a.edges().begin(), a.edges().end(), [&](const Edge& e) {
    return b.adjacent(map[e.first], map[e.second]);
  });
}

Isomorphism iso_to_fibonacci(std::size_t n) {
  if (n == 0) throw InputError("M_{n,1} ~ Gamma_{n-1} needs n >= 1");
  Isomorphism out{build_munarini(n, 1), build_fibonacci_cube(n - 1), {}};
  for (const auto& label : out.source.vertices()) {
    out.map.push_back(
        out.target.index_of(theta(std::get<PellString>(label))));
  }
  if (!is_isomorphism(out.source, out.target, out.map)) {
    throw ConsistencyError("theta is not an isomorphism for n = " +
                           std::to_string(n));
  }
  return out;
}

Isomorphism iso_to_pell(std::size_t n) {
  if (n == 0) throw InputError("M_{n,2} ~ Pi_n needs n >= 1");
  Isomorphism out{build_munarini(n, 2), build_pell(n), {}};
  for (const auto& label : out.source.vertices()) {
    out.map.push_back(
        out.target.index_of(swap_zero_one(std::get<PellString>(label))));
  }
  if (!is_isomorphism(out.source, out.target, out.map)) {
    throw ConsistencyError("0/1 swap is not an isomorphism for n = " +
                           std::to_string(n));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Distances and global properties
// ---------------------------------------------------------------------------

std::vector<std::size_t> bfs_distances(const LabeledGraph& g,
                                       std::size_t source) {
  if (source >= g.order()) {
    throw InputError("unknown source vertex " + std::to_string(source));
  }
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t degree(const LabeledGraph& g, std::size_t v) {
  if (v >= g.order()) throw InputError("unknown vertex " + std::to_string(v));
  return g.degree(v);
}

bool is_connected(const LabeledGraph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](auto d) { return d == kUnreachable; });
}

bool is_bipartite(const LabeledGraph& g) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  for (std::size_t root = 0; root < g.order(); ++root) {
    if (dist[root] != kUnreachable) continue;
    const auto component = bfs_distances(g, root);
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (component[v] != kUnreachable) dist[v] = component[v];
    }
  }
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return dist[e.first] % 2 != dist[e.second] % 2;
  });
}

Integer count_edges_closed_form(std::size_t n, unsigned k) {
  if (k == 0) throw UnsupportedParameter("k must be at least 1");
  const Integer kk(k);
  const Integer nn(n);
  const Integer numerator = (kk * kk - kk + 2) * nn * fib_k(n + 1, k) +
                            (kk - 2) * (nn + 1) * fib_k(n, k);
  const Integer denominator = kk * kk + 4;
  if (numerator % denominator != 0) {
    throw ConsistencyError("edge closed form is not an integer for n = " +
                           std::to_string(n) + ", k = " + std::to_string(k));
  }
  return numerator / denominator;
}

Integer count_edges_recurrence(std::size_t n, unsigned k) {
  if (k == 0) throw UnsupportedParameter("k must be at least 1");
  Integer previous = 0;
  if (n == 0) return previous;
  Integer current = k - 1;
  for (std::size_t i = 2; i <= n; ++i) {
    Integer next = k * current + previous + fib_k(i + 1, k) - fib_k(i, k);
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

}  // namespace munarini
