#pragma once

// Brute-force reference computations for the tests. They work straight from
// the definitions (filtering raw words, comparing every pair of vertices,
// scanning intervals) and share no code paths with the library beyond the
// value types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "munarini/graphs.hpp"
#include "munarini/hypercube.hpp"

namespace oracle {

using Word = std::vector<unsigned>;

// All words of length n over {0, ..., base-1}, lexicographic.
inline std::vector<Word> all_words(std::size_t n, unsigned base) {
  std::vector<Word> out;
  Word w(n, 0);
  while (true) {
    out.push_back(w);
    std::size_t pos = n;
    while (pos > 0 && ++w[pos - 1] == base) w[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

// Lengths of the maximal runs of `symbol`.
inline std::vector<std::size_t> runs_of(const Word& w, unsigned symbol) {
  std::vector<std::size_t> runs;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (w[i] == symbol) runs.push_back(j - i);
    i = j;
  }
  return runs;
}

inline bool no_odd_runs(const Word& w, unsigned symbol) {
  const auto runs = runs_of(w, symbol);
  return std::all_of(runs.begin(), runs.end(),
                     [](std::size_t r) { return r % 2 == 0; });
}

inline std::vector<Word> pell_words(std::size_t n, unsigned k) {
  std::vector<Word> out;
  for (auto& w : all_words(n, k + 1)) {
    if (no_odd_runs(w, k)) out.push_back(w);
  }
  return out;
}

inline std::string text(const Word& w) {
  std::string s;
  for (auto c : w) s += static_cast<char>('0' + c);
  return s;
}

inline std::uint64_t ank_words(std::size_t n, unsigned k) {
  std::uint64_t count = 0;
  for (auto& w : all_words(n, 2 * k + 1)) {
    if (no_odd_runs(w, 0) && no_odd_runs(w, 1)) ++count;
  }
  return count;
}

// Whether u and v differ by one rewrite of the Munarini graph: a single
// position 0 <-> i (1 <= i < k), or a pair 00 <-> kk.
inline bool munarini_adjacent(const Word& u, const Word& v, unsigned k) {
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) diff.push_back(i);
  }
  if (diff.size() == 1) {
    const auto a = u[diff[0]], b = v[diff[0]];
    return (a == 0 && b >= 1 && b < k) || (b == 0 && a >= 1 && a < k);
  }
  if (diff.size() == 2 && diff[1] == diff[0] + 1) {
    const auto a0 = u[diff[0]], a1 = u[diff[1]];
    const auto b0 = v[diff[0]], b1 = v[diff[1]];
    return (a0 == 0 && a1 == 0 && b0 == k && b1 == k) ||
           (b0 == 0 && b1 == 0 && a0 == k && a1 == k);
  }
  return false;
}

// Same for the generalized Pell graph: i <-> i+1 (i <= k-2) at one
// position, or (k-1)(k-1) <-> kk.
inline bool genpell_adjacent(const Word& u, const Word& v, unsigned k) {
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) diff.push_back(i);
  }
  if (diff.size() == 1) {
    const auto a = std::min(u[diff[0]], v[diff[0]]);
    const auto b = std::max(u[diff[0]], v[diff[0]]);
    return b == a + 1 && a + 2 <= k;
  }
  if (diff.size() == 2 && diff[1] == diff[0] + 1) {
    const auto lo = k - 1;
    const auto a0 = u[diff[0]], a1 = u[diff[1]];
    const auto b0 = v[diff[0]], b1 = v[diff[1]];
    return (a0 == lo && a1 == lo && b0 == k && b1 == k) ||
           (b0 == lo && b1 == lo && a0 == k && a1 == k);
  }
  return false;
}

struct Graph {
  std::vector<std::string> labels;
  std::set<std::pair<std::string, std::string>> edges;  // ordered pairs a < b
};

template <typename Adjacent>
Graph pairwise_graph(std::size_t n, unsigned k, Adjacent adjacent) {
  Graph g;
  const auto words = pell_words(n, k);
  for (auto& w : words) g.labels.push_back(text(w));
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (adjacent(words[i], words[j], k)) {
        g.edges.emplace(std::min(g.labels[i], g.labels[j]),
                        std::max(g.labels[i], g.labels[j]));
      }
    }
  }
  return g;
}

inline Graph munarini(std::size_t n, unsigned k) {
  return pairwise_graph(n, k, munarini_adjacent);
}
inline Graph genpell(std::size_t n, unsigned k) {
  return pairwise_graph(n, k, genpell_adjacent);
}

inline Graph snapshot(const munarini::LabeledGraph& g) {
  Graph out;
  for (auto& l : g.vertices()) out.labels.push_back(munarini::label_text(l));
  for (auto [u, v] : g.edges()) {
    out.edges.emplace(std::min(out.labels[u], out.labels[v]),
                      std::max(out.labels[u], out.labels[v]));
  }
  return out;
}

// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<std::size_t>> all_distances(
    const munarini::LabeledGraph& g) {
  const std::size_t n = g.order();
  const std::size_t inf = n + 1;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
      }
    }
  }
  return d;
}

// An induced cube seen as the interval [b, t] of the coordinatewise order:
// every label between b and t must be present.
struct Cube {
  std::size_t bottom;
  std::size_t top;
  std::size_t dimension;
  bool operator<(const Cube& o) const {
    return std::tie(bottom, top) < std::tie(o.bottom, o.top);
  }
};

inline std::vector<Cube> interval_cubes(const munarini::EmbeddedGraph& e) {
  std::vector<Cube> out;
  for (std::size_t b = 0; b < e.order(); ++b) {
    for (std::size_t t = 0; t < e.order(); ++t) {
      const auto& lb = e.label(b);
      const auto& lt = e.label(t);
      if (!lb.is_below(lt)) continue;
      std::vector<std::size_t> free;
      for (std::size_t j = 0; j < lb.size(); ++j) {
        if (lt.test(j) && !lb.test(j)) free.push_back(j);
      }
      bool full = true;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()) && full;
           ++mask) {
        auto l = lb;
        for (std::size_t i = 0; i < free.size(); ++i) {
          if ((mask >> i) & 1U) l.set(free[i]);
        }
        full = e.find(l).has_value();
      }
      if (full) out.push_back({b, t, free.size()});
    }
  }
  return out;
}

// Maximal cubes by pairwise containment of intervals.
inline std::vector<Cube> maximal_interval_cubes(
    const munarini::EmbeddedGraph& e) {
  const auto cubes = interval_cubes(e);
  std::vector<Cube> out;
  for (const auto& c : cubes) {
    const bool contained = std::any_of(cubes.begin(), cubes.end(), [&](const Cube& d) {
      return d.dimension > c.dimension &&
             e.label(d.bottom).is_below(e.label(c.bottom)) &&
             e.label(c.top).is_below(e.label(d.top));
    });
    if (!contained) out.push_back(c);
  }
  return out;
}

inline std::vector<long long> histogram(const std::vector<Cube>& cubes) {
  std::vector<long long> h;
  for (const auto& c : cubes) {
    if (h.size() <= c.dimension) h.resize(c.dimension + 1);
    ++h[c.dimension];
  }
  return h;
}

inline std::vector<long long> coefficients(const munarini::IntPoly& p) {
  std::vector<long long> out;
  for (const auto& c : p.coefficients()) out.push_back(static_cast<long long>(c));
  return out;
}

// Graph-theoretic median: the unique vertex on geodesics between each pair.
inline std::vector<std::size_t> geodesic_medians(
    const std::vector<std::vector<std::size_t>>& d, std::size_t u,
    std::size_t v, std::size_t w) {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < d.size(); ++m) {
    if (d[u][m] + d[m][v] == d[u][v] && d[v][m] + d[m][w] == d[v][w] &&
        d[u][m] + d[m][w] == d[u][w]) {
      out.push_back(m);
    }
  }
  return out;
}

// Cube numbers a_n = (2k-1) a_{n-1} + 2 a_{n-2}, a_0 = 1, a_1 = 2k-1.
inline std::vector<long long> cube_number_recurrence(unsigned k, std::size_t terms) {
  std::vector<long long> a{1, 2LL * k - 1};
  while (a.size() < terms) {
    a.push_back((2LL * k - 1) * a[a.size() - 1] + 2 * a[a.size() - 2]);
  }
  a.resize(terms);
  return a;
}

}  // namespace oracle
