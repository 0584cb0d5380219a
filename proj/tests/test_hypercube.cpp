#include <random>

#include "doctest.h"
#include "munarini/error.hpp"
#include "munarini/hypercube.hpp"
#include "oracles.hpp"

using namespace munarini;

namespace {

// A 6-cycle whose vertices, in cyclic order, carry the given labels.
EmbeddedGraph hexagon(const std::vector<std::string>& names) {
  std::vector<VertexLabel> vertices;
  std::vector<BinaryLabel> labels;
  for (auto& s : names) {
    vertices.emplace_back(BinaryLabel::parse(s));
    labels.push_back(BinaryLabel::parse(s));
  }
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
  LabeledGraph g({Family::Hypercube, 3, 1}, std::move(vertices), std::move(edges));
  return EmbeddedGraph(std::move(g), std::move(labels));
}

}  // namespace

TEST_CASE("labellings are validated") {
  auto g = build_munarini(1, 3);
  std::vector<BinaryLabel> same(3, BinaryLabel::parse("00"));
  CHECK_THROWS_AS(EmbeddedGraph(g, same), InputError);
  CHECK_THROWS_AS(EmbeddedGraph(g, {BinaryLabel::parse("00")}), InputError);
  CHECK_THROWS_AS(
      EmbeddedGraph(g, {BinaryLabel::parse("00"), BinaryLabel::parse("11"),
                        BinaryLabel::parse("01")}),
      InputError);
  CHECK_THROWS_AS(embed_munarini(build_generalized_pell(2, 3)), InputError);
}

TEST_CASE("isometry against Floyd-Warshall") {
  for (unsigned k = 1; k <= 4; ++k) {
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto e = embed_munarini(build_munarini(n, k));
      const auto d = oracle::all_distances(e.graph());
      bool iso = true;
      for (std::size_t u = 0; u < e.order(); ++u) {
        for (std::size_t v = 0; v < e.order(); ++v) {
          iso = iso && d[u][v] == e.label(u).hamming(e.label(v));
        }
      }
      CHECK(iso);
      CHECK(check_isometric(e).isometric);
    }
  }
}

TEST_CASE("non-isometric hexagon") {
  const auto e = hexagon({"000", "100", "110", "010", "011", "001"});
  const auto r = check_isometric(e);
  CHECK_FALSE(r.isometric);
  REQUIRE(r.witness.has_value());
  CHECK(r.graph_distance != r.hamming_distance);
  CHECK(r.witness->first == 0);
  CHECK(r.witness->second == 3);
  CHECK(r.graph_distance == 3);
  CHECK(r.hamming_distance == 1);
  CHECK_THROWS_AS(check_daisy(e), InputError);
}

TEST_CASE("daisy structure of the Psi image") {
  const auto e = embed(build_munarini(3, 2));
  const auto d = check_daisy(e);
  CHECK(d.is_daisy);
  std::vector<std::string> maximal;
  for (auto v : d.maximal_vertices) maximal.push_back(e.label(v).to_string());
  std::sort(maximal.begin(), maximal.end());
  CHECK(maximal == std::vector<std::string>{"010010", "100100", "101010"});

  for (unsigned k = 2; k <= 4; ++k) {
    for (std::size_t n = 0; n <= 5; ++n) {
      if (k == 4 && n == 5) continue;
      const auto em = embed(build_munarini(n, k));
      const auto dm = check_daisy(em);
      CHECK(dm.is_daisy);
      std::set<std::string> got, want;
      for (auto v : dm.maximal_vertices) got.insert(em.label(v).to_string());
      for (auto& u : enumerate_maximal_strings(n, k)) want.insert(encode_psi(u).to_string());
      CHECK(got == want);
    }
  }
}

TEST_CASE("daisy roots") {
  CHECK(find_daisy_root(embed(build_pell(4))).has_value());
  CHECK_FALSE(find_daisy_root(embed(build_generalized_pell(2, 3))).has_value());
  // The square-class labelling of a daisy cube, rerooted at a daisy root,
  // passes the plain downward-closure test.
  const auto e = embed(build_pell(3));
  const auto root = find_daisy_root(e);
  REQUIRE(root.has_value());
  CHECK(check_daisy(rerooted(e, *root)).is_daisy);
}

TEST_CASE("square-class labelling of generalized Pell graphs") {
  for (unsigned k = 2; k <= 4; ++k) {
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto e = embed_by_square_classes(build_generalized_pell(n, k));
      CHECK(check_isometric(e).isometric);
      CHECK(e.label(0).weight() == 0);
      CHECK(check_median_closed(e).median_closed);
    }
  }
  // A 6-cycle is a partial cube but has no squares: the labelling has one
  // coordinate per edge, which is not isometric.
  CHECK_THROWS(embed_by_square_classes(LabeledGraph(
      {Family::Munarini, 1, 1},
      {PellString::parse("0", 5), PellString::parse("1", 5), PellString::parse("2", 5),
       PellString::parse("3", 5), PellString::parse("4", 5), PellString::parse("5", 5)},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}})));
}

TEST_CASE("medians against geodesic search") {
  for (auto [n, k] : {std::pair<std::size_t, unsigned>{3, 3}, {4, 2}, {3, 4}}) {
    const auto e = embed(build_munarini(n, k));
    const auto d = oracle::all_distances(e.graph());
    std::mt19937 rng(static_cast<unsigned>(n * 10 + k));
    for (int t = 0; t < 300; ++t) {
      const std::size_t u = rng() % e.order(), v = rng() % e.order(),
                        w = rng() % e.order();
      const auto geodesic = oracle::geodesic_medians(d, u, v, w);
      REQUIRE(geodesic.size() == 1);
      CHECK(median(e, u, v, w) == geodesic[0]);
    }
    const auto r = check_median_closed(e);
    CHECK(r.median_closed);
    CHECK(r.exhaustive == (e.order() <= 400));
  }
  // An isometric 6-cycle: 100, 111 and 001 have majority 101.
  const auto e = hexagon({"000", "100", "110", "111", "011", "001"});
  CHECK(check_isometric(e).isometric);
  CHECK_THROWS_AS(median(e, 1, 3, 5), MedianClosureError);
  const auto r = check_median_closed(e);
  CHECK_FALSE(r.median_closed);
  CHECK(r.witness.has_value());
}

TEST_CASE("sampled median check above the exhaustive limit") {
  const auto e = embed(build_munarini(5, 3));
  MedianOptions options;
  options.exhaustive_limit = 100;
  options.samples = 2000;
  const auto r = check_median_closed(e, options);
  CHECK(r.median_closed);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.triples_checked == 2000);
}

TEST_CASE("cube enumeration against interval scan") {
  for (unsigned k = 1; k <= 4; ++k) {
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto e = embed(build_munarini(n, k));
      const auto cubes = enumerate_cubes(e);
      const auto brute = oracle::interval_cubes(e);
      CHECK(cubes.size() == brute.size());
      CHECK(oracle::coefficients(cube_census(e)) == oracle::histogram(brute));
      std::set<std::pair<std::size_t, std::size_t>> got, want;
      for (auto& c : cubes) got.emplace(c.bottom, c.top);
      for (auto& c : brute) want.emplace(c.bottom, c.top);
      CHECK(got == want);

      const auto maximal = enumerate_maximal_cubes(e);
      const auto brute_max = oracle::maximal_interval_cubes(e);
      std::set<std::pair<std::size_t, std::size_t>> gm, wm;
      for (auto& c : maximal) gm.emplace(c.bottom, c.top);
      for (auto& c : brute_max) wm.emplace(c.bottom, c.top);
      CHECK(gm == wm);
    }
  }
}

TEST_CASE("cube enumeration on other families") {
  for (unsigned k = 2; k <= 4; ++k) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto e = embed(build_generalized_pell(n, k));
      CHECK(oracle::coefficients(cube_census(e)) ==
            oracle::histogram(oracle::interval_cubes(e)));
      CHECK(oracle::coefficients(maximal_cube_census(e)) ==
            oracle::histogram(oracle::maximal_interval_cubes(e)));
    }
  }
  const auto q = embed(build_hypercube(4));
  CHECK(oracle::coefficients(cube_census(q)) == std::vector<long long>{16, 32, 24, 8, 1});
  CHECK(enumerate_maximal_cubes(q).size() == 1);
  const auto c = enumerate_maximal_cubes(q).front();
  CHECK(cube_vertices(q, c).size() == 16);
}

TEST_CASE("distance census") {
  const auto e = embed(build_munarini(0, 1));
  const auto d = distance_cube_census(e);
  CHECK(d.size() == 1);
  CHECK(d.at({0, 0}) == 1);
  const auto e23 = embed(build_munarini(2, 3));
  const auto d23 = distance_cube_census(e23);
  CHECK(d23.at({1, 1}) == 8);
  CHECK(d23.at({2, 0}) == 4);
  CHECK(to_bipoly(d23).coefficient(2, 0) == 4);
  CHECK_THROWS_AS(distance_cube_census(e23, 99), InputError);
}

TEST_CASE("wide labels take the general path") {
  const auto e = embed(build_munarini(2, 33));
  CHECK(e.dimension() == 66);
  CHECK(e.packed().empty());
  CHECK(check_isometric(e).isometric);
  CHECK(check_daisy(e).is_daisy);
  CHECK(cube_census(e) == cube_poly(2, 33));
  CHECK(maximal_cube_census(e) == maximal_cube_poly(2, 33));
  CHECK(to_bipoly(distance_cube_census(e)) == distance_cube_poly(2, 33));
}
