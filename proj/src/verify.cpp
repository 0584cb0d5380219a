#include "munarini/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <sstream>

#include "munarini/error.hpp"
#include "munarini/hypercube.hpp"
#include "munarini/io.hpp"
#include "munarini/polynomials.hpp"

namespace munarini {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 6> kSuiteNames{{
    {Suite::Isometry, "isometry"},
    {Suite::Daisy, "daisy"},
    {Suite::Median, "median"},
    {Suite::Identities, "identities"},
    {Suite::Oracle, "oracle"},
    {Suite::All, "all"},
}};

std::string show(const Integer& v) { return to_string(v); }
std::string show(const IntPoly& p) { return p.to_string(); }
std::string show(const BiPoly& p) { return p.to_string(); }
std::string show(std::size_t v) { return std::to_string(v); }

std::string show_labels(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += (i ? ", " : "") + labels[i];
  }
  return out + "}";
}

class Runner {
 public:
  explicit Runner(VerifyReport& report) : report_(report) {}

  void use(std::initializer_list<const char*> ops) {
    for (const char* op : ops) report_.exercised.insert(op);
  }

  void check(Suite suite, std::string name, const FamilyParams& params,
             bool passed, const std::string& detail = {}) {
    report_.checks.push_back(CheckResult{std::string(suite_name(suite)),
                                         std::move(name), params, passed,
                                         passed ? std::string() : detail});
  }

  template <typename T>
  void expect_eq(Suite suite, std::string name, const FamilyParams& params,
                 const T& got, const T& want) {
    const bool passed = got == want;
    check(suite, std::move(name), params, passed,
          passed ? std::string()
                 : "got " + show(got) + ", expected " + show(want));
  }

  // Runs `body`, turning an escaping exception into a failed check.
  void guarded(Suite suite, const FamilyParams& params,
               const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& ex) {
      check(suite, "completes without error", params, false, ex.what());
    }
  }

 private:
  VerifyReport& report_;
};

FamilyParams munarini_params(std::size_t n, unsigned k) {
  return {Family::Munarini, n, k};
}
FamilyParams pell_params(std::size_t n, unsigned k) {
  return {Family::GeneralizedPell, n, k};
}

std::string pair_witness(const EmbeddedGraph& e, const IsometryReport& r) {
  if (r.isometric) return {};
  const auto [u, v] = *r.witness;
  return e.label(u).to_string() + " and " + e.label(v).to_string() +
         ": graph distance " + std::to_string(r.graph_distance) +
         ", Hamming distance " + std::to_string(r.hamming_distance);
}

std::string daisy_witness(const EmbeddedGraph& e, const DaisyReport& r) {
  if (r.is_daisy) return {};
  return "label " + e.label(*r.witness_vertex).to_string() +
         " has no lower neighbour " + r.missing_label->to_string();
}

std::string median_witness(const EmbeddedGraph& e, const MedianReport& r) {
  if (r.median_closed) return {};
  const auto& t = *r.witness;
  return "majority of " + e.label(t[0]).to_string() + ", " +
         e.label(t[1]).to_string() + ", " + e.label(t[2]).to_string() +
         " is not a vertex";
}

// Words of length n over {0, ..., 2k} with no odd run of 0s or of 1s,
// counted by filtering all (2k+1)^n words.
Integer brute_ank_count(std::size_t n, unsigned k) {
  const unsigned base = 2 * k + 1;
  std::vector<unsigned> word(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool good = true;
    for (std::size_t i = 0; i < n && good;) {
      std::size_t j = i;
      while (j < n && word[j] == word[i]) ++j;
      if (word[i] <= 1 && (j - i) % 2 == 1) good = false;
      i = j;
    }
    if (good) ++count;
    std::size_t pos = 0;
    while (pos < n && ++word[pos] == base) word[pos++] = 0;
    if (pos == n) break;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Suites over the parameter grid
// ---------------------------------------------------------------------------

void isometry_suite(Runner& r, std::size_t n, unsigned k) {
  const auto pm = munarini_params(n, k);
  r.guarded(Suite::Isometry, pm, [&] {
    r.use({"build_munarini", "encode_psi", "check_isometric", "decode_psi"});
    const auto e = embed_munarini(build_munarini(n, k));
    const auto report = check_isometric(e);
    r.check(Suite::Isometry, "psi labelling is isometric", pm,
            report.isometric, pair_witness(e, report));

    std::string bad;
    for (const auto& label : e.graph().vertices()) {
      const auto& u = std::get<PellString>(label);
      const auto image = encode_psi(u);
      if (decode_psi(image) != u ||
          !is_munarini_string(image.label(), k) ||
          image.label().size() != k * n) {
        bad = u.to_string();
        break;
      }
    }
    r.check(Suite::Isometry, "decode inverts encode", pm, bad.empty(),
            "round trip fails at " + bad);
  });

  if (k >= 2) {
    const auto pp = pell_params(n, k);
    r.guarded(Suite::Isometry, pp, [&] {
      r.use({"build_generalized_pell"});
      const auto e = embed_by_square_classes(build_generalized_pell(n, k));
      const auto report = check_isometric(e);
      r.check(Suite::Isometry, "square-class labelling is isometric", pp,
              report.isometric, pair_witness(e, report));
    });
  }
  if (k == 1) {
    const FamilyParams pf{Family::FibonacciCube, n, 1};
    r.guarded(Suite::Isometry, pf, [&] {
      r.use({"build_fibonacci_cube"});
      const auto e = embed_identity(build_fibonacci_cube(n));
      const auto report = check_isometric(e);
      r.check(Suite::Isometry, "identity labelling is isometric", pf,
              report.isometric, pair_witness(e, report));
    });
  }
}

void daisy_suite(Runner& r, std::size_t n, unsigned k) {
  const auto pm = munarini_params(n, k);
  r.guarded(Suite::Daisy, pm, [&] {
    r.use({"check_daisy"});
    const auto e = embed_munarini(build_munarini(n, k));
    const auto report = check_daisy(e);
    r.check(Suite::Daisy, "psi image is downward closed", pm,
            report.is_daisy, daisy_witness(e, report));
    if (k < 2) return;
    r.use({"enumerate_maximal_strings"});
    std::vector<std::string> want;
    for (const auto& u : enumerate_maximal_strings(n, k)) {
      want.push_back(encode_psi(u).to_string());
    }
    std::vector<std::string> got;
    for (auto v : report.maximal_vertices) got.push_back(e.label(v).to_string());
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    r.check(Suite::Daisy, "maximal vertices are the images of 0-free strings",
            pm, got == want,
            "got " + show_labels(got) + ", expected " + show_labels(want));
  });

  if (k < 2) return;
  const auto pp = pell_params(n, k);
  r.guarded(Suite::Daisy, pp, [&] {
    const auto e = embed(build_generalized_pell(n, k));
    const auto root = find_daisy_root(e);
    if (k == 2) {
      r.check(Suite::Daisy, "Pell graph is a daisy cube", pp, root.has_value(),
              "no vertex gives a downward-closed labelling");
      return;
    }
    if (n < 2) return;
    r.use({"max_degree_witness"});
    const auto w = max_degree_witness(n, k);
    r.check(Suite::Daisy, "generalized Pell graph is not a daisy cube", pp,
            !root.has_value(),
            "vertex " + (root ? label_text(e.graph().label(*root)) : "") +
                " gives a downward-closed labelling");
    r.check(Suite::Daisy, "max degree differs from [x]W", pp,
            w.daisy_obstruction && w.pell_degree_is_2n.value_or(false),
            "max degree " + show(w.pell_max_degree.value_or(0)) +
                ", [x]W = " + show(w.weight_linear_coeff));
  });
}

// Checks the geodesic property d(a,m) + d(m,b) = d(a,b) of median(u,v,w)
// on a deterministic sample of triples.
bool medians_are_geodesic(const EmbeddedGraph& e, std::string& detail) {
  const auto& g = e.graph();
  const std::size_t n = g.order();
  std::mt19937_64 rng(0x6d656469616e73ULL);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t samples = std::min<std::size_t>(200, n * n * n);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::array<std::size_t, 3> t{pick(rng), pick(rng), pick(rng)};
    const auto m = median(e, t[0], t[1], t[2]);
    const auto dm = bfs_distances(g, m);
    for (std::size_t a = 0; a < 3; ++a) {
      const auto da = bfs_distances(g, t[a]);
      const auto b = t[(a + 1) % 3];
      if (da[m] + dm[b] != da[b]) {
        detail = "median of " + label_text(g.label(t[0])) + ", " +
                 label_text(g.label(t[1])) + ", " + label_text(g.label(t[2])) +
                 " is off a geodesic";
        return false;
      }
    }
  }
  return true;
}

void median_suite(Runner& r, std::size_t n, unsigned k) {
  const auto pm = munarini_params(n, k);
  r.guarded(Suite::Median, pm, [&] {
    r.use({"check_median_closed", "median", "bfs_distances"});
    const auto e = embed_munarini(build_munarini(n, k));
    const auto report = check_median_closed(e);
    r.check(Suite::Median, "psi image is median closed", pm,
            report.median_closed, median_witness(e, report));
    std::string detail;
    r.check(Suite::Median, "majority vertex lies on geodesics", pm,
            medians_are_geodesic(e, detail), detail);
  });
  if (k < 2) return;
  const auto pp = pell_params(n, k);
  r.guarded(Suite::Median, pp, [&] {
    const auto e = embed(build_generalized_pell(n, k));
    const auto report = check_median_closed(e);
    r.check(Suite::Median, "square-class labelling is median closed", pp,
            report.median_closed, median_witness(e, report));
  });
}

void identities_suite(Runner& r, std::size_t n, unsigned k) {
  const auto pm = munarini_params(n, k);
  const auto s = Suite::Identities;
  r.guarded(s, pm, [&] {
    r.use({"weight_poly", "cube_poly", "distance_cube_poly", "cube_number",
           "cube_number_series", "count_ank_words", "total_weight",
           "count_edges_closed_form", "count_edges_recurrence",
           "expand_series", "fib_k"});
    const auto W = weight_poly(n, k);
    const auto C = cube_poly(n, k);
    r.expect_eq(s, "C(x) = W(x+1)", pm, C, W.shifted(1));
    r.expect_eq(s, "D(x,q) = C(x+q-1)", pm, distance_cube_poly(n, k),
                BiPoly::compose_linear(C, -1));
    r.expect_eq(s, "C(-1) = 1", pm, C.evaluate(-1), Integer(1));
    const Integer q = C.evaluate(1);
    r.expect_eq(s, "C(1) = q", pm, q, cube_number(n, k));
    r.expect_eq(s, "q from its generating function", pm,
                cube_number_series(k, n).at(n), q);
    r.expect_eq(s, "q = |A_{n,k}|", pm, count_ank_words(n, k), q);
    if (n <= 6 && k <= 3) {
      r.expect_eq(s, "|A_{n,k}| by exhaustive count", pm, brute_ank_count(n, k),
                  q);
    }
    const auto edges = count_edges_closed_form(n, k);
    r.expect_eq(s, "W'(1) = |E|", pm, W.derivative().evaluate(1), edges);
    r.expect_eq(s, "total weight = |E|", pm, total_weight(n, k), edges);
    r.expect_eq(s, "edge recurrence = closed form", pm,
                count_edges_recurrence(n, k), edges);
    r.expect_eq(s, "edge generating function", pm,
                expand_series(edge_series(k), n).at(n).coefficient(0), edges);
    r.expect_eq(s, "order generating function", pm,
                expand_series(order_series(k), n).at(n).coefficient(0),
                fib_k(n + 1, k));
    r.expect_eq(s, "F generating function", pm,
                expand_series(fib_series(k), n).at(n).coefficient(0),
                fib_k(n, k));

    for (auto route : {Route::Series, Route::ClosedForm}) {
      const char* tag = route == Route::Series ? "series" : "closed form";
      r.expect_eq(s, std::string("W by ") + tag, pm, weight_poly(n, k, route),
                  W);
      r.expect_eq(s, std::string("C by ") + tag, pm, cube_poly(n, k, route),
                  C);
    }
    if (k >= 2) {
      r.use({"maximal_cube_poly"});
      const auto H = maximal_cube_poly(n, k);
      for (auto route : {Route::Series, Route::ClosedForm}) {
        const char* tag = route == Route::Series ? "series" : "closed form";
        r.expect_eq(s, std::string("H by ") + tag, pm,
                    maximal_cube_poly(n, k, route), H);
      }
      bool sparse = true;
      for (std::size_t p = 0; 2 * p < n; ++p) {
        sparse = sparse && H.coefficient(p).is_zero();
      }
      r.check(s, "h_p = 0 for 2p < n", pm, sparse, "H = " + H.to_string());
    }
    if (n == 0) {
      const auto d = size_decomposition(k);
      r.check(s, "size generating function decomposition", pm, d.holds(),
              d.lhs.to_string('t') + " vs " + d.rhs.to_string('t'));
    }
  });
}

void oracle_suite(Runner& r, std::size_t n, unsigned k) {
  const auto pm = munarini_params(n, k);
  const auto s = Suite::Oracle;
  r.guarded(s, pm, [&] {
    r.use({"enumerate_pell_strings", "is_pell_string", "weight",
           "enumerate_cubes", "enumerate_maximal_cubes",
           "distance_cube_census", "degree", "decompose_munarini",
           "build_star", "build_hypercube", "build_pell"});
    const auto strings = enumerate_pell_strings(n, k);
    const auto order = fib_k(n + 1, k);
    r.expect_eq(s, "|F_{n,k}| = F_{n+1,k}", pm, Integer(strings.size()), order);

    // Filter all (k+1)^n raw words.
    if (Integer(k + 1) * n <= 64 && ipow(Integer(k + 1), n) <= 200000) {
      std::vector<Symbol> word(n, 0);
      std::size_t count = 0;
      while (true) {
        if (is_pell_string(word, k)) ++count;
        std::size_t pos = 0;
        while (pos < n && ++word[pos] == k + 1) word[pos++] = 0;
        if (pos == n) break;
      }
      r.expect_eq(s, "raw words without odd runs of k", pm,
                  Integer(count), order);
    }

    std::string bad;
    for (const auto& u : strings) {
      if (weight(u) != encode_psi(u).label().weight()) bad = u.to_string();
    }
    r.check(s, "weight = popcount of the psi image", pm, bad.empty(),
            "mismatch at " + bad);

    if (k * n <= 16) {
      std::size_t image = 0;
      const std::size_t m = k * n;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        BinaryLabel label(m);
        for (std::size_t j = 0; j < m; ++j) {
          if ((bits >> j) & 1U) label.set(j);
        }
        if (is_munarini_string(label, k)) ++image;
      }
      r.expect_eq(s, "psi is onto the Munarini strings", pm, Integer(image),
                  order);
    }

    const auto g = build_munarini(n, k);
    r.expect_eq(s, "|V| = F_{n+1,k}", pm, Integer(g.order()), order);
    r.expect_eq(s, "expected order", pm, expected_order(pm), order);
    const Integer edges(g.size());
    r.expect_eq(s, "|E| closed form", pm, count_edges_closed_form(n, k), edges);
    r.expect_eq(s, "|E| recurrence", pm, count_edges_recurrence(n, k), edges);

    const auto e = embed_munarini(g);
    r.expect_eq(s, "weight census = W", pm, weight_census(e), weight_poly(n, k));
    r.expect_eq(s, "cube census = C", pm, cube_census(e), cube_poly(n, k));
    const auto zero = zero_vertex(e);
    r.expect_eq(s, "distance census = D", pm,
                to_bipoly(distance_cube_census(e, zero)),
                distance_cube_poly(n, k));

    const auto dist = bfs_distances(g, zero);
    bad.clear();
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (dist[v] != e.label(v).weight()) bad = e.label(v).to_string();
    }
    r.check(s, "distance to 0^n = label weight", pm, bad.empty(),
            "mismatch at " + bad);
    const auto w = max_degree_witness(n, k);
    r.expect_eq(s, "deg(0^n) = [x]W", pm, Integer(degree(g, zero)),
                w.weight_linear_coeff);

    if (k >= 2) {
      const auto H = maximal_cube_poly(n, k);
      r.expect_eq(s, "maximal cube census = H", pm, maximal_cube_census(e), H);
      const auto pp = pell_params(n, k);
      const auto pe = embed(build_generalized_pell(n, k));
      r.expect_eq(s, "|E(Pi_{n,k})| = |E(M_{n,k})|", pp,
                  Integer(pe.graph().size()), edges);
      r.expect_eq(s, "cube census of Pi_{n,k} = C", pp, cube_census(pe),
                  cube_poly(n, k));
      r.expect_eq(s, "maximal cube census of Pi_{n,k} = H", pp,
                  maximal_cube_census(pe), H);
    }
    if (k == 2) {
      const auto pell = build_pell(n);
      r.expect_eq(s, "2|E(Pi_n)| = n P_{n+1}", FamilyParams{Family::PellGraph, n, 2},
                  Integer(2 * pell.size()), Integer(n) * fib_k(n + 1, 2));
    }
    if (k == 1 && n >= 1) {
      r.use({"iso_to_fibonacci"});
      const auto iso = iso_to_fibonacci(n);
      r.check(s, "theta is an isomorphism onto Gamma_{n-1}", pm,
              is_isomorphism(iso.source, iso.target, iso.map));
      bad.clear();
      for (const auto& u : strings) {
        if (theta_inverse(theta(u)) != u) bad = u.to_string();
      }
      r.check(s, "theta inverse round trip", pm, bad.empty(), "fails at " + bad);
    }
    if (k == 2 && n >= 1) {
      r.use({"iso_to_pell"});
      const auto iso = iso_to_pell(n);
      r.check(s, "0/1 swap is an isomorphism onto Pi_n", pm,
              is_isomorphism(iso.source, iso.target, iso.map));
    }

    if (n >= 2) {
      const auto d = decompose_munarini(g);
      const auto fn = fib_k(n, k);
      const auto fn1 = fib_k(n - 1, k);
      bool shape = d.parts.size() == k + 1;
      for (unsigned i = 0; i < k && shape; ++i) {
        shape = Integer(d.parts[i].size()) == fn &&
                induced_subgraph(g, d.parts[i], 1) == build_munarini(n - 1, k);
      }
      shape = shape && Integer(d.parts[k].size()) == fn1 &&
              induced_subgraph(g, d.parts[k], 2) == build_munarini(n - 2, k);
      for (unsigned a = 0; a <= k && shape; ++a) {
        for (unsigned b = a + 1; b <= k && shape; ++b) {
          Integer want = 0;
          if (a == 0 && b < k) want = fn;
          if (a == 0 && b == k) want = fn1;
          shape = Integer(d.cross_edges[a][b]) == want;
        }
      }
      shape = shape && Integer(d.kk_matching.size()) == fn1;
      r.check(s, "decomposition into copies of M_{n-1,k} and M_{n-2,k}", pm,
              shape);
    }

    if (n == 0) {
      r.check(s, "M_{0,k} is K_1", pm, g.order() == 1 && g.size() == 0);
      r.check(s, "Q_0 is K_1", pm, build_hypercube(0).order() == 1);
    }
    if (n == 1) {
      const auto star = build_star(k);
      r.check(s, "M_{1,k} is the star S_{k-1}", pm,
              star.vertices() == g.vertices() && star.edges() == g.edges());
      if (k >= 2) {
        r.expect_eq(s, "H of the star is (k-1)x", pm, maximal_cube_poly(1, k),
                    IntPoly::monomial(k - 1, 1));
      }
    }
    if (n <= 4) {
      IntPoly two_plus_x = IntPoly::constant(1);
      for (std::size_t i = 0; i < n; ++i) {
        two_plus_x *= IntPoly(std::vector<Integer>{2, 1});
      }
      r.expect_eq(s, "cube census of Q_n = (2+x)^n",
                  FamilyParams{Family::Hypercube, n, 1},
                  cube_census(embed_identity(build_hypercube(n))), two_plus_x);
    }

    r.use({"to_json", "graph_from_json"});
    r.check(s, "JSON round trip", pm, graph_from_json(to_json(g)) == g);
  });
}

}  // namespace

std::string_view suite_name(Suite suite) {
  for (const auto& [value, name] : kSuiteNames) {
    if (value == suite) return name;
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  for (const auto& [value, text] : kSuiteNames) {
    if (text == name) return value;
  }
  throw InputError("unknown suite '" + std::string(name) + "'");
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

const std::vector<std::string>& library_operations() {
  static const std::vector<std::string> ops{
      "enumerate_pell_strings", "is_pell_string", "encode_psi", "decode_psi",
      "weight", "enumerate_maximal_strings", "count_ank_words",
      "build_munarini", "build_generalized_pell", "build_fibonacci_cube",
      "build_pell", "build_hypercube", "build_star", "decompose_munarini",
      "iso_to_fibonacci", "iso_to_pell", "bfs_distances", "degree",
      "count_edges_closed_form", "count_edges_recurrence", "check_isometric",
      "check_daisy", "check_median_closed", "enumerate_cubes",
      "enumerate_maximal_cubes", "distance_cube_census", "median",
      "expand_series", "weight_poly", "cube_poly", "distance_cube_poly",
      "maximal_cube_poly", "cube_number", "cube_number_series",
      "total_weight", "fib_k", "max_degree_witness", "to_json",
      "graph_from_json"};
  return ops;
}

VerifyReport verify_bounds(Suite suite, std::size_t n_max, unsigned k_max) {
  VerifyReport report;
  Runner runner(report);
  const bool all = suite == Suite::All;
  for (unsigned k = 1; k <= k_max; ++k) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (all || suite == Suite::Isometry) isometry_suite(runner, n, k);
      if (all || suite == Suite::Daisy) daisy_suite(runner, n, k);
      if (all || suite == Suite::Median) median_suite(runner, n, k);
      if (all || suite == Suite::Identities) identities_suite(runner, n, k);
      if (all || suite == Suite::Oracle) oracle_suite(runner, n, k);
    }
  }
  return report;
}

VerifyReport verify_instance(Suite suite, const FamilyParams& params) {
  validate(params);
  VerifyReport report;
  Runner runner(report);
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Isometry) {
    runner.guarded(Suite::Isometry, params, [&] {
      const auto e = embed(build(params));
      const auto r = check_isometric(e);
      runner.check(Suite::Isometry, "labelling is isometric", params,
                   r.isometric, pair_witness(e, r));
    });
  }
  if (all || suite == Suite::Daisy) {
    runner.guarded(Suite::Daisy, params, [&] {
      const auto e = embed(build(params));
      const auto root = find_daisy_root(e);
      std::string detail = "no vertex gives a downward-closed labelling";
      if (!root) {
        detail += "; " + daisy_witness(e, check_daisy(e)) + " (root " +
                  label_text(e.graph().label(0)) + ")";
        if (params.family == Family::GeneralizedPell && params.k >= 3 &&
            params.n >= 2) {
          const auto w = max_degree_witness(params.n, params.k);
          detail += "; max degree " + show(w.pell_max_degree.value_or(0)) +
                    " differs from [x]W = " + show(w.weight_linear_coeff);
        }
      }
      runner.check(Suite::Daisy, "is a daisy cube", params, root.has_value(),
                   detail);
    });
  }
  if (all || suite == Suite::Median) {
    runner.guarded(Suite::Median, params, [&] {
      const auto e = embed(build(params));
      const auto r = check_median_closed(e);
      runner.check(Suite::Median, "labelling is median closed", params,
                   r.median_closed, median_witness(e, r));
    });
  }
  if (all || suite == Suite::Identities) {
    identities_suite(runner, params.n, params.k);
  }
  if (all || suite == Suite::Oracle) {
    oracle_suite(runner, params.n, params.k);
  }
  return report;
}

}  // namespace munarini
