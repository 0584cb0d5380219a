#include "doctest.h"
#include "munarini/error.hpp"
#include "munarini/polynomials.hpp"
#include "oracles.hpp"

using namespace munarini;

namespace {

IntPoly poly(std::vector<Integer> c) { return IntPoly(std::move(c)); }

std::vector<Integer> constants(const std::vector<IntPoly>& series) {
  std::vector<Integer> out;
  for (auto& p : series) out.push_back(p.coefficient(0));
  return out;
}

}  // namespace

TEST_CASE("IntPoly arithmetic and text") {
  const auto p = poly({1, 5, 4});
  CHECK(p.to_string() == "1 + 5*x + 4*x^2");
  CHECK(poly({}).to_string() == "0");
  CHECK(poly({0, -2, 0, 1}).to_string() == "-2*x + 1*x^3");
  CHECK(poly({3, 0, 0}).degree() == 0);
  CHECK(IntPoly().degree() == IntPoly::kZeroDegree);
  CHECK(p.shifted(1) == poly({10, 13, 4}));
  CHECK(p.derivative() == poly({5, 8}));
  CHECK(p.evaluate(-1) == 0);
  CHECK((p - p).is_zero());
  CHECK(p * poly({1, 1}) == poly({1, 6, 9, 4}));
}

TEST_CASE("series expansion") {
  CHECK(constants(expand_series(order_series(2), 5)) ==
        std::vector<Integer>{1, 2, 5, 12, 29, 70});
  CHECK(constants(expand_series(fib_series(3), 4)) ==
        std::vector<Integer>{0, 1, 3, 10, 33});
  const RationalSeries geometric({IntPoly::constant(1)},
                                 {IntPoly::constant(1), IntPoly::constant(-1)});
  CHECK(constants(expand_series(geometric, 6)) == std::vector<Integer>(7, 1));
  const RationalSeries bad({IntPoly::constant(1)},
                           {IntPoly::constant(2), IntPoly::constant(-1)});
  CHECK_THROWS_AS(expand_series(bad, 3), InputError);
}

TEST_CASE("k-Fibonacci numbers") {
  std::vector<Integer> fib;
  for (std::size_t n = 0; n <= 6; ++n) fib.push_back(fib_k(n, 1));
  CHECK(fib == std::vector<Integer>{0, 1, 1, 2, 3, 5, 8});
  CHECK(fib_k(4, 3) == 33);
  CHECK(fib_k(0, 7) == 0);
  CHECK(fib_k(200, 5) == 5 * fib_k(199, 5) + fib_k(198, 5));
}

TEST_CASE("polynomial examples") {
  CHECK(weight_poly(2, 3) == poly({1, 5, 4}));
  CHECK(cube_poly(2, 3) == poly({10, 13, 4}));
  CHECK(cube_poly(2, 2).evaluate(1) == 11);
  CHECK(maximal_cube_poly(3, 2) == poly({0, 0, 2, 1}));
  CHECK(maximal_cube_poly(2, 3) == poly({0, 1, 4}));
  CHECK_THROWS_AS(maximal_cube_poly(3, 1), UnsupportedParameter);
  const auto d = distance_cube_poly(2, 3);
  CHECK(d.coefficient(1, 1) == 8);
  CHECK(d.coefficient(2, 0) == 4);
  CHECK(d.at_q(0) == poly({1, 5, 4}));
  CHECK(total_weight(2, 3) == 13);
  CHECK(total_weight(3, 2) == 18);
  for (unsigned k = 1; k <= 6; ++k) {
    CHECK(weight_poly(1, k) == poly({1, Integer(k - 1)}));
    CHECK(total_weight(1, k) == k - 1);
    if (k >= 2) CHECK(maximal_cube_poly(1, k) == IntPoly::monomial(k - 1, 1));
  }
  for (std::size_t n = 0; n <= 12; ++n) {
    std::vector<Integer> want;
    for (std::size_t d = 0; d <= n; ++d) want.push_back(binomial(n - d, d));
    CHECK(weight_poly(n, 1) == IntPoly(want));
  }
}

TEST_CASE("three routes agree") {
  for (unsigned k = 1; k <= 5; ++k) {
    for (std::size_t n = 0; n <= 10; ++n) {
      const auto w = weight_poly(n, k);
      CHECK(weight_poly(n, k, Route::Series) == w);
      CHECK(weight_poly(n, k, Route::ClosedForm) == w);
      const auto c = cube_poly(n, k);
      CHECK(cube_poly(n, k, Route::Series) == c);
      CHECK(cube_poly(n, k, Route::ClosedForm) == c);
      if (k >= 2) {
        const auto h = maximal_cube_poly(n, k);
        CHECK(maximal_cube_poly(n, k, Route::Series) == h);
        CHECK(maximal_cube_poly(n, k, Route::ClosedForm) == h);
      }
    }
  }
}

TEST_CASE("identities") {
  for (unsigned k = 1; k <= 5; ++k) {
    for (std::size_t n = 0; n <= 10; ++n) {
      const auto w = weight_poly(n, k);
      const auto c = cube_poly(n, k);
      CHECK(c == w.shifted(1));
      CHECK(distance_cube_poly(n, k) == BiPoly::compose_linear(c, -1));
      CHECK(distance_cube_poly(n, k) == BiPoly::compose_linear(w, 0));
      CHECK(c.evaluate(-1) == 1);
      CHECK(c.evaluate(1) == cube_number(n, k));
      CHECK(c.evaluate(1) == count_ank_words(n, k));
      CHECK(w.derivative().evaluate(1) == total_weight(n, k));
    }
  }
}

TEST_CASE("cube numbers") {
  CHECK(cube_number_series(1, 6) == std::vector<Integer>{1, 1, 3, 5, 11, 21, 43});
  CHECK(cube_number_series(2, 4) == std::vector<Integer>{1, 3, 11, 39, 139});
  for (unsigned k = 1; k <= 4; ++k) {
    const auto want = oracle::cube_number_recurrence(k, 12);
    const auto got = cube_number_series(k, 11);
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(got[i] == want[i]);
  }
}

TEST_CASE("size decomposition") {
  for (unsigned k = 1; k <= 8; ++k) CHECK(size_decomposition(k).holds());
  // The edge generating function agrees with the recurrence.
  for (unsigned k = 1; k <= 5; ++k) {
    const auto series = expand_series(edge_series(k), 12);
    for (std::size_t n = 0; n <= 12; ++n) {
      CHECK(series[n].coefficient(0) == count_edges_recurrence(n, k));
    }
  }
}

TEST_CASE("max degree witness") {
  const auto w = max_degree_witness(2, 3);
  CHECK(w.weight_linear_coeff == 5);
  CHECK(w.zero_vertex_degree == 5);
  CHECK(w.pell_max_degree == 4);
  CHECK(w.daisy_obstruction);
  const auto p = max_degree_witness(3, 2);
  CHECK(p.weight_linear_coeff == 5);
  CHECK(p.pell_max_degree == 5);
  CHECK_FALSE(p.daisy_obstruction);
  CHECK_FALSE(p.pell_degree_is_2n.has_value());
  const auto s = max_degree_witness(1, 6);
  CHECK(s.weight_linear_coeff == 5);
  CHECK(s.zero_vertex_degree == 5);
}
