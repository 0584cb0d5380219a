#pragma once

// Exact polynomial engine: univariate and bivariate integer polynomials,
// rational generating functions in t with polynomial coefficients, and the
// weight / cube / distance-cube / maximal-cube polynomials of M_{n,k}.
//
// Nothing here touches floating point.

#include <climits>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "munarini/integer.hpp"

namespace munarini {

/// Dense polynomial in one indeterminate with exact coefficients.
///
/// Trailing zeros are always stripped, so structural equality is polynomial
/// equality.
class IntPoly {
 public:
  static constexpr long kZeroDegree = LONG_MIN;

  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coefficients);

  static IntPoly constant(Integer c);
  static IntPoly monomial(Integer c, std::size_t exponent);
  /// The indeterminate itself.
  static IntPoly x();

  /// kZeroDegree for the zero polynomial.
  long degree() const noexcept;
  bool is_zero() const noexcept { return coefficients_.empty(); }
  Integer coefficient(std::size_t exponent) const;
  const std::vector<Integer>& coefficients() const noexcept {
    return coefficients_;
  }

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const Integer& scalar);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend IntPoly operator*(const Integer& s, IntPoly a) { return a *= s; }

  Integer evaluate(const Integer& at) const;
  /// p(x + c).
  IntPoly shifted(const Integer& c) const;
  IntPoly derivative() const;

  /// Canonical ascending text, e.g. "1 + 5*x + 4*x^2"; zero terms skipped.
  std::string to_string(char variable = 'x') const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize();

  std::vector<Integer> coefficients_;
};

/// Sparse polynomial in x and q.
class BiPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;

  BiPoly() = default;

  /// p(x + q + c) for a univariate p.
  static BiPoly compose_linear(const IntPoly& p, const Integer& c);

  void add_term(unsigned x_exp, unsigned q_exp, const Integer& c);
  Integer coefficient(unsigned x_exp, unsigned q_exp) const;
  const std::map<Exponents, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Substitutes a value for q, leaving a polynomial in x.
  IntPoly at_q(const Integer& q) const;
  /// Substitutes a value for x, leaving a polynomial in q.
  IntPoly at_x(const Integer& x) const;

  /// Ascending in (x, q) exponents, e.g. "1 + 5*q + 5*x + 4*q^2 + ...".
  std::string to_string() const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::map<Exponents, Integer> terms_;
};

/// numerator(t) / denominator(t), each a polynomial in t whose coefficients
/// are polynomials in x. Index i of each vector is the coefficient of t^i.
class RationalSeries {
 public:
  RationalSeries(std::vector<IntPoly> numerator,
                 std::vector<IntPoly> denominator);

  const std::vector<IntPoly>& numerator() const noexcept { return numerator_; }
  const std::vector<IntPoly>& denominator() const noexcept {
    return denominator_;
  }

 private:
  std::vector<IntPoly> numerator_;
  std::vector<IntPoly> denominator_;
};

/// Coefficients of t^0 ... t^order. The constant term of the denominator
/// must be the constant polynomial 1 or -1, otherwise InputError.
std::vector<IntPoly> expand_series(const RationalSeries& series,
                                   std::size_t order);

// Generating functions, all in t.
RationalSeries order_series(unsigned k);           // 1/(1-kt-t^2)
RationalSeries fib_series(unsigned k);             // t/(1-kt-t^2)
RationalSeries edge_series(unsigned k);            // ((k-1)t+t^2)/(1-kt-t^2)^2
RationalSeries weight_series(unsigned k);          // 1/(1-t-(k-1)xt-xt^2)
RationalSeries cube_series(unsigned k);            // 1/(1-kt-(k-1)xt-(1+x)t^2)
RationalSeries maximal_cube_series(unsigned k);    // 1/(1-(k-1)xt-xt^2)
RationalSeries cube_number_gf(unsigned k);         // 1/(1-(2k-1)t-2t^2)

/// How a polynomial is computed. All routes agree; they exist so the
/// agreement can be checked.
enum class Route {
  Recurrence,  // the linear recurrence in n
  Series,      // expansion of the generating function
  ClosedForm,  // explicit binomial sums
};

/// k-Fibonacci number: F_{0,k}=0, F_{1,k}=1, F_{n,k}=kF_{n-1,k}+F_{n-2,k}.
Integer fib_k(std::size_t n, unsigned k);

/// W_{M_{n,k}}(x): vertices counted by distance to 0^n.
IntPoly weight_poly(std::size_t n, unsigned k, Route route = Route::Recurrence);
/// C_{M_{n,k}}(x): induced hypercubes counted by dimension.
IntPoly cube_poly(std::size_t n, unsigned k, Route route = Route::Recurrence);
/// D_{M_{n,k}}(x, q) = W(x + q): cubes by dimension and bottom distance.
BiPoly distance_cube_poly(std::size_t n, unsigned k);
/// H_{M_{n,k}}(x): maximal induced hypercubes by dimension. k >= 2.
IntPoly maximal_cube_poly(std::size_t n, unsigned k,
                          Route route = Route::Recurrence);

/// q(M_{n,k}) = C(1).
Integer cube_number(std::size_t n, unsigned k);
/// q(M_{0,k}), ..., q(M_{order,k}) from the generating function.
std::vector<Integer> cube_number_series(unsigned k, std::size_t order);

/// W'(1), the sum of all vertex weights; equals |E(M_{n,k})|.
Integer total_weight(std::size_t n, unsigned k);

/// Both sides of the size generating-function decomposition, scaled by
/// k^2 + 4 and multiplied through by (1-kt-t^2)^2, as polynomials in t:
///   (k^2+4)((k-1)t + t^2)
///   == (k-2) t(1-kt-t^2) + (k-2)(t+t^3) + (k^2-k+2)(kt+2t^2).
struct SizeDecomposition {
  IntPoly lhs;
  IntPoly rhs;
  bool holds() const { return lhs == rhs; }
};
SizeDecomposition size_decomposition(unsigned k);

/// Data behind the argument that Pi_{n,k} (k >= 3, n >= 2) is not a daisy
/// cube: in a daisy cube the x-coefficient of W is the degree of the
/// 0-labelled vertex, which must be the maximum degree.
struct MaxDegreeWitness {
  std::size_t n = 0;
  unsigned k = 0;
  Integer weight_linear_coeff;          // [x^1] W_{M_{n,k}}
  std::size_t zero_vertex_degree = 0;   // measured deg(0^n) in M_{n,k}
  std::optional<std::size_t> pell_max_degree;  // measured Delta(Pi_{n,k})
  /// k >= 3, n >= 2 and the measured Delta(Pi_{n,k}) differs from the
  /// x-coefficient, so Pi_{n,k} cannot share W with M_{n,k} as a daisy cube.
  bool daisy_obstruction = false;
  /// For k >= 3: whether the measured Delta(Pi_{n,k}) equals 2n.
  std::optional<bool> pell_degree_is_2n;
};
MaxDegreeWitness max_degree_witness(std::size_t n, unsigned k);

}  // namespace munarini
