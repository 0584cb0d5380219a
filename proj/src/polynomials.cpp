#include "munarini/polynomials.hpp"

#include <algorithm>

#include "munarini/error.hpp"

namespace munarini {

namespace {

void require_k(unsigned k) {
  if (k == 0) throw UnsupportedParameter("arity k must be at least 1");
}

std::string term_text(const Integer& magnitude, const std::string& monomial) {
  if (monomial.empty()) return magnitude.str();
  return magnitude.str() + "*" + monomial;
}

// Appends "c*m" to `out`, folding the sign into the separator.
void append_term(std::string& out, const Integer& c,
                 const std::string& monomial) {
  if (c == 0) return;
  if (out.empty()) {
    out = (c < 0 ? "-" : "") + term_text(abs(c), monomial);
  } else {
    out += (c < 0 ? " - " : " + ") + term_text(abs(c), monomial);
  }
}

std::string power_text(char variable, std::size_t e) {
  if (e == 0) return {};
  if (e == 1) return std::string(1, variable);
  return std::string(1, variable) + "^" + std::to_string(e);
}

IntPoly c(long long value) { return IntPoly::constant(Integer(value)); }

// a + b*x
IntPoly linear(const Integer& a, const Integer& b) {
  return IntPoly(std::vector<Integer>{a, b});
}

IntPoly nth(const RationalSeries& series, std::size_t n) {
  return expand_series(series, n)[n];
}

}  // namespace

// ---------------------------------------------------------------------------
// IntPoly
// ---------------------------------------------------------------------------

IntPoly::IntPoly(std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

IntPoly IntPoly::constant(Integer c) {
  return IntPoly(std::vector<Integer>{std::move(c)});
}

IntPoly IntPoly::monomial(Integer c, std::size_t exponent) {
  std::vector<Integer> coefficients(exponent + 1);
  coefficients[exponent] = std::move(c);
  return IntPoly(std::move(coefficients));
}

IntPoly IntPoly::x() { return monomial(1, 1); }

void IntPoly::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

long IntPoly::degree() const noexcept {
  return is_zero() ? kZeroDegree : static_cast<long>(coefficients_.size()) - 1;
}

Integer IntPoly::coefficient(std::size_t exponent) const {
  return exponent < coefficients_.size() ? coefficients_[exponent]
                                         : Integer(0);
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] += other.coefficients_[i];
  }
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] -= other.coefficients_[i];
  }
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  *this = *this * other;
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& scalar) {
  for (auto& coefficient : coefficients_) coefficient *= scalar;
  normalize();
  return *this;
}

Integer IntPoly::evaluate(const Integer& at) const {
  Integer acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

IntPoly IntPoly::shifted(const Integer& c) const {
  // Horner in polynomial arithmetic: p(x+c) = (...(a_d (x+c) + a_{d-1})...).
  const IntPoly step = linear(c, 1);
  IntPoly acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * step + constant(*it);
  }
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<Integer> out(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    out[i - 1] = coefficients_[i] * static_cast<unsigned long long>(i);
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string(char variable) const {
  std::string out;
  for (std::size_t e = 0; e < coefficients_.size(); ++e) {
    append_term(out, coefficients_[e], power_text(variable, e));
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// BiPoly
// ---------------------------------------------------------------------------

void BiPoly::add_term(unsigned x_exp, unsigned q_exp, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({x_exp, q_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer BiPoly::coefficient(unsigned x_exp, unsigned q_exp) const {
  auto it = terms_.find({x_exp, q_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

BiPoly BiPoly::compose_linear(const IntPoly& p, const Integer& c) {
  // (x + q + c)^d = sum_{i+j+l=d} d!/(i!j!l!) x^i q^j c^l
  BiPoly out;
  const auto& coefficients = p.coefficients();
  for (std::size_t d = 0; d < coefficients.size(); ++d) {
    if (coefficients[d] == 0) continue;
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = 0; i + j <= d; ++j) {
        const std::size_t l = d - i - j;
        Integer multinomial = binomial(static_cast<long long>(d),
                                       static_cast<long long>(i)) *
                              binomial(static_cast<long long>(d - i),
                                       static_cast<long long>(j));
        out.add_term(static_cast<unsigned>(i), static_cast<unsigned>(j),
                     coefficients[d] * multinomial *
                         ipow(c, static_cast<unsigned>(l)));
      }
    }
  }
  return out;
}

IntPoly BiPoly::at_q(const Integer& q) const {
  IntPoly out;
  for (const auto& [exps, c] : terms_) {
    out += IntPoly::monomial(c * ipow(q, exps.second), exps.first);
  }
  return out;
}

IntPoly BiPoly::at_x(const Integer& x) const {
  IntPoly out;
  for (const auto& [exps, c] : terms_) {
    out += IntPoly::monomial(c * ipow(x, exps.first), exps.second);
  }
  return out;
}

std::string BiPoly::to_string() const {
  std::string out;
  for (const auto& [exps, c] : terms_) {
    std::string monomial = power_text('x', exps.first);
    const std::string q_part = power_text('q', exps.second);
    if (!q_part.empty()) {
      monomial = monomial.empty() ? q_part : monomial + "*" + q_part;
    }
    append_term(out, c, monomial);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Rational series
// ---------------------------------------------------------------------------

RationalSeries::RationalSeries(std::vector<IntPoly> numerator,
                               std::vector<IntPoly> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.empty()) {
    throw InputError("series denominator is empty");
  }
}

std::vector<IntPoly> expand_series(const RationalSeries& series,
                                   std::size_t order) {
  const auto& num = series.numerator();
  const auto& den = series.denominator();
  const IntPoly& lead = den.front();
  Integer unit;
  if (lead == c(1)) {
    unit = 1;
  } else if (lead == c(-1)) {
    unit = -1;
  } else {
    throw InputError("series denominator constant term " + lead.to_string() +
                     " is not a unit");
  }
  // num = den * out  (mod t^{order+1}), solved one coefficient at a time.
  std::vector<IntPoly> out;
  out.reserve(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    IntPoly acc = m < num.size() ? num[m] : IntPoly();
    for (std::size_t j = 1; j < den.size() && j <= m; ++j) {
      acc -= den[j] * out[m - j];
    }
    out.push_back(acc * unit);
  }
  return out;
}

RationalSeries order_series(unsigned k) {
  require_k(k);
  return RationalSeries({c(1)}, {c(1), c(-static_cast<long long>(k)), c(-1)});
}

RationalSeries fib_series(unsigned k) {
  require_k(k);
  return RationalSeries({c(0), c(1)},
                        {c(1), c(-static_cast<long long>(k)), c(-1)});
}

RationalSeries edge_series(unsigned k) {
  require_k(k);
  const IntPoly base({1, -static_cast<long long>(k), -1});
  const IntPoly squared = base * base;
  std::vector<IntPoly> den;
  for (const auto& coefficient : squared.coefficients()) {
    den.push_back(IntPoly::constant(coefficient));
  }
  return RationalSeries({c(0), c(static_cast<long long>(k) - 1), c(1)},
                        std::move(den));
}

RationalSeries weight_series(unsigned k) {
  require_k(k);
  // 1 - (1 + (k-1)x) t - x t^2
  return RationalSeries(
      {c(1)}, {c(1), linear(-1, -(Integer(k) - 1)), linear(0, -1)});
}

RationalSeries cube_series(unsigned k) {
  require_k(k);
  // 1 - (k + (k-1)x) t - (1 + x) t^2
  return RationalSeries({c(1)}, {c(1), linear(-Integer(k), -(Integer(k) - 1)),
                                 linear(-1, -1)});
}

RationalSeries maximal_cube_series(unsigned k) {
  require_k(k);
  // 1 - (k-1)x t - x t^2
  return RationalSeries(
      {c(1)}, {c(1), linear(0, -(Integer(k) - 1)), linear(0, -1)});
}

RationalSeries cube_number_gf(unsigned k) {
  require_k(k);
  return RationalSeries(
      {c(1)}, {c(1), c(-(2 * static_cast<long long>(k) - 1)), c(-2)});
}

// ---------------------------------------------------------------------------
// Named polynomials
// ---------------------------------------------------------------------------

Integer fib_k(std::size_t n, unsigned k) {
  require_k(k);
  Integer previous = 0;
  Integer current = 1;
  if (n == 0) return previous;
  for (std::size_t i = 2; i <= n; ++i) {
    Integer next = k * current + previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

IntPoly weight_poly(std::size_t n, unsigned k, Route route) {
  require_k(k);
  const Integer km1 = Integer(k) - 1;
  switch (route) {
    case Route::Series:
      return nth(weight_series(k), n);
    case Route::ClosedForm: {
      std::vector<Integer> coefficients(n + 1);
      for (std::size_t d = 0; d <= n; ++d) {
        for (std::size_t j = 0; j <= d; ++j) {
          coefficients[d] +=
              binomial(static_cast<long long>(d), static_cast<long long>(j)) *
              binomial(static_cast<long long>(n - j),
                       static_cast<long long>(d)) *
              ipow(km1, static_cast<unsigned>(d - j));
        }
      }
      return IntPoly(std::move(coefficients));
    }
    case Route::Recurrence:
      break;
  }
  // W_n = (1 + (k-1)x) W_{n-1} + x W_{n-2}, W_0 = 1, W_1 = 1 + (k-1)x.
  IntPoly previous = c(1);
  if (n == 0) return previous;
  IntPoly current = linear(1, km1);
  const IntPoly step = linear(1, km1);
  for (std::size_t i = 2; i <= n; ++i) {
    IntPoly next = step * current + IntPoly::x() * previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

IntPoly cube_poly(std::size_t n, unsigned k, Route route) {
  require_k(k);
  const Integer km1 = Integer(k) - 1;
  switch (route) {
    case Route::Series:
      return nth(cube_series(k), n);
    case Route::ClosedForm: {
      std::vector<Integer> coefficients(n + 1);
      for (std::size_t p = 0; p <= n; ++p) {
        for (std::size_t d = p; d <= n; ++d) {
          for (std::size_t j = 0; j <= d; ++j) {
            coefficients[p] +=
                binomial(static_cast<long long>(d), static_cast<long long>(p)) *
                binomial(static_cast<long long>(d), static_cast<long long>(j)) *
                binomial(static_cast<long long>(n - j),
                         static_cast<long long>(d)) *
                ipow(km1, static_cast<unsigned>(d - j));
          }
        }
      }
      return IntPoly(std::move(coefficients));
    }
    case Route::Recurrence:
      break;
  }
  // C_n = (k + (k-1)x) C_{n-1} + (1 + x) C_{n-2}, C_0 = 1, C_1 = k + (k-1)x.
  IntPoly previous = c(1);
  if (n == 0) return previous;
  const IntPoly step = linear(k, km1);
  IntPoly current = step;
  for (std::size_t i = 2; i <= n; ++i) {
    IntPoly next = step * current + linear(1, 1) * previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

BiPoly distance_cube_poly(std::size_t n, unsigned k) {
  return BiPoly::compose_linear(weight_poly(n, k), 0);
}

IntPoly maximal_cube_poly(std::size_t n, unsigned k, Route route) {
  require_k(k);
  if (k < 2) {
    throw UnsupportedParameter(
        "maximal cube polynomial of M_{n,1} follows a different rule; "
        "only k >= 2 is supported");
  }
  const Integer km1 = Integer(k) - 1;
  switch (route) {
    case Route::Series:
      return nth(maximal_cube_series(k), n);
    case Route::ClosedForm: {
      std::vector<Integer> coefficients(n + 1);
      for (std::size_t p = (n + 1) / 2; p <= n; ++p) {
        coefficients[p] =
            ipow(km1, static_cast<unsigned>(2 * p - n)) *
            binomial(static_cast<long long>(p), static_cast<long long>(n - p));
      }
      return IntPoly(std::move(coefficients));
    }
    case Route::Recurrence:
      break;
  }
  // H_n = (k-1)x H_{n-1} + x H_{n-2}, H_0 = 1, H_1 = (k-1)x.
  IntPoly previous = c(1);
  if (n == 0) return previous;
  const IntPoly step = IntPoly::monomial(km1, 1);
  IntPoly current = step;
  for (std::size_t i = 2; i <= n; ++i) {
    IntPoly next = step * current + IntPoly::x() * previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

Integer cube_number(std::size_t n, unsigned k) {
  return cube_poly(n, k).evaluate(1);
}

std::vector<Integer> cube_number_series(unsigned k, std::size_t order) {
  std::vector<Integer> out;
  for (const auto& term : expand_series(cube_number_gf(k), order)) {
    out.push_back(term.coefficient(0));
  }
  return out;
}

Integer total_weight(std::size_t n, unsigned k) {
  return weight_poly(n, k).derivative().evaluate(1);
}

SizeDecomposition size_decomposition(unsigned k) {
  require_k(k);
  const Integer kk(k);
  const IntPoly t = IntPoly::x();
  const IntPoly base({1, -static_cast<long long>(k), -1});  // 1 - kt - t^2
  const IntPoly f_num = t * base;                // t/(base) over base^2
  const IntPoly g_num({0, 1, 0, 1});             // t + t^3
  const IntPoly h_num = linear(0, kk) + IntPoly::monomial(2, 2);  // kt + 2t^2
  SizeDecomposition out;
  out.lhs = (kk * kk + 4) * (linear(0, kk - 1) + IntPoly::monomial(1, 2));
  out.rhs = (kk - 2) * f_num + (kk - 2) * g_num + (kk * kk - kk + 2) * h_num;
  return out;
}

}  // namespace munarini
