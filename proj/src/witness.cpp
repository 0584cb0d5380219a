#include "munarini/polynomials.hpp"

#include "munarini/error.hpp"
#include "munarini/graphs.hpp"

namespace munarini {

MaxDegreeWitness max_degree_witness(std::size_t n, unsigned k) {
  if (k == 0) throw UnsupportedParameter("k must be at least 1");
  MaxDegreeWitness w;
  w.n = n;
  w.k = k;
  w.weight_linear_coeff = weight_poly(n, k).coefficient(1);

  const auto m = build_munarini(n, k);
  const PellString zero(std::vector<Symbol>(n, 0), k);
  w.zero_vertex_degree = m.degree(m.index_of(zero));

  if (k >= 2) {
    w.pell_max_degree = build_generalized_pell(n, k).max_degree();
  }
  if (k >= 3) {
    w.pell_degree_is_2n = *w.pell_max_degree == 2 * n;
    w.daisy_obstruction =
        n >= 2 && Integer(*w.pell_max_degree) != w.weight_linear_coeff;
  }
  return w;
}

}  // namespace munarini
