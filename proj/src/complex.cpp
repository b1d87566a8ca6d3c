#include "wrb/complex.hpp"

#include "wrb/error.hpp"

namespace wrb {

Matrix assemble_matrix(std::size_t rows, std::size_t cols,
                       const std::function<Vec(std::size_t)>& column, Exec exec) {
  Matrix m(rows, cols);
  for_each_index(cols, exec, [&](std::size_t c) {
    const Vec v = column(c);
    if (v.size() != rows) throw DimensionError("assemble_matrix: column length mismatch");
    m.set_column(c, v);
  });
  return m;
}

CochainComplexReport build_complex(std::size_t max_degree,
                                   const std::function<std::size_t(std::size_t)>& cochain_dim,
                                   const BasisDifferential& differential, Exec exec) {
  CochainComplexReport rep;
  rep.max_degree = max_degree;
  for (std::size_t n = 0; n <= max_degree + 1; ++n) rep.cochain_dims.push_back(cochain_dim(n));
  for (std::size_t n = 0; n <= max_degree; ++n) {
    rep.differentials.push_back(assemble_matrix(
        rep.cochain_dims[n + 1], rep.cochain_dims[n],
        [&](std::size_t c) { return differential(n, c); }, exec));
    rep.ranks.push_back(rank(rep.differentials.back(), exec));
  }
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const std::size_t kernel = rep.cochain_dims[n] - rep.ranks[n];
    const std::size_t image = n == 0 ? 0 : rep.ranks[n - 1];
    if (image > kernel) {
      // only possible when the maps do not form a complex
      rep.composes_to_zero = false;
      rep.h_dims.push_back(0);
      continue;
    }
    rep.h_dims.push_back(kernel - image);
  }
  for (std::size_t n = 0; n + 1 <= max_degree; ++n) {
    if (!(rep.differentials[n + 1] * rep.differentials[n]).is_zero()) rep.composes_to_zero = false;
  }
  return rep;
}

}  // namespace wrb
