#pragma once

// Finite truncations of cochain complexes given by a differential on basis
// cochains, and their cohomology dimensions by rank-nullity.

#include <cstddef>
#include <functional>
#include <vector>

#include "wrb/exactnum.hpp"

namespace wrb {

struct CochainComplexReport {
  std::size_t max_degree = 0;
  /// dim C^n for n = 0..max_degree+1
  std::vector<std::size_t> cochain_dims;
  /// d^n : C^n -> C^{n+1} for n = 0..max_degree
  std::vector<Matrix> differentials;
  std::vector<std::size_t> ranks;
  /// dim H^n = dim ker d^n - rank d^{n-1}, n = 0..max_degree
  std::vector<std::size_t> h_dims;
  /// d^{n+1} d^n = 0 for every consecutive pair
  bool composes_to_zero = true;
};

/// Image of the basis cochain `index` of degree `degree`, as a coefficient
/// vector of length dim C^{degree+1}.
using BasisDifferential = std::function<Vec(std::size_t degree, std::size_t index)>;

/// Matrix whose column c is column(c); columns are computed independently.
Matrix assemble_matrix(std::size_t rows, std::size_t cols,
                       const std::function<Vec(std::size_t)>& column, Exec exec = Exec::parallel);

CochainComplexReport build_complex(std::size_t max_degree,
                                   const std::function<std::size_t(std::size_t)>& cochain_dim,
                                   const BasisDifferential& differential, Exec exec = Exec::parallel);

}  // namespace wrb
