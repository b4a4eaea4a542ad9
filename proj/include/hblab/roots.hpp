// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "hblab/polynomial.hpp"

namespace hblab {

struct RootSet {
  /// All roots with multiplicity; count == degree of the input.
  std::vector<Complex> roots;
  /// max |p(root)| over the roots.
  double residual = 0.0;
};

/// All complex roots of p with multiplicity.
///
/// Aberth-Ehrlich simultaneous iteration, Newton polishing of isolated roots,
/// and replacement of tight clusters by their centroid when the centroid is
/// itself a root of the corresponding multiplicity. Throws InvalidArgument for
/// constant or zero p, NumericalError when the iteration fails to converge.
RootSet find_roots(const Polynomial& p);

}  // namespace hblab
