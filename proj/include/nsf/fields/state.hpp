#pragma once

#include <vector>

#include "nsf/core/types.hpp"
#include "nsf/fields/grid.hpp"

namespace nsf::fields {

// Cell-centered conserved fields on B: mass density, momentum, and internal
// energy density. Temperature is derived through the EOS, velocity through
// momentum with the prescribed field substituted in near-vacuum cells.
struct State {
  Scalar t = 0.0;
  std::vector<Scalar> rho;
  std::vector<Scalar> mom[2];
  std::vector<Scalar> rho_e;

  void resize(const Grid& g) {
    const size_t n = g.cells();
    rho.assign(n, 0.0);
    mom[0].assign(n, 0.0);
    mom[1].assign(n, 0.0);
    rho_e.assign(n, 0.0);
  }
};

}  // namespace nsf::fields
