#pragma once

#include <vector>

#include "nsf/core/types.hpp"
#include "nsf/fields/grid.hpp"

namespace nsf::fields {

// Ghost-cell convention at the box boundary: mirror extends the field evenly
// (homogeneous Neumann, used for scalars), negate extends it oddly (value
// zero on the wall, used for no-slip velocity components).
enum class Ghost { mirror, negate };

// Centered second-order d f / d x_axis.
void derivative(const std::vector<Scalar>& f, const Grid& g, int axis, Ghost ghost,
                std::vector<Scalar>& out);

// Gradient of a scalar field; out[a] receives d f / d x_a.
void gradient(const std::vector<Scalar>& f, const Grid& g, Ghost ghost,
              std::vector<Scalar> out[2]);

// Divergence of a vector field given per-axis components.
void divergence(const std::vector<Scalar> comp[2], const Grid& g, Ghost ghost,
                std::vector<Scalar>& out);

}  // namespace nsf::fields
