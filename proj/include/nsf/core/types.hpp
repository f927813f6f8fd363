#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsf {

using Scalar = double;
using Index = std::ptrdiff_t;

// Small fixed-size vector for spatial quantities (d <= 2 in acceptance scope,
// kept at 3 slots so 3D expressions in tests stay cheap).
struct Vec {
  std::array<Scalar, 3> v{0.0, 0.0, 0.0};

  Scalar& operator[](int i) { return v[static_cast<size_t>(i)]; }
  Scalar operator[](int i) const { return v[static_cast<size_t>(i)]; }

  Vec operator+(const Vec& o) const { return {{v[0] + o.v[0], v[1] + o.v[1], v[2] + o.v[2]}}; }
  Vec operator-(const Vec& o) const { return {{v[0] - o.v[0], v[1] - o.v[1], v[2] - o.v[2]}}; }
  Vec operator*(Scalar c) const { return {{c * v[0], c * v[1], c * v[2]}}; }
  Scalar dot(const Vec& o) const { return v[0] * o.v[0] + v[1] * o.v[1] + v[2] * o.v[2]; }
};

inline Vec operator*(Scalar c, const Vec& a) { return a * c; }

// Row-major d x d tensor (d <= 3), used for velocity gradients and stresses.
struct Mat {
  std::array<Scalar, 9> m{};
  Scalar& operator()(int i, int j) { return m[static_cast<size_t>(3 * i + j)]; }
  Scalar operator()(int i, int j) const { return m[static_cast<size_t>(3 * i + j)]; }

  Scalar trace(int d) const {
    Scalar t = 0.0;
    for (int i = 0; i < d; ++i) t += (*this)(i, i);
    return t;
  }
};

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

}  // namespace nsf
