#pragma once

#include <cstddef>
#include <string>

#include "lelong/foliation.hpp"
#include "lelong/lelong.hpp"

namespace lelong {

inline constexpr int kSvgCanvas = 800;
inline constexpr int kSvgMargin = 40;

// Flat torus [0, 2pi)^2 in (arg z, arg w); one <path> per loop u in [2 pi n, 2 pi (n + 1)].
std::string torus_svg(const Eigenvalue& lambda, cplx alpha, double r, int loops,
                      std::size_t samples_per_loop = 256);

// nu against log r, schedule order left to right (log r decreasing).
std::string schedule_svg(const LelongEstimate& est);

}  // namespace lelong
