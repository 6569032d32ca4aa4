#pragma once

#include <complex>

namespace phq {

using Complex = std::complex<double>;

// Which quadrature the operation refers to: X is the position-like variable Q,
// Y the momentum-like variable P.
enum class Axis { X, Y };

inline const char* axis_name(Axis a) { return a == Axis::X ? "x" : "y"; }

} // namespace phq
