#pragma once

#include <cmath>
#include <numbers>

namespace rislink {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace rislink
