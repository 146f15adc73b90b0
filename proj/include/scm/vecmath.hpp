#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace scm {

/// Dense real vector used for all derived quantities (means, axes).
using Vector = std::vector<double>;

namespace vecmath {

inline double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

inline void add_in_place(Vector& acc, std::span<const double> v) {
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

inline void scale_in_place(Vector& v, double s) {
    for (double& x : v) x *= s;
}

/// 1 - cos(a, b). Callers must handle zero-norm operands themselves.
inline double cosine_distance(std::span<const double> a, std::span<const double> b) {
    return 1.0 - dot(a, b) / (norm(a) * norm(b));
}

}  // namespace vecmath
}  // namespace scm
