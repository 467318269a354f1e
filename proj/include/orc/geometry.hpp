#pragma once

#include <algorithm>
#include <cmath>

namespace orc {

// Lengths are abstract pixels. kMaxLength is the "unbounded" sentinel for
// max sizes; anything at or above it is treated as +infinity.
inline constexpr double kMaxLength = 1e7;

struct Viewport {
    double width = 0;
    double height = 0;

    bool valid() const { return width > 0 && height > 0; }
};

struct Rect {
    double left = 0;
    double top = 0;
    double width = 0;
    double height = 0;

    double right() const { return left + width; }
    double bottom() const { return top + height; }

    bool contains(const Rect& inner, double tol) const {
        return inner.left >= left - tol && inner.top >= top - tol
            && inner.right() <= right() + tol && inner.bottom() <= bottom() + tol;
    }

    // Interior overlap; touching edges do not count.
    bool overlaps(const Rect& other, double tol) const {
        const double l = std::max(left, other.left);
        const double t = std::max(top, other.top);
        const double r = std::min(right(), other.right());
        const double b = std::min(bottom(), other.bottom());
        return r - l > tol && b - t > tol;
    }
};

inline bool nearly_equal(double a, double b, double tol = 1e-9) {
    return std::fabs(a - b) <= tol;
}

} // namespace orc
