#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace uavdd {

/// Planar point / vector, coordinates in meters.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
    Point2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Point2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

inline double distance(const Point2& a, const Point2& b) { return (a - b).norm(); }

/// Two-leg flight path: leg 1 from the IoT cluster center to D (length L1),
/// leg 2 from D to S (length L2), meeting at D with junction angle theta.
/// r_hole is the exclusion radius around the IoT end (no TBS inside it).
struct PathGeometry {
    double l1 = 0.0;      // [m]
    double l2 = 0.0;      // [m]
    double theta = 0.0;   // [rad], angle at D between D->IoT and D->S
    double r_hole = 0.0;  // [m]

    void validate() const {
        if (!(l1 >= 0.0) || !(l2 >= 0.0)) throw std::invalid_argument("PathGeometry: negative leg length");
        if (!(theta >= 0.0 && theta <= M_PI)) throw std::invalid_argument("PathGeometry: theta outside [0, pi]");
        if (!(r_hole >= 0.0)) throw std::invalid_argument("PathGeometry: negative r_hole");
    }

    // Canonical frame: S at the origin, D on the +x axis.
    Point2 point_s() const { return {0.0, 0.0}; }
    Point2 point_d() const { return {l2, 0.0}; }
    Point2 point_iot() const { return {l2 - l1 * std::cos(theta), l1 * std::sin(theta)}; }
};

/// Distance from a disk's uniformly drawn point to an external reference:
/// disk of radius r_c centered R_center away from the reference point.
struct DiskOffsetLaw {
    double r_center = 0.0;  // [m]
    double r_c = 0.0;       // [m]

    void validate() const {
        if (!(r_center >= 0.0) || !(r_c >= 0.0)) throw std::invalid_argument("DiskOffsetLaw: negative radius");
    }
    double support_lo() const { return std::max(0.0, r_center - r_c); }
    double support_hi() const { return r_center + r_c; }
};

struct Segment {
    Point2 a;
    Point2 b;
};

inline double distance_to_segment(const Point2& p, const Segment& s) {
    const Point2 d = s.b - s.a;
    const double len2 = d.dot(d);
    if (len2 <= 0.0) return distance(p, s.a);
    double t = (p - s.a).dot(d) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, s.a + d * t);
}

inline double distance_to_polyline(const Point2& p, std::span<const Segment> segs) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : segs) best = std::min(best, distance_to_segment(p, s));
    return best;
}

/// Map p into the frame with origin A and x-axis along A->B.
inline Point2 to_local_frame(const Point2& a, const Point2& b, const Point2& p) {
    const Point2 d = b - a;
    const double len = d.norm();
    if (len <= 0.0) throw std::invalid_argument("to_local_frame: degenerate frame (A == B)");
    const double c = d.x / len, s = d.y / len;
    const Point2 q = p - a;
    return {c * q.x + s * q.y, -s * q.x + c * q.y};
}

/// Inverse of to_local_frame for the same (A, B).
inline Point2 from_local_frame(const Point2& a, const Point2& b, const Point2& p) {
    const Point2 d = b - a;
    const double len = d.norm();
    if (len <= 0.0) throw std::invalid_argument("from_local_frame: degenerate frame (A == B)");
    const double c = d.x / len, s = d.y / len;
    return {a.x + c * p.x - s * p.y, a.y + s * p.x + c * p.y};
}

struct Rect {
    double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    double area() const { return width() * height(); }
};

}  // namespace uavdd
