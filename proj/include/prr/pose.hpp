#pragma once

#include "prr/vec2.hpp"

namespace prr {

/// End-effector pose (x_G, y_G, theta_G). The orientation is kept wrapped to
/// (-pi, pi]; construct through the constructor after any arithmetic update.
struct Pose {
    double x{0.0};
    double y{0.0};
    double theta{0.0};

    Pose() = default;
    Pose(double x_, double y_, double theta_) : x(x_), y(y_), theta(wrap_angle(theta_)) {}

    Vec2 position() const { return {x, y}; }
};

/// Planar twist (x_G_dot, y_G_dot, theta_G_dot).
struct Twist {
    double vx{0.0};
    double vy{0.0};
    double omega{0.0};
};

}  // namespace prr
