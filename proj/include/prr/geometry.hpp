#pragma once

#include <array>

#include "prr/pose.hpp"
#include "prr/vec2.hpp"

namespace prr {

/// One prismatic actuator: slider positions are anchor + rho * direction
/// with rho in [0, stroke].
struct Rail {
    Vec2 anchor;
    Vec2 direction{1.0, 0.0};
    double stroke{0.0};
};

/// Fixed mechanism description. Leg i runs slider B_i on rails[i], carries a
/// link of length link_lengths[i] to the platform joint C_i, which sits
/// platform_offsets[i] before the gripper G on the platform line
/// (offsets strictly decreasing, so the joints are ordered C_1, C_2, C_3, G).
/// All rail directions must be the same unit vector; the planar model keeps
/// one travel axis even though the physical sliders stack in parallel planes.
struct Geometry {
    std::array<Rail, 3> rails;
    std::array<double, 3> link_lengths;
    std::array<double, 3> platform_offsets;

    Vec2 rail_direction() const { return rails[0].direction; }
    double rail_angle() const { return angle_of(rails[0].direction); }
    double max_platform_offset() const { return platform_offsets[0]; }
};

/// Checks every geometry invariant and returns the input unchanged.
/// Throws GeometryError naming the first violated invariant.
const Geometry& validate(const Geometry& geometry);

/// Platform joints for a pose: c_i = g - platform_offsets[i] * u(theta_G).
std::array<Vec2, 3> platform_points(const Pose& pose, const Geometry& geometry);

/// Copy of the geometry with every rail stroke set to `stroke`.
Geometry with_stroke(const Geometry& geometry, double stroke);

}  // namespace prr
