#include "prr/geometry.hpp"

#include <cmath>
#include <string>

#include "prr/errors.hpp"

namespace prr {

namespace {
constexpr double kUnitTol = 1e-12;
constexpr double kParallelTol = 1e-12;
}  // namespace

const Geometry& validate(const Geometry& geometry) {
    for (int i = 0; i < 3; ++i) {
        const Rail& rail = geometry.rails[i];
        if (std::abs(norm(rail.direction) - 1.0) > kUnitTol)
            throw GeometryError(GeometryError::Code::NonUnitDirection,
                                "rail " + std::to_string(i + 1) + " direction is not a unit vector");
        if (!(rail.stroke > 0.0))
            throw GeometryError(GeometryError::Code::NonPositiveLength,
                                "rail " + std::to_string(i + 1) + " stroke must be > 0");
    }
    for (int i = 1; i < 3; ++i) {
        const Vec2 d0 = geometry.rails[0].direction;
        const Vec2 di = geometry.rails[i].direction;
        if (std::abs(cross(d0, di)) > kParallelTol || dot(d0, di) <= 0.0)
            throw GeometryError(GeometryError::Code::NonParallelRails,
                                "rail " + std::to_string(i + 1)
                                    + " direction differs from rail 1 direction");
    }
    for (int i = 0; i < 3; ++i) {
        if (!(geometry.link_lengths[i] > 0.0))
            throw GeometryError(GeometryError::Code::NonPositiveLength,
                                "link length " + std::to_string(i + 1) + " must be > 0");
        if (!(geometry.platform_offsets[i] > 0.0))
            throw GeometryError(GeometryError::Code::NonPositiveLength,
                                "platform offset " + std::to_string(i + 1) + " must be > 0");
    }
    if (!(geometry.platform_offsets[0] > geometry.platform_offsets[1]
          && geometry.platform_offsets[1] > geometry.platform_offsets[2]))
        throw GeometryError(GeometryError::Code::UnorderedPlatformOffsets,
                            "platform offsets must be strictly decreasing");
    return geometry;
}

std::array<Vec2, 3> platform_points(const Pose& pose, const Geometry& geometry) {
    const Vec2 g = pose.position();
    const Vec2 u = unit_vec(pose.theta);
    return {g - geometry.platform_offsets[0] * u,
            g - geometry.platform_offsets[1] * u,
            g - geometry.platform_offsets[2] * u};
}

Geometry with_stroke(const Geometry& geometry, double stroke) {
    Geometry out = geometry;
    for (Rail& rail : out.rails) rail.stroke = stroke;
    return out;
}

}  // namespace prr
