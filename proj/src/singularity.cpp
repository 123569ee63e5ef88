#include "prr/singularity.hpp"

#include <algorithm>
#include <cmath>

namespace prr {

std::string to_string(SingularityKind kind) {
    switch (kind) {
        case SingularityKind::Regular: return "regular";
        case SingularityKind::Serial: return "serial";
        case SingularityKind::ParallelIntersecting: return "parallel_intersecting";
        case SingularityKind::ParallelParallel: return "parallel_parallel";
    }
    return "unknown";
}

std::string kind_label(const SingularityReport& report) {
    std::string label = to_string(report.kind);
    if (report.kind == SingularityKind::Serial) {
        label += '{';
        bool first = true;
        for (int i = 0; i < 3; ++i) {
            if (!report.serial_legs[i]) continue;
            if (!first) label += ';';
            label += std::to_string(i + 1);
            first = false;
        }
        label += '}';
    }
    return label;
}

SingularityReport classify(const Configuration& config, const Geometry& geometry,
                           const SingularityThresholds& thresholds) {
    SingularityReport report;
    const JacobianPair jac = jacobians(config, geometry);
    report.det_a_normalized = det_a_normalized(jac, geometry);
    report.det_b_normalized = det_b_normalized(jac, geometry);

    bool any_serial = false;
    report.min_cos_alpha = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        const double cos_alpha = std::abs(jac.b_diag(i)) / geometry.link_lengths[i];
        report.min_cos_alpha = std::min(report.min_cos_alpha, cos_alpha);
        report.serial_legs[i] = cos_alpha <= thresholds.serial;
        any_serial |= report.serial_legs[i];
    }

    const std::array<Vec2, 3> link = {config.c[0] - config.b[0], config.c[1] - config.b[1],
                                      config.c[2] - config.b[2]};
    const auto& len = geometry.link_lengths;
    const double cross12 = std::abs(cross(link[0], link[1])) / (len[0] * len[1]);
    const double cross13 = std::abs(cross(link[0], link[2])) / (len[0] * len[2]);

    if (any_serial)
        report.kind = SingularityKind::Serial;
    else if (cross12 <= thresholds.parallel && cross13 <= thresholds.parallel)
        report.kind = SingularityKind::ParallelParallel;
    else if (std::abs(report.det_a_normalized) <= thresholds.parallel)
        report.kind = SingularityKind::ParallelIntersecting;
    else
        report.kind = SingularityKind::Regular;
    return report;
}

double min_singular_margin(const Configuration& config, const Geometry& geometry) {
    const JacobianPair jac = jacobians(config, geometry);
    return std::min(std::abs(det_a_normalized(jac, geometry)),
                    std::abs(det_b_normalized(jac, geometry)));
}

}  // namespace prr
