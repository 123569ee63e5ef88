#pragma once

#include <array>
#include <string>

#include "prr/geometry.hpp"
#include "prr/kinematics.hpp"

namespace prr {

/// Classification thresholds on scale-normalized quantities.
struct SingularityThresholds {
    double serial{1e-8};    // lower bound on |cos alpha_i|
    double parallel{1e-8};  // lower bound on |det A| normalized / link cross products
};

enum class SingularityKind {
    Regular,
    Serial,                // some link perpendicular to its rail: det B = 0
    ParallelIntersecting,  // the three link lines concurrent: det A = 0
    ParallelParallel,      // the three link lines parallel: det A = 0
};

struct SingularityReport {
    SingularityKind kind{SingularityKind::Regular};
    std::array<bool, 3> serial_legs{false, false, false};
    double det_a_normalized{0.0};
    double det_b_normalized{0.0};
    double min_cos_alpha{0.0};
};

std::string to_string(SingularityKind kind);

/// Kind string including the serial leg set, e.g. "serial{1;3}".
std::string kind_label(const SingularityReport& report);

/// Classifies a loop-closed configuration. Priority when conditions co-occur:
/// Serial, then ParallelParallel, then ParallelIntersecting (the combined
/// det A = det B = 0 case reports Serial; the determinant fields keep the
/// parallel evidence).
SingularityReport classify(const Configuration& config, const Geometry& geometry,
                           const SingularityThresholds& thresholds = {});

/// min(|det A| normalized, |det B| normalized): strictly positive exactly on
/// configurations that are Regular under zero thresholds.
double min_singular_margin(const Configuration& config, const Geometry& geometry);

}  // namespace prr
