#include "prr/kinematics.hpp"

#include <algorithm>
#include <cmath>

#include "prr/errors.hpp"

namespace prr {

LegRoots leg_roots(Vec2 platform_joint, const Rail& rail, double link_length) {
    LegRoots roots;
    const Vec2 v = platform_joint - rail.anchor;
    roots.s = dot(v, rail.direction);
    roots.off_rail = dot(v, perp(rail.direction));
    const double disc = link_length * link_length - roots.off_rail * roots.off_rail;
    if (disc < 0.0) return roots;
    roots.real = true;
    roots.half_chord = std::sqrt(disc);
    return roots;
}

bool leg_reachable_strict(Vec2 platform_joint, const Rail& rail, double link_length) {
    const LegRoots roots = leg_roots(platform_joint, rail, link_length);
    if (!roots.real) return false;
    const double lo = roots.rho(-1);
    const double hi = roots.rho(+1);
    return (lo >= 0.0 && lo <= rail.stroke) || (hi >= 0.0 && hi <= rail.stroke);
}

bool pose_reachable_strict(const Pose& pose, const Geometry& geometry) {
    const std::array<Vec2, 3> c = platform_points(pose, geometry);
    for (int i = 0; i < 3; ++i)
        if (!leg_reachable_strict(c[i], geometry.rails[i], geometry.link_lengths[i])) return false;
    return true;
}

Configuration inverse_kinematics(const Pose& pose, const Geometry& geometry,
                                 const BranchSelector& branch, bool strict_stroke) {
    Configuration config;
    config.pose = pose;
    config.branch = branch;
    config.c = platform_points(pose, geometry);
    for (int i = 0; i < 3; ++i) {
        const Rail& rail = geometry.rails[i];
        const LegRoots roots = leg_roots(config.c[i], rail, geometry.link_lengths[i]);
        if (!roots.real)
            throw UnreachableError(i + 1,
                                   std::abs(roots.off_rail) - geometry.link_lengths[i]);
        const double rho = roots.rho(branch.elbow[i]);
        if (strict_stroke && (rho < 0.0 || rho > rail.stroke)) {
            const double margin = std::max(-rho, rho - rail.stroke);
            throw StrokeViolationError(i + 1, rho, rail.stroke, margin);
        }
        config.joints[i] = rho;
        config.b[i] = rail.anchor + rho * rail.direction;
        const Vec2 link = config.c[i] - config.b[i];
        config.alpha[i] = std::atan2(dot(link, perp(rail.direction)), dot(link, rail.direction));
    }
    return config;
}

Configuration make_configuration(const Pose& pose, const JointVector& joints,
                                 const Geometry& geometry) {
    Configuration config;
    config.pose = pose;
    config.joints = joints;
    config.c = platform_points(pose, geometry);
    for (int i = 0; i < 3; ++i) {
        const Rail& rail = geometry.rails[i];
        config.b[i] = rail.anchor + joints[i] * rail.direction;
        const Vec2 link = config.c[i] - config.b[i];
        config.alpha[i] = std::atan2(dot(link, perp(rail.direction)), dot(link, rail.direction));
        const double s = dot(config.c[i] - rail.anchor, rail.direction);
        config.branch.elbow[i] = joints[i] >= s ? +1 : -1;
    }
    return config;
}

namespace {

std::array<double, 3> loop_residuals(const Pose& pose, const std::array<Vec2, 3>& b,
                                     const Geometry& geometry) {
    const std::array<Vec2, 3> c = platform_points(pose, geometry);
    std::array<double, 3> r;
    for (int i = 0; i < 3; ++i)
        r[i] = norm_sq(c[i] - b[i]) - geometry.link_lengths[i] * geometry.link_lengths[i];
    return r;
}

double max_abs(const std::array<double, 3>& r) {
    return std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2])});
}

}  // namespace

Pose forward_kinematics(const JointVector& joints, const Geometry& geometry, const Pose& seed,
                        const FkOptions& options) {
    std::array<Vec2, 3> b;
    for (int i = 0; i < 3; ++i)
        b[i] = geometry.rails[i].anchor + joints[i] * geometry.rails[i].direction;

    Pose pose = seed;
    std::array<double, 3> r = loop_residuals(pose, b, geometry);
    double r_norm = max_abs(r);

    for (int iter = 0; iter < options.max_iter; ++iter) {
        if (r_norm <= options.tol) return pose;

        // d r_i / d pose = 2 * [(c_i-b_i)^T, (c_i-b_i)^T perp(c_i-g)].
        const Vec2 g = pose.position();
        const std::array<Vec2, 3> c = platform_points(pose, geometry);
        Mat3 jac;
        for (int i = 0; i < 3; ++i) {
            const Vec2 link = c[i] - b[i];
            jac(i, 0) = 2.0 * link.x;
            jac(i, 1) = 2.0 * link.y;
            jac(i, 2) = 2.0 * dot(link, perp(c[i] - g));
        }
        const double cond = cond1_estimate(jac);
        if (!(cond < options.cond_limit)) throw SingularIterationError(cond);

        std::array<double, 3> step;
        if (!solve3(jac, r, step)) throw SingularIterationError(cond);

        double lambda = 1.0;
        bool accepted = false;
        for (int halving = 0; halving < 40; ++halving) {
            const Pose candidate(pose.x - lambda * step[0], pose.y - lambda * step[1],
                                 pose.theta - lambda * step[2]);
            const std::array<double, 3> r_cand = loop_residuals(candidate, b, geometry);
            const double cand_norm = max_abs(r_cand);
            if (cand_norm < r_norm) {
                pose = candidate;
                r = r_cand;
                r_norm = cand_norm;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!accepted) throw NoConvergenceError(iter + 1, r_norm);
    }
    if (r_norm <= options.tol) return pose;
    throw NoConvergenceError(options.max_iter, r_norm);
}

JacobianPair jacobians(const Configuration& config, const Geometry& geometry) {
    JacobianPair out;
    const Vec2 g = config.pose.position();
    for (int i = 0; i < 3; ++i) {
        const Vec2 link = config.c[i] - config.b[i];
        out.A(i, 0) = link.x;
        out.A(i, 1) = link.y;
        out.A(i, 2) = dot(link, perp(config.c[i] - g));
        out.B(i, i) = dot(link, geometry.rails[i].direction);
    }
    out.det_a = out.A.det();
    out.det_b = out.B(0, 0) * out.B(1, 1) * out.B(2, 2);
    return out;
}

double det_a_normalized(const JacobianPair& jac, const Geometry& geometry) {
    const double scale = geometry.link_lengths[0] * geometry.link_lengths[1]
                       * geometry.link_lengths[2] * geometry.max_platform_offset();
    return jac.det_a / scale;
}

double det_b_normalized(const JacobianPair& jac, const Geometry& geometry) {
    const double scale =
        geometry.link_lengths[0] * geometry.link_lengths[1] * geometry.link_lengths[2];
    return jac.det_b / scale;
}

JointRates twist_to_joint_rates(const Configuration& config, const Geometry& geometry,
                                const Twist& twist, double eps_serial) {
    const JacobianPair jac = jacobians(config, geometry);
    const std::array<double, 3> lhs = jac.A * std::array<double, 3>{twist.vx, twist.vy, twist.omega};
    JointRates rates;
    for (int i = 0; i < 3; ++i) {
        const double cos_alpha = jac.b_diag(i) / geometry.link_lengths[i];
        if (std::abs(cos_alpha) <= eps_serial) throw SerialSingularityError(i + 1, cos_alpha);
        rates[i] = lhs[i] / jac.b_diag(i);
    }
    return rates;
}

Twist joint_rates_to_twist(const Configuration& config, const Geometry& geometry,
                           const JointRates& rates, double eps_parallel) {
    const JacobianPair jac = jacobians(config, geometry);
    const double det_norm = det_a_normalized(jac, geometry);
    if (std::abs(det_norm) <= eps_parallel) throw ParallelSingularityError(det_norm);
    const std::array<double, 3> rhs = jac.B * rates;
    std::array<double, 3> twist;
    if (!solve3(jac.A, rhs, twist)) throw ParallelSingularityError(det_norm);
    return {twist[0], twist[1], twist[2]};
}

}  // namespace prr
