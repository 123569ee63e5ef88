#pragma once

#include <array>

#include "prr/geometry.hpp"
#include "prr/mat3.hpp"
#include "prr/pose.hpp"

namespace prr {

/// Slider extensions (rho_1, rho_2, rho_3).
using JointVector = std::array<double, 3>;

/// Actuated joint rates (rho_dot_1..3).
using JointRates = std::array<double, 3>;

/// Which of the two slider positions closes each leg's loop:
/// rho = s + elbow * sqrt(L_ii^2 - e^2) with s, e the along- and off-rail
/// coordinates of the platform joint relative to the rail anchor.
struct BranchSelector {
    std::array<int, 3> elbow{+1, +1, +1};

    static BranchSelector all(int sign) { return {{sign, sign, sign}}; }

    /// Enumerates the 8 selectors in a fixed order (index bit i -> leg i).
    static BranchSelector from_index(int idx) {
        return {{(idx & 1) ? +1 : -1, (idx & 2) ? +1 : -1, (idx & 4) ? +1 : -1}};
    }
};

/// Assembled state of the mechanism. alpha[i] is the angle of the link
/// vector c_i - b_i measured from the rail direction, so
/// c_i - b_i = L_ii * (cos(alpha_i) * d + sin(alpha_i) * perp(d)).
struct Configuration {
    Pose pose;
    JointVector joints{};
    std::array<Vec2, 3> b{};
    std::array<Vec2, 3> c{};
    std::array<double, 3> alpha{};
    BranchSelector branch;
};

/// Direct-kinematics matrix A and diagonal inverse-kinematics matrix B of
/// A * p_dot = B * q_dot. Row i of A is [(c_i-b_i)^T, (c_i-b_i)^T perp(c_i-g)];
/// B_ii = (c_i-b_i)^T d = L_ii cos(alpha_i).
struct JacobianPair {
    Mat3 A;
    Mat3 B;
    double det_a{0.0};
    double det_b{0.0};

    double b_diag(int i) const { return B(i, i); }
};

/// Per-leg closed-form slider solutions for a platform joint position.
/// When real, the two admissible along-rail coordinates are rho_lo <= rho_hi.
struct LegRoots {
    bool real{false};
    double s{0.0};        // along-rail coordinate of the platform joint
    double off_rail{0.0}; // signed off-rail coordinate e
    double half_chord{0.0};

    double rho(int elbow) const { return s + elbow * half_chord; }
};

LegRoots leg_roots(Vec2 platform_joint, const Rail& rail, double link_length);

/// True when the leg closes with some slider position inside [0, stroke].
bool leg_reachable_strict(Vec2 platform_joint, const Rail& rail, double link_length);

/// True when every leg closes inside its stroke for some elbow choice
/// (equivalent to trying all 8 branch selectors; legs are independent).
bool pose_reachable_strict(const Pose& pose, const Geometry& geometry);

/// Closed-form inverse kinematics. Throws UnreachableError when a leg cannot
/// close, StrokeViolationError in strict mode when the selected root leaves
/// [0, stroke].
Configuration inverse_kinematics(const Pose& pose, const Geometry& geometry,
                                 const BranchSelector& branch, bool strict_stroke = false);

/// Rebuilds the derived quantities (b, c, alpha, branch) from a pose and
/// joint vector. Does not verify loop closure; callers that pass inconsistent
/// inputs get a configuration whose link lengths differ from the geometry.
Configuration make_configuration(const Pose& pose, const JointVector& joints,
                                 const Geometry& geometry);

struct FkOptions {
    double tol{1e-10};        // convergence bound on max_i |r_i|
    int max_iter{50};
    double cond_limit{1e12};  // Newton-matrix condition estimate ceiling
};

/// Newton iteration on the loop-closure residuals
/// r_i(pose) = ||c_i(pose) - b_i||^2 - L_ii^2 with analytic Jacobian, damped
/// by step halving. Returns the solution branch nearest the seed.
/// Throws NoConvergenceError or SingularIterationError.
Pose forward_kinematics(const JointVector& joints, const Geometry& geometry, const Pose& seed,
                        const FkOptions& options = {});

/// Jacobian pair of the configuration; determinants by direct expansion.
JacobianPair jacobians(const Configuration& config, const Geometry& geometry);

/// q_dot = B^-1 * A * p_dot (diagonal solve). eps_serial bounds the
/// normalized diagonal |cos alpha_i| from below.
JointRates twist_to_joint_rates(const Configuration& config, const Geometry& geometry,
                                const Twist& twist, double eps_serial);

/// p_dot = A^-1 * B * q_dot. eps_parallel bounds |det A| (scale-normalized)
/// from below.
Twist joint_rates_to_twist(const Configuration& config, const Geometry& geometry,
                           const JointRates& rates, double eps_parallel);

/// |det A| / (prod(L_ii) * max platform offset): dimensionless by
/// construction (A's third column carries length^2).
double det_a_normalized(const JacobianPair& jac, const Geometry& geometry);

/// det B / prod(L_ii) = prod(cos alpha_i).
double det_b_normalized(const JacobianPair& jac, const Geometry& geometry);

}  // namespace prr
