#pragma once

#include <stdexcept>
#include <string>

namespace prr {

/// Base for all toolkit errors. The category maps 1:1 onto CLI exit codes:
/// Config -> 1, Domain -> 2, Numeric -> 3.
class Error : public std::runtime_error {
public:
    enum class Category { Config = 1, Domain = 2, Numeric = 3 };

    Error(Category cat, const std::string& msg) : std::runtime_error(msg), category_(cat) {}

    Category category() const { return category_; }

private:
    Category category_;
};

/// A mechanism description violated one of its invariants.
class GeometryError : public Error {
public:
    enum class Code { NonUnitDirection, NonParallelRails, NonPositiveLength, UnorderedPlatformOffsets };

    GeometryError(Code code, const std::string& msg) : Error(Category::Config, msg), code_(code) {}

    Code code() const { return code_; }

private:
    Code code_;
};

/// Geometry config file could not be parsed; carries the 1-based line number.
class ConfigParseError : public Error {
public:
    ConfigParseError(int line, const std::string& field, const std::string& msg)
        : Error(Category::Config,
                "line " + std::to_string(line) + ": " + (field.empty() ? "" : field + ": ") + msg),
          line_(line),
          field_(field) {}

    int line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    int line_;
    std::string field_;
};

/// Malformed CLI or workspace-spec input.
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& msg) : Error(Category::Config, msg) {}
};

/// Leg cannot close its loop: the platform joint is farther from the rail
/// than the link length. `leg` is 1-based; `margin` is |e| - L_ii > 0.
class UnreachableError : public Error {
public:
    UnreachableError(int leg, double margin)
        : Error(Category::Domain,
                "leg " + std::to_string(leg) + " unreachable: platform joint exceeds link reach by "
                    + std::to_string(margin)),
          leg_(leg),
          margin_(margin) {}

    int leg() const { return leg_; }
    double margin() const { return margin_; }

private:
    int leg_;
    double margin_;
};

/// Strict-stroke IK found a root outside [0, stroke]. `margin` is the
/// distance by which the slider would overrun the admissible window.
class StrokeViolationError : public Error {
public:
    StrokeViolationError(int leg, double rho, double stroke, double margin)
        : Error(Category::Domain,
                "leg " + std::to_string(leg) + " stroke violation: rho = " + std::to_string(rho)
                    + " outside [0, " + std::to_string(stroke) + "] by " + std::to_string(margin)),
          leg_(leg),
          rho_(rho),
          margin_(margin) {}

    int leg() const { return leg_; }
    double rho() const { return rho_; }
    double margin() const { return margin_; }

private:
    int leg_;
    double rho_;
    double margin_;
};

/// Newton forward kinematics ran out of iterations.
class NoConvergenceError : public Error {
public:
    NoConvergenceError(int iterations, double residual)
        : Error(Category::Numeric,
                "forward kinematics did not converge after " + std::to_string(iterations)
                    + " iterations (residual " + std::to_string(residual) + ")"),
          iterations_(iterations),
          residual_(residual) {}

    int iterations() const { return iterations_; }
    double residual() const { return residual_; }

private:
    int iterations_;
    double residual_;
};

/// Newton matrix condition estimate blew past the limit: the iterate sits
/// at or near a parallel singularity.
class SingularIterationError : public Error {
public:
    explicit SingularIterationError(double cond)
        : Error(Category::Domain,
                "forward kinematics hit a singular iteration (condition estimate "
                    + std::to_string(cond) + ")"),
          cond_(cond) {}

    double cond() const { return cond_; }

private:
    double cond_;
};

/// A leg's link is (numerically) perpendicular to its rail.
class SerialSingularityError : public Error {
public:
    SerialSingularityError(int leg, double cos_alpha)
        : Error(Category::Domain,
                "leg " + std::to_string(leg) + " at serial singularity (cos alpha = "
                    + std::to_string(cos_alpha) + ")"),
          leg_(leg),
          cos_alpha_(cos_alpha) {}

    int leg() const { return leg_; }
    double cos_alpha() const { return cos_alpha_; }

private:
    int leg_;
    double cos_alpha_;
};

/// The direct-kinematics matrix is rank deficient; the platform gains
/// uncontrolled mobility and the twist cannot be recovered.
class ParallelSingularityError : public Error {
public:
    explicit ParallelSingularityError(double det_a_normalized)
        : Error(Category::Domain,
                "parallel singularity: |det A| normalized = " + std::to_string(det_a_normalized)),
          det_a_normalized_(det_a_normalized) {}

    double det_a_normalized() const { return det_a_normalized_; }

private:
    double det_a_normalized_;
};

/// The requested translation axis is not the rail direction.
class RailMisalignedError : public Error {
public:
    explicit RailMisalignedError(const std::string& msg) : Error(Category::Domain, msg) {}
};

}  // namespace prr
