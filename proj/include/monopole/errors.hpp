#pragma once

#include <stdexcept>
#include <string>

namespace monopole {

/// Base class for all solver errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// integrator
struct StepCountExceeded : Error { using Error::Error; };
struct StepUnderflow : Error { using Error::Error; };
struct NonFiniteState : Error { using Error::Error; };
struct NoSignChange : Error { using Error::Error; };

// shooting
struct IndeterminateShot : Error { using Error::Error; };
struct InvalidBracket : Error { using Error::Error; };

// picard
struct DomainViolation : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };

// connection constants
struct InsufficientDomain : Error { using Error::Error; };
struct PhaseQuadrant : Error { using Error::Error; };

// phase function
struct SingularP : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };

// profile
struct InconsistentInputs : Error { using Error::Error; };
struct CoverageExceeded : Error { using Error::Error; };
struct NoZeroFound : Error { using Error::Error; };
struct NotASolution : Error { using Error::Error; };
struct NonpositiveRadius : Error { using Error::Error; };

}  // namespace monopole
