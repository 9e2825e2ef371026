#pragma once

#include <stdexcept>
#include <string>

namespace rwre {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Model construction / validation.
struct NonCenteredLaw : Error { using Error::Error; };
struct NonStochastic : Error { using Error::Error; };
struct Reducible : Error { using Error::Error; };
struct EmptyAlphabet : Error { using Error::Error; };
struct NoPositiveAtom : Error { using Error::Error; };
struct ModelInvalid : Error { using Error::Error; };

// Lattice dynamic programming.
struct LatticeMismatch : Error { using Error::Error; };
struct HorizonTooShort : Error { using Error::Error; };

// Estimators and samplers.
struct AllCensored : Error { using Error::Error; };
struct InsufficientPrecision : Error { using Error::Error; };
struct ZeroMass : Error { using Error::Error; };
struct TableMiss : Error { using Error::Error; };
struct RejectionBudgetExceeded : Error { using Error::Error; };

// Statistics.
struct EmptySample : Error { using Error::Error; };
struct SparseCells : Error { using Error::Error; };

// Experiment runner.
struct ConfigInvalid : Error { using Error::Error; };
struct AssertionFailed : Error { using Error::Error; };

}  // namespace rwre
