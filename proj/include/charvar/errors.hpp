// Error types shared across the library. Domain violations and parse errors
// are exceptions; internal invariant breaches are assertions.
#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotUnimodular : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MissingBinding : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct VariableOutOfSubring : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnknownIdentity : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ArityMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BlockNotUnimodular : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularBlock : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RankUnsupported : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidBoundary : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Reduction engine failures: the interpolation fallback could not certify a
// candidate at any scheduled degree bound.
struct ReductionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BasisInsufficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RankDeficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RootFindingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FixtureMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace charvar
