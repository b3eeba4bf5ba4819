#pragma once

#include <stdexcept>
#include <string>

namespace begraph {

// Typed failures used across the library. Every operation documents which of
// these it may throw; the CLI maps them to diagnostics and exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// V[S] = 0: the standardized sum W is undefined.
class DegenerateVariance : public Error {
 public:
  using Error::Error;
};

// A required A_delta / M_delta / L / rho entry is absent from the profile.
class MissingMoment : public Error {
 public:
  using Error::Error;
};

// A delta/r/s parameter lies outside the range a theorem or lemma is stated for,
// or an in-zone condition fails.
class WrongRegime : public Error {
 public:
  using Error::Error;
};

// Exact enumeration would exceed the configured joint-support cap.
class OracleTooLarge : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

// Too little data (fewer profiles / samples / points than the operation needs).
class Insufficient : public Error {
 public:
  using Error::Error;
};

class InvalidProfile : public Error {
 public:
  using Error::Error;
};

class NoApplicableBound : public Error {
 public:
  using Error::Error;
};

// Malformed input file; message carries line/column where known.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Construction-time validation failure (bad probabilities, bad edges, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace begraph
