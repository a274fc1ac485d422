#pragma once

#include <stdexcept>
#include <string>

namespace periods {

// Common base so callers can catch everything domain-specific at once.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// polynomial / matrix engine
class NotSquare : public Error {
 public:
  explicit NotSquare(const std::string& msg) : Error(msg) {}
};
class SizeGuardExceeded : public Error {
 public:
  explicit SizeGuardExceeded(const std::string& msg) : Error(msg) {}
};
class MissingVariable : public Error {
 public:
  explicit MissingVariable(const std::string& msg) : Error(msg) {}
};

// hodge data
class InvalidMotive : public Error {
 public:
  explicit InvalidMotive(const std::string& msg) : Error(msg) {}
};
class MixedWeight : public InvalidMotive {
 public:
  explicit MixedWeight(const std::string& msg) : InvalidMotive(msg) {}
};
class AsymmetricHodgeNumbers : public InvalidMotive {
 public:
  explicit AsymmetricHodgeNumbers(const std::string& msg) : InvalidMotive(msg) {}
};
class MissingMiddleSplit : public InvalidMotive {
 public:
  explicit MissingMiddleSplit(const std::string& msg) : InvalidMotive(msg) {}
};
class BadMiddleSplit : public InvalidMotive {
 public:
  explicit BadMiddleSplit(const std::string& msg) : InvalidMotive(msg) {}
};
class NotCritical : public Error {
 public:
  explicit NotCritical(const std::string& msg) : Error(msg) {}
};

// admissibility / relation layer
class PartitionMismatch : public Error {
 public:
  explicit PartitionMismatch(const std::string& msg) : Error(msg) {}
};
class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};
class NoTheoremApplies : public Error {
 public:
  explicit NoTheoremApplies(const std::string& msg) : Error(msg) {}
};
class DegenerateSample : public Error {
 public:
  explicit DegenerateSample(const std::string& msg) : Error(msg) {}
};
class HypothesisViolation : public Error {
 public:
  explicit HypothesisViolation(const std::string& msg) : Error(msg) {}
};
class SummandNotCritical : public Error {
 public:
  explicit SummandNotCritical(const std::string& msg) : Error(msg) {}
};
class SummandTensorNotCritical : public Error {
 public:
  explicit SummandTensorNotCritical(const std::string& msg) : Error(msg) {}
};
// Invariant violations that indicate a bug, not bad input.
class InternalSizeMismatch : public Error {
 public:
  explicit InternalSizeMismatch(const std::string& msg) : Error(msg) {}
};

// dirichlet numerics
class NotFundamental : public Error {
 public:
  explicit NotFundamental(const std::string& msg) : Error(msg) {}
};
class PrecisionUnreachable : public Error {
 public:
  explicit PrecisionUnreachable(const std::string& msg) : Error(msg) {}
};
class NotCriticalPoint : public Error {
 public:
  explicit NotCriticalPoint(const std::string& msg) : Error(msg) {}
};
class NotCoprime : public Error {
 public:
  explicit NotCoprime(const std::string& msg) : Error(msg) {}
};

}  // namespace periods
