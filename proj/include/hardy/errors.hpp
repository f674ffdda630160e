#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematically negative answer: the input is well formed but does not
/// have the requested property (not a divisor, not rational, ...).
class NegativeVerdict : public Error {
 public:
  using Error::Error;
};

class NotADivisor : public NegativeVerdict {
 public:
  NotADivisor(std::string condition, int index, const std::string& detail)
      : NegativeVerdict("not a divisor: " + condition + " fails at index " +
                        std::to_string(index) + (detail.empty() ? "" : " (" + detail + ")")),
        condition_(std::move(condition)),
        index_(index) {}

  const std::string& condition() const noexcept { return condition_; }
  int index() const noexcept { return index_; }

 private:
  std::string condition_;
  int index_;
};

class NotRational : public NegativeVerdict {
 public:
  using NegativeVerdict::NegativeVerdict;
};

class NotInner : public NegativeVerdict {
 public:
  NotInner(const std::string& what, double residual)
      : NegativeVerdict(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Negative-frequency content above tolerance: the sampled function is not in H-infinity.
class NotAnalytic : public NegativeVerdict {
 public:
  explicit NotAnalytic(double max_negative_norm)
      : NegativeVerdict("not analytic: max negative-frequency norm " +
                        std::to_string(max_negative_norm)),
        norm_(max_negative_norm) {}
  double max_negative_norm() const noexcept { return norm_; }

 private:
  double norm_;
};

class TrivialGcd : public NegativeVerdict {
 public:
  using NegativeVerdict::NegativeVerdict;
};

/// A numerical certificate could not be established within tolerance.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class CertificationFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class DivisionResidual : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class ResidualFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class NotShiftInvariant : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class TruncationTooSmall : public NumericalFailure {
 public:
  TruncationTooSmall(int K, int dim_K, int dim_K2)
      : NumericalFailure("truncation K=" + std::to_string(K) + " unstable: dimension " +
                             std::to_string(dim_K) + " vs " + std::to_string(dim_K2) + " at K+2",
                         static_cast<double>(dim_K2 - dim_K)) {}
};

class CoprimeCheckFailed : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// Malformed input (schema, shape, non-finite entries).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace hardy
