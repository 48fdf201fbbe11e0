#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "pointint/types.hpp"

namespace pointint {

enum class ErrorKind {
  configuration,
  domain,
  numeric,
  singular,
  conditioning,
  not_psd,
  spectrum_hit,
  resonance,
  unsupported,
  evaluation,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ConfigurationError : public Error {
 public:
  explicit ConfigurationError(const std::string& what)
      : Error(ErrorKind::configuration, what) {}
};

// Two interaction centers coincide (or a coordinate is NaN). Indices are 0-based.
class DuplicateCentersError : public ConfigurationError {
 public:
  DuplicateCentersError(Index first, Index second, const std::string& what)
      : ConfigurationError(what), pair_(first, second) {}
  std::pair<Index, Index> pair() const noexcept { return pair_; }

 private:
  std::pair<Index, Index> pair_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(ErrorKind::numeric, what) {}
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError(Index pivot, const std::string& what)
      : Error(ErrorKind::singular, what), pivot_(pivot) {}
  Index pivot() const noexcept { return pivot_; }

 private:
  Index pivot_;
};

class ConditioningError : public Error {
 public:
  explicit ConditioningError(const std::string& what)
      : Error(ErrorKind::conditioning, what) {}
};

class NotPsdError : public Error {
 public:
  NotPsdError(double min_eigenvalue, const std::string& what)
      : Error(ErrorKind::not_psd, what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

// The spectral parameter hit an eigenvalue: C - D M(z) is singular.
class SpectrumHitError : public Error {
 public:
  SpectrumHitError(Complex z, const std::string& what)
      : Error(ErrorKind::spectrum_hit, what), z_(z) {}
  Complex z() const noexcept { return z_; }

 private:
  Complex z_;
};

// C - D M(x + i0) is singular at a positive energy.
class ResonanceError : public Error {
 public:
  ResonanceError(double energy, const std::string& what)
      : Error(ErrorKind::resonance, what), energy_(energy) {}
  double energy() const noexcept { return energy_; }

 private:
  double energy_;
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what)
      : Error(ErrorKind::unsupported, what) {}
};

class EvaluationError : public Error {
 public:
  explicit EvaluationError(const std::string& what)
      : Error(ErrorKind::evaluation, what) {}
};

}  // namespace pointint
