#pragma once

#include <stdexcept>
#include <string>

namespace eqlab {

// Evaluation point closer to a mass than the singularity cutoff.
class SingularEvaluation : public std::domain_error {
 public:
  explicit SingularEvaluation(const std::string& what) : std::domain_error(what) {}
};

class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

class CapacityExceeded : public std::length_error {
 public:
  explicit CapacityExceeded(const std::string& what) : std::length_error(what) {}
};

class DegenerateHessian : public std::domain_error {
 public:
  explicit DegenerateHessian(const std::string& what) : std::domain_error(what) {}
};

class BracketFailure : public std::runtime_error {
 public:
  explicit BracketFailure(const std::string& what) : std::runtime_error(what) {}
};

class LiftFailure : public std::runtime_error {
 public:
  explicit LiftFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eqlab
