#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tangle {

/// Base class for all validation failures raised by this library.
class TangleError : public std::runtime_error {
 public:
  explicit TangleError(const std::string& what) : std::runtime_error(what) {}
};

class InvalidState : public TangleError {
 public:
  explicit InvalidState(const std::string& what) : TangleError(what) {}
};

class DimensionMismatch : public TangleError {
 public:
  explicit DimensionMismatch(const std::string& what) : TangleError(what) {}
};

/// A single-qubit marginal is (numerically) singular; the caller interprets
/// this as a trace->0 degenerate normal-form trajectory.
class NearSingularMarginal : public TangleError {
 public:
  explicit NearSingularMarginal(const std::string& what) : TangleError(what) {}
};

class UnphysicalCoords : public TangleError {
 public:
  explicit UnphysicalCoords(const std::string& what) : TangleError(what) {}
};

class NotGhzSymmetric : public TangleError {
 public:
  explicit NotGhzSymmetric(const std::string& what) : TangleError(what) {}
};

class StatesCoincide : public TangleError {
 public:
  explicit StatesCoincide(const std::string& what) : TangleError(what) {}
};

class UnsupportedState : public TangleError {
 public:
  explicit UnsupportedState(const std::string& what) : TangleError(what) {}
};

class ValueOutOfRange : public TangleError {
 public:
  explicit ValueOutOfRange(const std::string& what) : TangleError(what) {}
};

class NotPositive : public TangleError {
 public:
  explicit NotPositive(const std::string& what) : TangleError(what) {}
};

class MissingLabels : public TangleError {
 public:
  MissingLabels(const std::string& what, std::vector<std::string> labels)
      : TangleError(what), labels_(std::move(labels)) {}
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
};

}  // namespace tangle
