#pragma once

#include <stdexcept>
#include <string>

namespace denjoy {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two points of a cyclic-order triple coincide at working precision.
class DegenerateTriple : public Error {
 public:
  using Error::Error;
};

/// Two orbit base points coincide within the comparison tolerance.
class PrecisionCollision : public Error {
 public:
  using Error::Error;
};

/// A stage or tolerance beyond what the finite model resolves.
class DepthExceeded : public Error {
 public:
  using Error::Error;
};

class ErrorBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NegativeRadius : public Error {
 public:
  using Error::Error;
};

class ConfigInvalid : public Error {
 public:
  ConfigInvalid(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class UnsupportedRender : public Error {
 public:
  using Error::Error;
};

}  // namespace denjoy
