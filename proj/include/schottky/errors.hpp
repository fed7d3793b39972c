#pragma once

#include <stdexcept>
#include <string>

namespace schottky {

// Base of every error the library raises. Mathematical verdicts are never
// errors; these signal misuse or an input outside an operation's domain.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Precondition violation (r <= 0, y <= 0, lambda <= 1, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// The result would need more than one radical layer, or two different radicands.
class NestedRadicalError : public Error {
public:
  using Error::Error;
};

// Fixed points of an elliptic map are not on the boundary circle.
class EllipticFixedPointError : public Error {
public:
  using Error::Error;
};

// Evaluation at the pole -d/c of a map.
class PoleError : public Error {
public:
  using Error::Error;
};

// A boundary point lies exactly on a circle where a strict side was required.
class TangentialDegeneracyError : public Error {
public:
  using Error::Error;
};

// Two circles cross (neither disjoint, tangent nor nested).
class CrossingCirclesError : public Error {
public:
  using Error::Error;
};

// Negative radicand or similar failure inside a numeric evaluator.
class NumericError : public Error {
public:
  using Error::Error;
};

// Malformed or out-of-range run configuration. `path` names the offending key.
class ConfigError : public Error {
public:
  ConfigError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

}  // namespace schottky
