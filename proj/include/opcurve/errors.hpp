#pragma once

#include <stdexcept>
#include <string>

namespace opcurve {

// Input document could not be parsed into a matrix polynomial.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// det(L(lambda)) vanishes identically, so the spectrum is the whole field and
// the requested quantity is undefined.
class IdenticallySingularError : public std::domain_error {
 public:
  explicit IdenticallySingularError(const std::string& what)
      : std::domain_error(what) {}
};

// The m-adic dimension sequence kept growing past the configured bound,
// which means the point is not an isolated solution (or the bound is too low).
class StabilizationError : public std::runtime_error {
 public:
  explicit StabilizationError(const std::string& what)
      : std::runtime_error(what) {}
};

// The request cannot be answered for this input (e.g. a per-eigenvalue
// analysis without --at on a curve with no rational eigenvalues).
class BadRequestError : public std::runtime_error {
 public:
  explicit BadRequestError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace opcurve
