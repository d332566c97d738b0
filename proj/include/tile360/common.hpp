#pragma once

#include <stdexcept>
#include <string>

namespace tile360 {

// Malformed input text (CSV/JSON); message carries the line number when known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed input that violates a documented invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Math function evaluated outside its domain (e.g. rate <= 0).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Allocation problem whose minimum rate demand exceeds the bandwidth budget.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, double deficit_kbps)
      : std::runtime_error(what), deficit_kbps_(deficit_kbps) {}
  double deficit_kbps() const { return deficit_kbps_; }

 private:
  double deficit_kbps_ = 0.0;
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tile360
