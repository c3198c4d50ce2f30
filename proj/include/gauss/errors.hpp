#pragma once

#include <stdexcept>
#include <string>

namespace gauss {

// Base for every error raised by the library. The CLI maps all of these to
// exit code 2 (input error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyDiagramError : public Error {
 public:
  EmptyDiagramError() : Error("empty diagram: no tokens in input") {}
};

class MalformedWordError : public Error {
 public:
  MalformedWordError(std::string token, int occurrences)
      : Error("malformed word: token '" + token + "' occurs " + std::to_string(occurrences) +
              " time(s), expected exactly 2"),
        token_(std::move(token)),
        occurrences_(occurrences) {}

  const std::string& token() const noexcept { return token_; }
  int occurrences() const noexcept { return occurrences_; }

 private:
  std::string token_;
  int occurrences_;
};

class PartitionError : public Error {
 public:
  using Error::Error;
};

class NotCubicError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

class CycleMismatchError : public Error {
 public:
  using Error::Error;
};

class StaleSiteError : public Error {
 public:
  using Error::Error;
};

class NotPlaneCurveError : public Error {
 public:
  using Error::Error;
};

}  // namespace gauss
