#pragma once

#include <stdexcept>
#include <string>

namespace scenebias {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// File could not be read or written.
class IoError : public Error {
public:
  using Error::Error;
};

/// File exists but its contents are not in a supported format.
class FormatError : public Error {
public:
  using Error::Error;
};

/// A function argument is outside its documented range.
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// Input data violates a documented contract (bad label, bad ellipse, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Run configuration is inconsistent or incomplete.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Repeatability is undefined because the reference image has no regions.
class UndefinedRepeatabilityError : public Error {
public:
  using Error::Error;
};

}  // namespace scenebias
