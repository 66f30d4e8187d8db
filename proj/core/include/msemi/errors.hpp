#pragma once

#include <stdexcept>
#include <string>

namespace msemi {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element was handed to an instance it does not belong to.
class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exact enumeration would visit more joint outcomes than allowed.
class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

class NoIdentity : public Error {
 public:
  using Error::Error;
};

class NotAGroup : public Error {
 public:
  using Error::Error;
};

class MissingSampler : public Error {
 public:
  using Error::Error;
};

/// Malformed instance strings, sequence configs or CLI input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace msemi
