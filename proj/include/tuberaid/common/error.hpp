#pragma once

#include <stdexcept>
#include <string>

namespace tuberaid {

// Base of every error the library throws. The CLI maps each subclass to a
// distinct process exit code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
};

class InvalidArgument : public Error {
public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

class ParseError : public Error {
public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

class NotFoundError : public Error {
public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

class QuotaError : public Error {
public:
  using Error::Error;
  int exit_code() const noexcept override { return 5; }
};

class CommentsDisabledError : public Error {
public:
  using Error::Error;
  int exit_code() const noexcept override { return 6; }
};

class TransportError : public Error {
public:
  using Error::Error;
  int exit_code() const noexcept override { return 7; }
};

class ConfigError : public Error {
public:
  using Error::Error;
  int exit_code() const noexcept override { return 8; }
};

} // namespace tuberaid
