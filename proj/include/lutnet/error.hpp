#pragma once

#include <stdexcept>
#include <string>

namespace lutnet {

// All library failures derive from Error so the CLI can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Operation invoked on a network in the wrong pipeline stage.
class StageError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class SchemaVersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

class ExpansionError : public Error {
 public:
  using Error::Error;
};

class FoldError : public Error {
 public:
  FoldError(const std::string& what, std::size_t neuron)
      : Error(what), neuron_(neuron) {}
  std::size_t neuron() const { return neuron_; }

 private:
  std::size_t neuron_;
};

class LoweringError : public Error {
 public:
  using Error::Error;
};

class PortError : public Error {
 public:
  using Error::Error;
};

class PackingError : public Error {
 public:
  using Error::Error;
};

}  // namespace lutnet
