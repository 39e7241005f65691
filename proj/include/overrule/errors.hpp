#pragma once

#include <stdexcept>
#include <string>

namespace overrule {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad hyperparameters, malformed config or schema files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data.
class DataError : public Error {
 public:
  using Error::Error;
};

// Numerical failure or an unsatisfiable coverage target inside the solver.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace overrule
