#pragma once

#include <stdexcept>
#include <string>

namespace sftconj {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition of an operation was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A brute-force search or oracle hit its configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UndefinedEntropy : public Error {
 public:
  UndefinedEntropy() : Error("entropy undefined: essential graph is empty") {}
};

}  // namespace sftconj
