#pragma once

#include <stdexcept>
#include <string>

namespace bruhat {

// Letter out of range or word not reduced.
class InvalidWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text that does not parse as a word, permutation, sign vector or matrix.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RankMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Element expected in the finite group B~+ (or a unit of Spin) but is not.
class NotInGroup : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotClickable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotFactorizable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Externally supplied data disagrees with what was computed.
class Inconsistent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bruhat
