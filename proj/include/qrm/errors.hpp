#pragma once

#include <stdexcept>
#include <string>

namespace qrm {

// Base class for all library errors. Subclasses prefix their name so a
// message is attributable without RTTI (the CLI prints what() verbatim).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& msg) : Error("CapExceeded: " + msg) {}
};

class InvalidOrder : public Error {
 public:
  explicit InvalidOrder(const std::string& msg) : Error("InvalidOrder: " + msg) {}
};

class MismatchedLength : public Error {
 public:
  explicit MismatchedLength(const std::string& msg) : Error("MismatchedLength: " + msg) {}
};

class InvalidPartition : public Error {
 public:
  explicit InvalidPartition(const std::string& msg) : Error("InvalidPartition: " + msg) {}
};

class NotSelfDualNested : public Error {
 public:
  explicit NotSelfDualNested(const std::string& msg) : Error("NotSelfDualNested: " + msg) {}
};

class NotInCodespace : public Error {
 public:
  explicit NotInCodespace(const std::string& msg) : Error("NotInCodespace: " + msg) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error("DomainError: " + msg) {}
};

class NonIntegerResult : public Error {
 public:
  explicit NonIntegerResult(const std::string& msg) : Error("NonIntegerResult: " + msg) {}
};

class EmptyCode : public Error {
 public:
  explicit EmptyCode(const std::string& msg) : Error("EmptyCode: " + msg) {}
};

}  // namespace qrm
