#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpg {

// Base of every error the library raises. Each subclass names one failure
// mode so callers (and the CLI exit-code table) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text or arguments that do not follow the documented syntax.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : UsageError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UndeclaredGenerator : public UsageError {
 public:
  using UsageError::UsageError;
};

class EmptyRelator : public UsageError {
 public:
  using UsageError::UsageError;
};

// Domain errors: well-formed input on which an operation is undefined.
class DomainError : public Error {
 public:
  using Error::Error;
};

#define FPG_DOMAIN_ERROR(Name)      \
  class Name : public DomainError { \
   public:                          \
    using DomainError::DomainError; \
  }

FPG_DOMAIN_ERROR(AlphabetMismatch);
FPG_DOMAIN_ERROR(UnmappedGenerator);
FPG_DOMAIN_ERROR(InvalidCertificate);
FPG_DOMAIN_ERROR(GeneratorInUse);
FPG_DOMAIN_ERROR(NameCollision);
FPG_DOMAIN_ERROR(NotFreeBase);
FPG_DOMAIN_ERROR(TrivialWitnessWord);
FPG_DOMAIN_ERROR(MixedLetterError);
FPG_DOMAIN_ERROR(LimitTooSmall);
FPG_DOMAIN_ERROR(IncompleteTable);
FPG_DOMAIN_ERROR(EmptyWitnessWord);
FPG_DOMAIN_ERROR(AlphabetError);
FPG_DOMAIN_ERROR(NotPerfect);
FPG_DOMAIN_ERROR(NotSubpresentation);
FPG_DOMAIN_ERROR(InconsistentData);
FPG_DOMAIN_ERROR(Unsupported);

#undef FPG_DOMAIN_ERROR

}  // namespace fpg
