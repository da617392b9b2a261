#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fincat {

/// Base of every error raised by the library. Carries an optional list of
/// witnesses (arrow names, element labels, ...) that explain the failure.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message, std::vector<std::string> witnesses = {})
      : std::runtime_error(message), witnesses_(std::move(witnesses)) {}

  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

 private:
  std::vector<std::string> witnesses_;
};

#define FINCAT_DECLARE_ERROR(Name)  \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  }

// cat-core
FINCAT_DECLARE_ERROR(MalformedTable);
FINCAT_DECLARE_ERROR(UnknownObject);
FINCAT_DECLARE_ERROR(UnknownArrow);
FINCAT_DECLARE_ERROR(EnumerationBudgetExceeded);
FINCAT_DECLARE_ERROR(InvalidArgument);

// builders
FINCAT_DECLARE_ERROR(InvalidMonoid);
FINCAT_DECLARE_ERROR(InvalidPoset);

// universal
FINCAT_DECLARE_ERROR(NotTerminal);
FINCAT_DECLARE_ERROR(NotAProduct);

// functors
FINCAT_DECLARE_ERROR(MalformedMap);
FINCAT_DECLARE_ERROR(SourceTargetMismatch);
FINCAT_DECLARE_ERROR(NotAFunctor);
FINCAT_DECLARE_ERROR(NotMonotone);
FINCAT_DECLARE_ERROR(NotAHomomorphism);

// galois
FINCAT_DECLARE_ERROR(UnknownElement);
FINCAT_DECLARE_ERROR(AdjunctionFails);

// logic
FINCAT_DECLARE_ERROR(UniverseMismatch);
FINCAT_DECLARE_ERROR(UnknownAtom);
FINCAT_DECLARE_ERROR(NotDownClosed);
FINCAT_DECLARE_ERROR(ContextOverflow);
FINCAT_DECLARE_ERROR(ContextMismatch);

// nno
FINCAT_DECLARE_ERROR(BoundExceeded);

// io / cli
FINCAT_DECLARE_ERROR(ParseError);
FINCAT_DECLARE_ERROR(UnknownDemo);

// Raised when two routes that must agree by construction disagree. Seeing
// one means a bug in this library, not bad input.
FINCAT_DECLARE_ERROR(InternalInconsistency);

#undef FINCAT_DECLARE_ERROR

}  // namespace fincat
