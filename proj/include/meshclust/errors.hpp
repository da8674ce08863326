#pragma once

#include <stdexcept>
#include <string>

namespace meshclust {

/// Base class of every error raised by the library.
///
/// `kind()` returns the error class name; `verification()` is true for
/// errors that signal a broken internal invariant rather than bad input.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message, bool verification = false)
      : std::runtime_error(kind + ": " + message),
        kind_(std::move(kind)),
        verification_(verification) {}

  const std::string& kind() const noexcept { return kind_; }
  bool verification() const noexcept { return verification_; }

 private:
  std::string kind_;
  bool verification_;
};

#define MESHCLUST_INPUT_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& m) : Error(#Name, m, false) {}   \
  };

#define MESHCLUST_VERIFICATION_ERROR(Name)                            \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& m) : Error(#Name, m, true) {}    \
  };

MESHCLUST_INPUT_ERROR(LoopError)
MESHCLUST_INPUT_ERROR(CycleError)
MESHCLUST_INPUT_ERROR(DisconnectedError)
MESHCLUST_INPUT_ERROR(TooSmallError)
MESHCLUST_INPUT_ERROR(IndexError)
MESHCLUST_INPUT_ERROR(NotAdaptedError)
MESHCLUST_INPUT_ERROR(NotReducedError)
MESHCLUST_INPUT_ERROR(TerminalConstraintError)
MESHCLUST_INPUT_ERROR(DynkinOverflowError)
MESHCLUST_INPUT_ERROR(TwoCycleError)
MESHCLUST_INPUT_ERROR(FrozenMutationError)
MESHCLUST_INPUT_ERROR(ArityMismatchError)
MESHCLUST_INPUT_ERROR(NegativeExponentSubstitutionError)
MESHCLUST_INPUT_ERROR(NotThinError)
MESHCLUST_INPUT_ERROR(ShapeError)
MESHCLUST_INPUT_ERROR(ParseError)

MESHCLUST_VERIFICATION_ERROR(NotDivisibleError)
MESHCLUST_VERIFICATION_ERROR(AmbiguityError)
MESHCLUST_VERIFICATION_ERROR(ScheduleMismatchError)
MESHCLUST_VERIFICATION_ERROR(NonIntegralError)

#undef MESHCLUST_INPUT_ERROR
#undef MESHCLUST_VERIFICATION_ERROR

}  // namespace meshclust
