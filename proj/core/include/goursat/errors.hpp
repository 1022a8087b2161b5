#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goursat {

enum class ParseErrorKind {
  InvalidCharacter,  // a character outside {G,S,T}
  TooShort,          // fewer than two letters
  BadPrefix,         // does not start with GG
  ForbiddenFactor,   // contains the factor GT
};

std::string to_string(ParseErrorKind kind);

/// Word grammar violation. `position` is the 0-based index of the offending
/// character; for TooShort it is the input length.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t position,
             const std::string& message)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
};

/// Two-argument vector operation called with len(b) != len(a) + 1.
struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A vector entry that must be >= 1 is not; on the T operation this signals
/// an input pair that does not arise from an admissible word.
struct NonPositiveEntry : std::domain_error {
  using std::domain_error::domain_error;
};

/// An A-sequence index for which no k-parameter is available, or an accessor
/// index outside a vector's domain.
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// A closed-form routine was handed a profile from the other q-branch.
struct ProfileMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An identity checker was called outside its k_1 branch.
struct PreconditionViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A ParamProfile violating its structural invariants (sizes, negative runs,
/// leading G-run < 2, inconsistent n).
struct InvalidProfile : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Appending T after a trailing G, or to the all-G class.
struct ForbiddenProlongation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The recurrence and the closed form disagreed; indicates a bug, never
/// expected on admissible input.
struct OracleDivergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace goursat
