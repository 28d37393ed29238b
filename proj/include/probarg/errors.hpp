// Error taxonomy shared across the library.  Parsers throw the specific
// subclasses so callers (notably the CLI) can map them onto exit codes
// without string matching.
#ifndef PROBARG_ERRORS_HPP
#define PROBARG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace probarg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A statement/line in an input file that matches no legal form.
struct MalformedLineError : Error { using Error::Error; };

// TGF input without the mandatory '#' separator line.
struct MissingSeparatorError : Error { using Error::Error; };

// The same argument declared twice.
struct DuplicateArgumentError : Error { using Error::Error; };

// Reference to an argument that was never declared.
struct UnknownArgumentError : Error { using Error::Error; };

// Instance exceeds a documented capacity cap (e.g. 2^n tables).
struct TooLargeError : Error { using Error::Error; };

// Property has no linear-constraint encoding (TER, RAT).
struct UnsupportedPropertyError : Error { using Error::Error; };

// No probability assignment satisfies the requested constraints.
struct InfeasibleError : Error { using Error::Error; };

} // namespace probarg

#endif
