#pragma once

#include <stdexcept>
#include <string>

namespace trifold {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// groups
struct OrderExceedsCap : Error { using Error::Error; };
struct InvalidPermutation : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct BadQuotient : Error { using Error::Error; };

// catalog
struct UnsupportedFamily : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct NotAnAutomorphism : Error { using Error::Error; };
struct NotCentral : Error { using Error::Error; };
struct NotIsomorphism : Error { using Error::Error; };
struct IncompleteOrder : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct AxiomViolation : Error { using Error::Error; };

// characters
struct CapExceeded : Error { using Error::Error; };
struct GroupMismatch : Error { using Error::Error; };

// riemann
struct IdentityElement : Error { using Error::Error; };

// hodge
struct ElementInDiagonal : Error { using Error::Error; };
struct NonIntegralAverage : Error { using Error::Error; };

// pipeline
struct BadCoset : Error { using Error::Error; };
struct BadShape : Error { using Error::Error; };
struct NotMinimal : Error { using Error::Error; };

struct Overflow : Error { using Error::Error; };

}  // namespace trifold
