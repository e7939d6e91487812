#pragma once

#include <stdexcept>
#include <string>

namespace nsemi {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Construction / validation failures.
struct EmptyInput : Error { using Error::Error; };
struct GcdError : Error { using Error::Error; };            // generators with gcd != 1
struct NotClosed : Error { using Error::Error; };           // gap/member set not a semigroup
struct NotMember : Error { using Error::Error; };
struct BadOrder : Error { using Error::Error; };            // arguments not strictly ascending
struct BadRange : Error { using Error::Error; };
struct NotPairwiseCoprime : Error { using Error::Error; };
struct OrdinaryInput : Error { using Error::Error; };       // op undefined on ordinary semigroups

// Resource and arithmetic guards.
struct ResourceLimit : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };

// Lattice / fitting failures.
struct UnboundedSystem : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };
struct InconsistentSamples : Error { using Error::Error; };
struct IntegralityViolation : Error { using Error::Error; };

// I/O and internal cross-checks.
struct IoError : Error { using Error::Error; };
struct CrossCheckError : Error { using Error::Error; };     // two independent methods disagreed

}  // namespace nsemi
