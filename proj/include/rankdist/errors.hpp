#pragma once

#include <stdexcept>
#include <string>

namespace rankdist {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input construction
struct InvalidCount : Error { using Error::Error; };
struct InvalidRange : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };

// Index handling (all public interfaces are 1-based)
struct IndexOutOfRange : Error { using Error::Error; };
struct SameIndex : Error { using Error::Error; };

// Numerical gates
struct TieDetected : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct DegenerateDenominator : Error { using Error::Error; };
struct InterceptMissing : Error { using Error::Error; };

// I/O
struct ParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// Simulation
struct InvalidConfig : Error { using Error::Error; };

}  // namespace rankdist
