#pragma once

#include <stdexcept>
#include <string>

namespace latmin {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input relation digraph has a directed cycle.
struct CycleError : Error {
  using Error::Error;
};

// An enumeration or table exceeds its configured size cap.
struct SizeError : Error {
  using Error::Error;
};

struct EmptyFamilyError : Error {
  using Error::Error;
};

// Family is not closed under union/intersection.
struct NotLatticeError : Error {
  using Error::Error;
};

struct NegativeWeightError : Error {
  using Error::Error;
};

// A table entry is -inf where a finite value is required.
struct InfiniteValueError : Error {
  using Error::Error;
};

struct NonIntegerError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace latmin
