#pragma once

#include <stdexcept>
#include <string>

namespace ethgamma {

// Base of all library errors. Subcategories map to CLI exit codes:
// ConfigError -> 2, NumericError -> 3, CacheError -> 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};
struct NumericError : Error {
  using Error::Error;
};
struct CacheError : Error {
  using Error::Error;
};

// configuration / user input
struct ConfigInvalid : ConfigError {
  using ConfigError::ConfigError;
};
struct DimensionGuard : ConfigError {
  using ConfigError::ConfigError;
};
struct MissingData : ConfigError {
  using ConfigError::ConfigError;
};

// basis / model construction
struct InvalidSector : NumericError {
  using NumericError::NumericError;
};
struct SectorMismatch : NumericError {
  using NumericError::NumericError;
};
struct InvalidSize : NumericError {
  using NumericError::NumericError;
};
struct InvalidSite : NumericError {
  using NumericError::NumericError;
};

// linear algebra
struct NotHermitian : NumericError {
  using NumericError::NumericError;
};
struct ConvergenceFailure : NumericError {
  using NumericError::NumericError;
};
struct DimensionMismatch : NumericError {
  using NumericError::NumericError;
};

// thermodynamics
struct EmptySpectrum : NumericError {
  using NumericError::NumericError;
};
struct NonFiniteInput : NumericError {
  using NumericError::NumericError;
};
struct EnergyOutOfRange : NumericError {
  using NumericError::NumericError;
};
struct DegenerateSpectrum : NumericError {
  using NumericError::NumericError;
};

// f(E, omega) extraction and fitting
struct EmptyWindow : NumericError {
  using NumericError::NumericError;
};
struct AllBinsSparse : NumericError {
  using NumericError::NumericError;
};
struct TooFewBins : NumericError {
  using NumericError::NumericError;
};
struct DegenerateAbscissa : NumericError {
  using NumericError::NumericError;
};
struct DomainError : NumericError {
  using NumericError::NumericError;
};
struct ZeroColumn : NumericError {
  using NumericError::NumericError;
};
struct WindowTooLarge : NumericError {
  using NumericError::NumericError;
};

// cache
struct CacheMiss : CacheError {
  using CacheError::CacheError;
};
struct CacheCorrupt : CacheError {
  using CacheError::CacheError;
};

}  // namespace ethgamma
