#pragma once

#include <stdexcept>
#include <string>

namespace crysp {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Cell periods are (numerically) linearly dependent.
struct DegenerateLattice : Error {
  using Error::Error;
};

/// A source passed to the Coulomb solve carries net charge (rho_hat(0) != 0).
struct NonNeutralSource : Error {
  using Error::Error;
};

/// Point evaluation of a singular kernel requested at (an image of) the origin.
struct SingularPoint : Error {
  using Error::Error;
};

/// A wave field with (numerically) zero norm cannot be normalized.
struct ZeroField : Error {
  using Error::Error;
};

/// Two ions are closer than the admissible minimum separation.
struct IonsCoincide : Error {
  using Error::Error;
};

/// No admissible ion step exists (separation constraint binds at zero step).
struct IonsCollapsed : Error {
  using Error::Error;
};

/// A run configuration failed to parse or validate.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace crysp
