#pragma once

#include <stdexcept>
#include <string>

namespace hfss {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called with inputs that violate its stated contract.
class precondition_error : public error {
public:
    using error::error;
};

/// Observations are mutually inconsistent (e.g. they imply a negative gain).
class inconsistency_error : public error {
public:
    using error::error;
};

/// Power estimates sit too close to the noise floor for interval estimation.
class insufficient_snr_error : public error {
public:
    using error::error;
};

/// The primary link is (or would be pushed) into transmit outage.
class outage_error : public error {
public:
    using error::error;
};

/// A configuration file could not be parsed or fails validation.
class config_error : public error {
public:
    using error::error;
};

}  // namespace hfss
