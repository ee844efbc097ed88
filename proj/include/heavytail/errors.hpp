#pragma once

#include <stdexcept>
#include <string>

namespace heavytail {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid distribution or configuration parameters (construction-time).
struct parameter_error : error {
    using error::error;
};

// Argument outside an operation's admissible domain (e.g. quantile p outside (0,1)).
struct domain_error : error {
    using error::error;
};

// Malformed external input: sample files, spec strings, study definitions.
struct data_error : error {
    using error::error;
};

// Fewer observations than an operation requires.
struct insufficient_data_error : data_error {
    using data_error::data_error;
};

} // namespace heavytail
