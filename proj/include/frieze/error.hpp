#pragma once

#include <stdexcept>

namespace frieze {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace frieze
