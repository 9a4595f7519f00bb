#pragma once

#include <stdexcept>

namespace npqaoa {

// An input is valid but outside what an exact method can handle
// (enumeration bounds, table sizes, simulator width).
class capability_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A file could not be read or written.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace npqaoa
