#ifndef PUNCTUAL_ERRORS_HPP
#define PUNCTUAL_ERRORS_HPP

#include <stdexcept>

namespace punctual {

// Thrown when an enumeration or expansion exceeds its configured cap.
// The CLI maps this to its resource-limit exit code.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace punctual

#endif
