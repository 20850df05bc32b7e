#pragma once

#include <stdexcept>
#include <string>

namespace qrm {

// Thrown when a request exceeds what can be computed exactly within the
// implemented bounds (enumeration too large, state vector too big, d > 17).
// The CLI maps this to exit code 3.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal cross-check fails (closed form vs direct
// computation, numeric residual too large). Indicates a bug or precision
// loss, never bad user input.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace qrm
