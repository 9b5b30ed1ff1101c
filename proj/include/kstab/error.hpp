#pragma once

#include <stdexcept>
#include <string>

namespace kstab {

/// Malformed arguments or a violated precondition. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured size cap (lattice size, matrix size, dimension).
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sampled values never settled into polynomial behaviour inside the grid.
class StabilizationError : public std::runtime_error {
public:
    StabilizationError(const std::string& what, long largest_k)
        : std::runtime_error(what), largest_k_(largest_k) {}

    long largest_k() const noexcept { return largest_k_; }

private:
    long largest_k_;
};

} // namespace kstab
