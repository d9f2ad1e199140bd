#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cmlt {

// Caller violated a documented precondition (bad prime, bad reduction, zero
// input, ...). The CLI maps this to exit code 2.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal invariant failed. Never expected; the CLI maps it to exit code 1.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A search bound was too small to finish the computation.
class SearchBoundExceeded : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// No prime was found in the progression of residue k within the search bound.
class NoRepresentativeFound : public SearchBoundExceeded {
public:
    NoRepresentativeFound(std::uint64_t k, const std::string& msg) : SearchBoundExceeded(msg), k_(k) {}
    std::uint64_t k() const { return k_; }

private:
    std::uint64_t k_;
};

#define CMLT_REQUIRE(cond, msg)                                                \
    do {                                                                       \
        if (!(cond)) throw ::cmlt::PreconditionError(msg);                     \
    } while (0)

#define CMLT_ASSERT(cond, msg)                                                 \
    do {                                                                       \
        if (!(cond))                                                           \
            throw ::cmlt::InternalError(std::string("assertion failed: ") +    \
                                        #cond + ": " + (msg));                 \
    } while (0)

} // namespace cmlt
