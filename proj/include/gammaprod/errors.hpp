#pragma once

#include <stdexcept>
#include <string>

namespace gpf {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller violated a documented precondition (bad input, wrong region,
// inapplicable formula).
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// An internal invariant failed. This never indicates bad input; it means
// the mathematics disagreed with the implementation and the result cannot
// be trusted.
struct internal_error : error {
    explicit internal_error(const std::string& msg) : error(msg) {}
};

#define GPF_CHECK(cond, msg)                          \
    do {                                              \
        if (!(cond)) throw ::gpf::domain_error(msg);  \
    } while (0)

#define GPF_ASSERT(cond, msg)                           \
    do {                                                \
        if (!(cond)) throw ::gpf::internal_error(msg);  \
    } while (0)

}  // namespace gpf
