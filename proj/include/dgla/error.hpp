#pragma once

#include <stdexcept>
#include <string>

namespace dgla {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation touched a degree outside the valid range of a graded object.
// Out-of-range data is unknown, not zero; we fail loudly instead of guessing.
struct DegreeRangeExceeded : Error {
    explicit DegreeRangeExceeded(const std::string& msg) : Error(msg) {}
};

struct NotAFreeExtension : Error {
    explicit NotAFreeExtension(const std::string& msg) : Error(msg) {}
};

struct NotAChainMap : Error {
    explicit NotAChainMap(const std::string& msg) : Error(msg) {}
};

struct MCViolation : Error {
    explicit MCViolation(const std::string& msg) : Error(msg) {}
};

struct NotMaurerCartan : Error {
    explicit NotMaurerCartan(const std::string& msg) : Error(msg) {}
};

struct AxiomViolation : Error {
    explicit AxiomViolation(const std::string& msg) : Error(msg) {}
};

struct NilpotencyBoundExceeded : Error {
    explicit NilpotencyBoundExceeded(const std::string& msg) : Error(msg) {}
};

struct NotACycle : Error {
    explicit NotACycle(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& msg) : Error(msg) {}
};

} // namespace dgla
