#ifndef M0NLAB_ERRORS_HPP
#define M0NLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace m0nlab {

struct InvalidLabel : std::invalid_argument {
    explicit InvalidLabel(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidDivisorLabel : std::invalid_argument {
    explicit InvalidDivisorLabel(const std::string& what) : std::invalid_argument(what) {}
};

struct PreconditionViolation : std::invalid_argument {
    explicit PreconditionViolation(const std::string& what) : std::invalid_argument(what) {}
};

struct DegreeError : std::invalid_argument {
    explicit DegreeError(const std::string& what) : std::invalid_argument(what) {}
};

struct NonIntegralChernClass : std::runtime_error {
    explicit NonIntegralChernClass(const std::string& what) : std::runtime_error(what) {}
};

struct HardLefschetzFailure : std::runtime_error {
    explicit HardLefschetzFailure(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a sequence constructor demands an F-nef certificate and the
// candidate divisor pairs negatively with some F-curve.
struct FNefViolation : std::runtime_error {
    explicit FNefViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace m0nlab

#endif
