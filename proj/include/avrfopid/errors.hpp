#pragma once

#include <stdexcept>
#include <string>

namespace avrfopid {

struct PoleOnAxisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateLoopError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularResponseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoGainCrossoverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ImproperSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace avrfopid
