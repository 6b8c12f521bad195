#ifndef POLYID_ERRORS_HPP
#define POLYID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyid {

enum class Errc {
    EmptyInput,
    Disconnected,
    RaggedGrid,
    InconsistentQ,
    InfeasibleDims,
    NotConvex,
    BoundaryTouch,
    OutOfScope,
    ResourceLimit,
    Overflow,
    NotAnInnerInterval,
    VerticesNotInSupport,
    DegreeTooLow,
    NotInKernel,
    IoFailure,
    BadArgument,
};

const char* errc_name(Errc c);

/// All library failures are reported through this exception type; code() tells callers
/// (and the CLI exit-code mapping) which contract was violated.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// Checked coordinate/exponent arithmetic. Instances are desk scale; hitting one of
// these means the input is out of contract, not that we need wider integers.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) fail(Errc::Overflow, "integer add overflow");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Errc::Overflow, "integer mul overflow");
    return r;
}

}  // namespace polyid

#endif
