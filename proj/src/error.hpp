#ifndef CREMONA_ERROR_HPP
#define CREMONA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cremona {

enum class Err {
    InvalidArgument,
    WrongLength,
    NegativeEntry,
    EmptyMultiIndex,
    TooFewPoints,
    DegreeTooSmall,
    NotOneIrreducible,
    OutOfRange,
    BoundViolation,
    DegreeMismatch,
    ZeroDegree,
    AllZero,
    SingularMatrix,
    SpecialPosition,
    NotAdmissible,
    CollinearCenters,
    CoincidentCenters,
    MultiplicityMismatch,
    InfinitelyNearUnsupported,
    ParseError,
    IoError,
    Internal,
};

// Single exception type for the whole library; `code` tells callers (and the
// C API) which contract was violated, `detail` carries a small integer payload
// (e.g. the actual interpolation dimension for SpecialPosition).
class Error : public std::runtime_error {
public:
    Error(Err code, std::string message, long long detail = 0)
        : std::runtime_error(std::move(message)), code_(code), detail_(detail) {}

    Err code() const noexcept { return code_; }
    long long detail() const noexcept { return detail_; }

private:
    Err code_;
    long long detail_;
};

[[noreturn]] inline void fail(Err code, const std::string& message, long long detail = 0) {
    throw Error(code, message, detail);
}

} // namespace cremona

#endif
