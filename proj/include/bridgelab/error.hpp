#pragma once

#include <stdexcept>
#include <string>

namespace bridgelab {

enum class Errc {
    SpaceMismatch,
    ArityMismatch,
    CircuitOutOfClass,
    NonEnumerableSpace,
    SchemeMismatch,
    KeyBundleMismatch,
    DivisibilityViolation,
    OddKeyLength,
    WrongKeyMode,
    InvalidMessagePair,
    ShapeMismatch,
    UnknownId,
    ParseError,
    InvalidParams,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace bridgelab
