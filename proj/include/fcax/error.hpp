#pragma once

#include <stdexcept>
#include <string>

namespace fcax {

enum class ErrorCode {
    Parse,           // malformed input text
    Name,            // unknown object/attribute name
    Cycle,           // declared preference pairs are not a strict order
    Arity,           // postulate instantiation has the wrong number of sets
    Limit,           // instance exceeds a documented size bound
    Argument,        // mismatched universes, bad flag combinations
    OracleMismatch,  // cross-check against the brute-force oracle failed
    Internal,        // invariant tripwire; indicates a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) throw Error(code, message);
}

}  // namespace fcax
