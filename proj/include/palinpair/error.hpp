#pragma once

#include <stdexcept>
#include <string>

namespace palinpair {

enum class errc {
    invalid_argument,
    invalid_digit,
    empty_input,
    base_mismatch,
    precondition,
    verification_failed,
    io,
    digest_mismatch,
    parse,
    unknown_kind,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace palinpair
