#pragma once

#include <stdexcept>
#include <string>

namespace critex {

enum class Errc {
    invalid_digit,
    zero_denominator,
    incompatible,
    out_of_range,
    undefined_gamma,
    empty_language,
    finite_language,
    syntax,
    unknown_identifier,
    invalid_input,
    limit_exceeded,
    internal,
};

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

const char* errc_name(Errc code) noexcept;

}  // namespace critex
