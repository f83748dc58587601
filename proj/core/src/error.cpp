#include "critex/error.hpp"

namespace critex {

const char* errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::invalid_digit: return "invalid-digit";
    case Errc::zero_denominator: return "zero-denominator";
    case Errc::incompatible: return "incompatible";
    case Errc::out_of_range: return "out-of-range";
    case Errc::undefined_gamma: return "undefined-gamma";
    case Errc::empty_language: return "empty-language";
    case Errc::finite_language: return "finite-language";
    case Errc::syntax: return "syntax";
    case Errc::unknown_identifier: return "unknown-identifier";
    case Errc::invalid_input: return "invalid-input";
    case Errc::limit_exceeded: return "limit-exceeded";
    case Errc::internal: return "internal";
    }
    return "unknown";
}

}  // namespace critex
