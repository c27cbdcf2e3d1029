#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qseries/eta.hpp"

namespace qseries {

/// Malformed eta-quotient text. position() is a 0-based character offset.
class ParseError : public SeriesError {
public:
    ParseError(std::size_t position, const std::string& message);

    std::size_t position() const { return position_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

/*
 * Parses
 *
 *   expr := term (("*" | "/") term)*
 *   term := "q" ["^" signed-int] | "f" unsigned-int ["^" signed-int]
 *
 * with whitespace ignored between tokens. "/" divides by the next term only.
 */
EtaQuotient parse_eta_quotient(std::string_view text);

/// Renders a caret line under `text` pointing at the error position.
std::string annotate_parse_error(std::string_view text, const ParseError& err);

} // namespace qseries
