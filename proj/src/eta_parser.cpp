#include "qseries/eta_parser.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace qseries {

ParseError::ParseError(std::size_t position, const std::string& message)
    : SeriesError("parse error at position " + std::to_string(position) + ": " + message),
      position_(position),
      detail_(message)
{
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    EtaQuotient parse()
    {
        skip_space();
        if (at_end()) fail("empty expression");
        parse_term(+1);
        while (true) {
            skip_space();
            if (at_end()) break;
            const char op = text_[pos_];
            if (op != '*' && op != '/') fail(std::string("expected '*' or '/', found '") + op + "'");
            ++pos_;
            skip_space();
            if (at_end()) fail("expected a term after '" + std::string(1, op) + "'");
            parse_term(op == '*' ? +1 : -1);
        }
        return EtaQuotient(q_power_, factors_);
    }

private:
    void parse_term(int sign)
    {
        const char c = text_[pos_];
        if (c == 'q') {
            ++pos_;
            q_power_ += sign * optional_power();
        } else if (c == 'f') {
            ++pos_;
            skip_space();
            const std::size_t at = pos_;
            const std::int64_t scale = unsigned_int("scale after 'f'");
            if (scale < 1) fail_at(at, "eta scale must be >= 1");
            factors_.push_back({scale, sign * optional_power()});
        } else {
            fail(std::string("expected 'q' or 'f', found '") + c + "'");
        }
    }

    std::int64_t optional_power()
    {
        skip_space();
        if (at_end() || text_[pos_] != '^') return 1;
        ++pos_;
        skip_space();
        bool negative = false;
        if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
            skip_space();
        }
        const std::int64_t v = unsigned_int("exponent after '^'");
        return negative ? -v : v;
    }

    std::int64_t unsigned_int(const std::string& what)
    {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected " + what);
        }
        const std::size_t start = pos_;
        std::int64_t v = 0;
        constexpr std::int64_t limit = std::numeric_limits<std::int32_t>::max();
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > limit) fail_at(start, "integer too large");
            ++pos_;
        }
        return v;
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const
    {
        throw ParseError(at, msg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::int64_t q_power_ = 0;
    std::vector<EtaFactor> factors_;
};

} // namespace

EtaQuotient parse_eta_quotient(std::string_view text) { return Parser(text).parse(); }

std::string annotate_parse_error(std::string_view text, const ParseError& err)
{
    std::string out = "error: " + err.detail() + " (position " + std::to_string(err.position()) + ")\n";
    out += "  " + std::string(text) + "\n";
    out += "  " + std::string(err.position(), ' ') + "^\n";
    return out;
}

} // namespace qseries
