#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

#include "q8nichols/error.hpp"

namespace q8n {

// Exact rationals are GMP's mpq_class, kept canonical (lowest terms,
// positive denominator). These helpers exist so parsing is strict and
// reports positions, which mpq_class's own constructor does not.

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Parses [+-]?digits(/digits)? starting at `pos` inside `text`; advances
// `pos` past the consumed characters.
inline mpq_class parse_rational_at(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    std::string buf;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        buf += text[pos];
        ++pos;
    }
    if (pos >= text.size() || !is_digit(text[pos]))
        throw ParseError("expected a number", pos);
    while (pos < text.size() && is_digit(text[pos])) buf += text[pos++];
    if (pos < text.size() && text[pos] == '/') {
        buf += text[pos++];
        if (pos >= text.size() || !is_digit(text[pos]))
            throw ParseError("expected a denominator after '/'", pos);
        std::string den;
        while (pos < text.size() && is_digit(text[pos])) den += text[pos++];
        if (den.find_first_not_of('0') == std::string::npos)
            throw ParseError("zero denominator", start);
        buf += den;
    }
    mpq_class q(buf);
    q.canonicalize();
    return q;
}

inline mpq_class parse_rational(std::string_view text) {
    std::size_t pos = 0;
    mpq_class q = parse_rational_at(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters after number", pos);
    return q;
}

inline std::string format_rational(const mpq_class& q) {
    return q.get_str();
}

} // namespace q8n
