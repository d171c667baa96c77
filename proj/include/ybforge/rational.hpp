#ifndef YBFORGE_RATIONAL_HPP
#define YBFORGE_RATIONAL_HPP

#include <ybforge/errors.hpp>

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

namespace ybforge {

// GMP keeps every mpq_class in canonical form (reduced, positive
// denominator, zero as 0/1) after each arithmetic operation.
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// Canonical text form: "p/q", or "p" when q = 1.
inline std::string to_string(const Rat& r) { return r.get_str(); }

/// Parses "p", "-p", "p/q". Rejects zero denominators, whitespace and
/// anything that is not a plain decimal integer or quotient of two.
inline Rat parse_rat(std::string_view text)
{
    auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t pos = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) pos = 1;
        if (pos == s.size()) return false;
        for (; pos < s.size(); ++pos)
            if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
        return true;
    };

    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw ParseError("not a rational: '" + std::string(text) + "'");

    std::string num_s(num);
    if (num_s[0] == '+') num_s.erase(0, 1);
    mpz_class n(num_s, 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

} // namespace ybforge

#endif // YBFORGE_RATIONAL_HPP
