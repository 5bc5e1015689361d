#include "meyerlab/rational.hpp"

#include <cctype>

namespace meyerlab::exactnum {

std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    std::size_t slash = text.find('/');
    auto check_int = [&](const std::string& part, bool allow_sign) {
        if (part.empty()) throw ParseError("bad rational literal: " + text);
        std::size_t i = 0;
        if (allow_sign && (part[0] == '+' || part[0] == '-')) i = 1;
        if (i == part.size()) throw ParseError("bad rational literal: " + text);
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("bad rational literal: " + text);
    };
    try {
        if (slash == std::string::npos) {
            check_int(text, true);
            return Rational(Int(text));
        }
        std::string n = text.substr(0, slash);
        std::string d = text.substr(slash + 1);
        check_int(n, true);
        check_int(d, false);
        Int dd(d);
        if (dd == 0) throw ParseError("zero denominator: " + text);
        return Rational(Int(n), dd);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + text);
    }
}

}  // namespace meyerlab::exactnum
