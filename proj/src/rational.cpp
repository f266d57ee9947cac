#include "pl/rational.hpp"

#include <cctype>

#include "pl/errors.hpp"

namespace pl {

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw Error("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!valid_integer(den) || den[0] == '+' || den[0] == '-')
            throw ParseError("bad rational '" + std::string(text) + "': denominator must be a positive integer");
    }
    if (!valid_integer(num))
        throw ParseError("bad rational '" + std::string(text) + "'");
    mpq_class v(std::string(text), 10);
    if (!den.empty() && v.get_den() == 0)
        throw ParseError("bad rational '" + std::string(text) + "': zero denominator");
    if (sgn(v.get_den()) == 0)
        throw ParseError("bad rational '" + std::string(text) + "': zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace pl
