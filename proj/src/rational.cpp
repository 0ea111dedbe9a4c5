#include "prook/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace prook {

std::string rational_to_string(const Rational& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1)
        return num;
    return num + "/" + denominator(r).str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational rational_from_string(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s;
    std::string_view den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational: expected p or p/q");
    Integer p{std::string(num)};
    Integer q{std::string(den)};
    if (q == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational r(p, q);
    return negative ? Rational(-r) : r;
}

} // namespace prook
