#include "ihz/exactnum.hpp"

#include <cctype>

namespace ihz {

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw DomainError("division by zero: " + to_string(num) + "/0");
    return Rat(num) / Rat(den);
}

Int numer(const Rat& q) { return boost::multiprecision::numerator(q); }
Int denom(const Rat& q) { return boost::multiprecision::denominator(q); }

Rat rat_arith(const Rat& a, const Rat& b, RatOp op) {
    switch (op) {
    case RatOp::Add: return a + b;
    case RatOp::Sub: return a - b;
    case RatOp::Mul: return a * b;
    case RatOp::Div:
        if (b == 0)
            throw DomainError("division by zero: " + to_string(a) + " / 0");
        return a / b;
    }
    throw DomainError("unknown rational operation");
}

std::string to_string(const Int& n) { return n.str(); }

std::string to_string(const Rat& q) {
    Int d = denom(q);
    if (d == 1)
        return numer(q).str();
    return numer(q).str() + "/" + d.str();
}

Int parse_int(std::string_view text) {
    if (text.empty())
        throw ParseError("empty integer literal");
    size_t i = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size())
        throw ParseError("sign without digits in integer literal");
    for (size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw ParseError("bad integer literal '" + std::string(text) + "'");
    // Skip leading zeros: the bignum constructor would read them as octal.
    while (i + 1 < text.size() && text[i] == '0')
        ++i;
    Int v{std::string(text.substr(i))};
    return negative ? Int(-v) : v;
}

Rat parse_rat(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_int(text));
    Int p = parse_int(text.substr(0, slash));
    Int q = parse_int(text.substr(slash + 1));
    return make_rat(p, q);
}

std::pair<std::vector<Int>, Int> clear_denominators(const std::vector<Rat>& v) {
    Int d = 1;
    for (const Rat& x : v)
        d = lcm(d, denom(x));
    std::vector<Int> w;
    w.reserve(v.size());
    Int g = 0;
    for (const Rat& x : v) {
        Rat scaled = x * Rat(d);
        w.push_back(numer(scaled)); // exact: d kills the denominator
        g = gcd(g, w.back());
    }
    if (g > 1) {
        for (Int& x : w)
            x /= g;
        d /= gcd(d, g);
    }
    return {std::move(w), d};
}

} // namespace ihz
