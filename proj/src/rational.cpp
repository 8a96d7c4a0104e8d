#include "isoclass/rational.hpp"

#include <stdexcept>

namespace isoclass {

std::string to_fraction_string(const Rational& r) {
    return num(r).str() + "/" + den(r).str();
}

Rational parse_fraction(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        const std::string n = s.substr(0, slash);
        const std::string d = s.substr(slash + 1);
        if (n.empty() || d.empty()) throw std::invalid_argument("malformed rational literal: " + s);
        BigInt dv(d);
        if (dv == 0) throw std::invalid_argument("zero denominator: " + s);
        return Rational(BigInt(n)) / Rational(dv);
    } catch (const std::runtime_error&) {
        // cpp_int rejects non-numeric text with runtime_error; report it as a bad argument
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational pow_rational(const Rational& base, long exp) {
    using boost::multiprecision::pow;
    if (exp == 0) return Rational(1);
    const bool invert = exp < 0;
    const unsigned k = static_cast<unsigned>(invert ? -exp : exp);
    BigInt n = pow(num(base), k);
    BigInt d = pow(den(base), k);
    if (invert) {
        if (n == 0) throw std::domain_error("zero base with negative exponent");
        return Rational(d) / Rational(n);
    }
    return Rational(n) / Rational(d);
}

}  // namespace isoclass
