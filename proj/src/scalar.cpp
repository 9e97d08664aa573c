#include "qpb/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace qpb {

ExactC& ExactC::operator/=(const ExactC& o) {
    Rat n = o.abs2();
    if (n == 0) throw NumericError("division by zero scalar");
    // 1/(a+bi) = (a-bi)/|a+bi|^2
    Rat r = (re * o.re + im * o.im) / n;
    Rat i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

ExactC inverse(const ExactC& z) {
    if (z.is_zero()) throw NumericError("inverse of zero scalar");
    ExactC one(1);
    return one /= z;
}

ApproxC to_approx(const ExactC& z) {
    return ApproxC(rat_to_double(z.re), rat_to_double(z.im));
}

Int snap_denominator_bound() {
    static const Int bound = [] {
        if (const char* env = std::getenv("QPB_MAX_DENOM")) {
            try {
                Int b(env);
                if (b >= 1) return b;
            } catch (...) {
                // fall through to the default on malformed input
            }
        }
        return Int(10000);
    }();
    return bound;
}

ExactC from_approx(const ApproxC& z, double tol) {
    Int bound = snap_denominator_bound();
    return ExactC(snap_rat(z.real(), tol, bound), snap_rat(z.imag(), tol, bound));
}

ExactC exact_from_components(double re, double im) {
    return ExactC(rat_from_double(re), rat_from_double(im));
}

std::string format_exact(const ExactC& z) {
    auto imag_body = [&](const Rat& v) -> std::string {
        Rat a = v < 0 ? -v : v;
        return a == 1 ? "i" : format_rat(a) + "i";
    };
    if (z.im == 0) return format_rat(z.re);
    if (z.re == 0) return (z.im < 0 ? "-" : "") + imag_body(z.im);
    return format_rat(z.re) + (z.im < 0 ? "-" : "+") + imag_body(z.im);
}

ExactC parse_exact(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw ParseError("empty scalar literal");

    // A canonical literal contains at most one sign past position 0:
    // the separator between the real and imaginary halves.
    std::size_t sep = std::string::npos;
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (t[i] == '+' || t[i] == '-') {
            if (sep != std::string::npos)
                throw ParseError("malformed scalar literal '" + text + "'");
            sep = i;
        }
    }

    auto parse_imag = [&](std::string body) -> Rat {
        // body ends with 'i'; the bare unit means 1.
        body.pop_back();
        if (body.empty() || body == "+") return Rat(1);
        if (body == "-") return Rat(-1);
        return parse_rat(body);
    };

    if (sep == std::string::npos) {
        if (t.back() == 'i') return ExactC(Rat(0), parse_imag(t));
        return ExactC(parse_rat(t));
    }
    std::string left = t.substr(0, sep);
    std::string right = t.substr(sep); // keeps the sign
    if (right.back() != 'i')
        throw ParseError("expected imaginary tail in '" + text + "'");
    if (left.back() == 'i')
        throw ParseError("two imaginary parts in '" + text + "'");
    return ExactC(parse_rat(left), parse_imag(right));
}

} // namespace qpb
