#include "qpb/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>

namespace qpb {

Rat make_rat(Int num, Int den) {
    if (den == 0) throw NumericError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

Int parse_int(const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) throw ParseError("empty integer literal");
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw ParseError("sign without digits in '" + t + "'");
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            throw ParseError("bad integer literal '" + t + "'");
    return Int(t[0] == '+' ? t.substr(1) : t); // cpp_int rejects a leading '+'
}

Int rat_floor(const Rat& r) {
    Int q = numerator(r) / denominator(r); // truncates toward zero
    if (r < 0 && Rat(q) != r) q -= 1;
    return q;
}

} // namespace

Rat parse_rat(const std::string& text) {
    std::string t = strip(text);
    std::size_t slash = t.find('/');
    if (slash == std::string::npos) return Rat(parse_int(t));
    Int num = parse_int(t.substr(0, slash));
    Int den = parse_int(t.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + t + "'");
    return make_rat(num, den);
}

std::string format_rat(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw NumericError("non-finite double");
    if (x == 0.0) return Rat(0);
    int exp = 0;
    // mant in [0.5, 1), x = mant * 2^exp; 53 shifts make the mantissa integral.
    double mant = std::frexp(x, &exp);
    std::int64_t m = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rat r{Int(m)};
    if (exp > 0)
        r *= Rat(Int(1) << exp);
    else if (exp < 0)
        r /= Rat(Int(1) << (-exp));
    return r;
}

double rat_to_double(const Rat& r) {
    return static_cast<double>(r);
}

Rat snap_rat(double x, double tol, const Int& max_den) {
    if (!std::isfinite(x)) throw NumericError("cannot snap non-finite value");
    if (tol < 0) throw NumericError("negative snap tolerance");
    if (max_den < 1) throw NumericError("denominator bound must be positive");

    // Walk continued-fraction convergents of the exact dyadic value of x
    // and return the first one inside the tolerance band.
    Rat target = rat_from_double(x);
    Int h_prev = 0, k_prev = 1;
    Int h = 1, k = 0; // seed pair; first iteration yields floor(x)/1
    Rat rem = target;
    bool have_convergent = false;

    for (int step = 0; step < 128; ++step) {
        Int a = rat_floor(rem);
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        if (k_next > max_den) break;
        h_prev = h; k_prev = k;
        h = h_next; k = k_next;
        have_convergent = true;
        Rat conv = make_rat(h, k);
        if (std::abs(rat_to_double(conv) - x) <= tol) return conv;
        Rat frac = rem - Rat(a);
        if (frac == 0) break; // expansion terminated; conv == target already tested
        rem = Rat(1) / frac;
    }
    if (have_convergent) {
        Rat best = make_rat(h, k);
        if (std::abs(rat_to_double(best) - x) <= tol) return best;
    }
    throw NumericError("no rational within tolerance (denominator bound reached)");
}

} // namespace qpb
