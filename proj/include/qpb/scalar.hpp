#pragma once

#include <complex>
#include <string>

#include "qpb/rational.hpp"

namespace qpb {

/// Floating-point complex scalar used by the numerical layer.
using ApproxC = std::complex<double>;

/// Exact complex scalar with rational real and imaginary parts.
/// This is the coefficient field for every algebraic structure here:
/// all products, differentials and inner products stay exact.
struct ExactC {
    Rat re{0};
    Rat im{0};

    ExactC() = default;
    ExactC(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit ExactC(Rat r) : re(std::move(r)) {}
    explicit ExactC(int n) : re(n) {}
    ExactC(int r, int i) : re(r), im(i) {}

    static ExactC zero() { return ExactC(); }
    static ExactC one() { return ExactC(1); }
    static ExactC i_unit() { return ExactC(0, 1); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    ExactC conj() const { return ExactC(re, -im); }
    /// |z|^2 as an exact rational.
    Rat abs2() const { return re * re + im * im; }

    ExactC operator-() const { return ExactC(-re, -im); }
    ExactC& operator+=(const ExactC& o) { re += o.re; im += o.im; return *this; }
    ExactC& operator-=(const ExactC& o) { re -= o.re; im -= o.im; return *this; }
    ExactC& operator*=(const ExactC& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    ExactC& operator/=(const ExactC& o);

    friend ExactC operator+(ExactC a, const ExactC& b) { return a += b; }
    friend ExactC operator-(ExactC a, const ExactC& b) { return a -= b; }
    friend ExactC operator*(ExactC a, const ExactC& b) { return a *= b; }
    friend ExactC operator/(ExactC a, const ExactC& b) { return a /= b; }
    friend bool operator==(const ExactC& a, const ExactC& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactC& a, const ExactC& b) { return !(a == b); }
};

/// Multiplicative inverse; throws NumericError on zero.
ExactC inverse(const ExactC& z);

ApproxC to_approx(const ExactC& z);

/// Recover an exact scalar from a floating value: each part is snapped to
/// the nearest rational with denominator <= bound within `tol`.
/// The default bound (10000) can be overridden with the QPB_MAX_DENOM
/// environment variable. Throws NumericError when no such rational exists.
ExactC from_approx(const ApproxC& z, double tol = 1e-9);

/// Exact dyadic image of a floating value (no snapping, no tolerance).
ExactC exact_from_components(double re, double im);

/// Denominator bound used by from_approx (env QPB_MAX_DENOM or 10000).
Int snap_denominator_bound();

/// Canonical text form: "3", "-1/2", "i", "-i", "1/2+3/4i", "2-5i".
std::string format_exact(const ExactC& z);

/// Parse the canonical form (whitespace-tolerant).
ExactC parse_exact(const std::string& text);

} // namespace qpb
