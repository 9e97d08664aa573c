#pragma once

#include <array>
#include <string>

#include "qpb/scalar.hpp"

namespace qpb {

/// Which of the two hermitian structures / Hodge operators to use.
enum class Side { left, right };

/// Homogeneous differential form on the two-point space M = {x0, x1}.
///
/// Every degree happens to be two-dimensional, so a form is a degree tag
/// plus two exact coefficients against the standard basis:
///   degree 0: (value at x0, value at x1)
///   degree 1: coefficients of the two arrow directions (x0->x1, x1->x0)
///   degree 2: coefficients of the two round trips (based at x0, at x1)
/// Degrees above 2 vanish identically; operations that would land there
/// return the zero form.
struct BaseForm {
    int degree = 0;
    std::array<ExactC, 2> c{};

    BaseForm() = default;
    BaseForm(int deg, ExactC c0, ExactC c1);

    /// Degree-0 form (function) with the given point values.
    static BaseForm fn(ExactC at_x0, ExactC at_x1);
    /// Degree-1 form with the given arrow coefficients.
    static BaseForm one_form(ExactC c01, ExactC c10);
    /// Degree-2 form with the given round-trip coefficients.
    static BaseForm two_form(ExactC v0, ExactC v1);
    static BaseForm zero(int degree);

    /// Constant function 1 (the algebra unit).
    static BaseForm unit();
    /// Indicator function of point k.
    static BaseForm point(int k);
    /// Normalized volume form (integrates to 1).
    static BaseForm dvol();

    bool is_zero() const { return c[0].is_zero() && c[1].is_zero(); }

    BaseForm operator-() const;
    friend BaseForm operator+(const BaseForm& a, const BaseForm& b);
    friend BaseForm operator-(const BaseForm& a, const BaseForm& b);
    friend BaseForm operator*(const ExactC& s, const BaseForm& a);
    /// Graded product; degrees summing past 2 give zero.
    friend BaseForm operator*(const BaseForm& a, const BaseForm& b);
    /// Zero forms compare equal regardless of their degree tag.
    friend bool operator==(const BaseForm& a, const BaseForm& b);
    friend bool operator!=(const BaseForm& a, const BaseForm& b) { return !(a == b); }
};

/// Differential. Raises degree by one; vanishes on top degree.
BaseForm d(const BaseForm& a);

/// The *-structure (antilinear involution, graded antimultiplicative).
BaseForm star(const BaseForm& a);

/// Integral of a top-degree form; throws DomainError on other degrees.
ExactC integral(const BaseForm& a);

/// Degree-0 density of the hermitian pairing of two same-degree forms.
/// The left structure is linear in `a` and conjugates `b`;
/// the right structure conjugates `a` and is linear in `b`.
BaseForm herm(const BaseForm& a, const BaseForm& b, Side side);

/// Scalar inner product: the integral of herm(a, b, side) against dvol.
ExactC inner(const BaseForm& a, const BaseForm& b, Side side);

/// Hodge operator for the chosen structure. An involution on every degree.
BaseForm hodge(const BaseForm& a, Side side);

/// Codifferential hodge . d . hodge; lowers degree, vanishes on degree 0.
BaseForm codiff(const BaseForm& a, Side side);

std::string format_base(const BaseForm& a);

} // namespace qpb
