#pragma once

#include "qpb/base_form.hpp"
#include "qpb/total_form.hpp"

namespace qpb {

/// Principal connection on the bundle. It is determined by two exact
/// scalars: its value on the canonical invariant one-form of the group is
///   mu (x) 1 + 1 (x) (invariant one-form),
/// where mu = lambda0 * (arrow x0->x1) + lambda1 * (arrow x1->x0).
/// Every connection here is regular and multiplicative.
struct Connection {
    ExactC lambda0;
    ExactC lambda1;

    Connection() = default;
    Connection(ExactC l0, ExactC l1) : lambda0(std::move(l0)), lambda1(std::move(l1)) {}

    /// The base one-form part of the connection.
    BaseForm mu() const { return BaseForm::one_form(lambda0, lambda1); }

    /// Value of the connection on the canonical invariant one-form.
    TotalForm form() const;

    /// Affine chart in which flatness reads chart_a * chart_b = 1.
    ExactC chart_a() const { return ExactC::one() + ExactC(0, 2) * lambda0; }
    ExactC chart_b() const { return ExactC::one() + ExactC(0, 2) * lambda1; }

    bool is_flat() const;

    /// The zero connection (a flat point).
    static Connection trivial() { return Connection(ExactC::zero(), ExactC::zero()); }
    /// The distinguished non-flat critical point of the Yang-Mills action,
    /// lambda = (i/2, i/2).
    static Connection yang_mills();

    friend bool operator==(const Connection& a, const Connection& b) {
        return a.lambda0 == b.lambda0 && a.lambda1 == b.lambda1;
    }
    friend bool operator!=(const Connection& a, const Connection& b) { return !(a == b); }
};

/// Curvature coefficient u: the curvature form is u * (both round trips).
/// Closed polynomial: u = -(l0 + l1) - 2i l0 l1 = i (chart_a chart_b - 1)/2.
ExactC curvature_scalar(const Connection& conn);

/// Curvature as a base two-form, computed through the calculus
/// (d mu - 2 mu mu). Must agree with curvature_scalar on both components.
BaseForm curvature(const Connection& conn);

/// The second fundamental scalar: lambda1 completing lambda0 to a flat
/// connection. Throws NumericError at the unique pole lambda0 = i/2.
ExactC flat_completion(const ExactC& lambda0);

/// Covariant derivative of a horizontal form. Throws DomainError when the
/// argument is not horizontal; the result is horizontal again.
TotalForm cov_deriv(const Connection& conn, const TotalForm& w);

/// Derivative of the connection-direction field nu (degree 0, 1 or 2):
/// 2 (mu nu - (-1)^{deg nu} nu mu).
BaseForm s_op(const Connection& conn, const BaseForm& nu);

} // namespace qpb
