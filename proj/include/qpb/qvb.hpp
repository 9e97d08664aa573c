#pragma once

#include "qpb/base_form.hpp"
#include "qpb/connection.hpp"
#include "qpb/group.hpp"
#include "qpb/total_form.hpp"

namespace qpb {

/// Section of the line bundle associated to a one-dimensional corep:
/// a base function against the canonical trivialization.
struct Section {
    Corep corep = Corep::trivial;
    BaseForm value; // degree 0

    Section() : value(BaseForm::zero(0)) {}
    Section(Corep r, BaseForm v);

    /// The section as a horizontal equivariant form on the total space.
    TotalForm horizontal_form() const;

    friend bool operator==(const Section& a, const Section& b) {
        return a.corep == b.corep && a.value == b.value;
    }
    friend bool operator!=(const Section& a, const Section& b) { return !(a == b); }
};

/// Bundle-valued form: a base form of some degree carrying the corep label
/// and the module side its coefficients act from.
struct VForm {
    Corep corep = Corep::trivial;
    Side side = Side::left;
    BaseForm comp; // degree 0, 1 or 2

    VForm() : comp(BaseForm::zero(0)) {}
    VForm(Corep r, Side s, BaseForm c) : corep(r), side(s), comp(std::move(c)) {}

    int degree() const { return comp.degree; }

    friend bool operator==(const VForm& a, const VForm& b) {
        return a.corep == b.corep && a.side == b.side && a.comp == b.comp;
    }
    friend bool operator!=(const VForm& a, const VForm& b) { return !(a == b); }
};

/// Covariant derivative of a section in the left module structure.
VForm nabla(const Connection& conn, const Section& s);

/// Covariant derivative of a section in the right module structure.
VForm nabla_hat(const Connection& conn, const Section& s);

/// Degree-raising extension of the covariant derivative to bundle-valued
/// forms (restricts to nabla / nabla_hat on degree 0).
VForm ext_deriv(const Connection& conn, const VForm& v);

/// Adjoint of ext_deriv with respect to the extended inner products,
/// realized as the calibrated star-Hodge composite. Lowers the degree.
VForm adjoint_ext_deriv(const Connection& conn, const VForm& v);

/// Laplacian on sections: adjoint_ext_deriv . nabla (or nabla_hat).
VForm laplacian(const Connection& conn, const Section& s, Side side);

/// Multiplication field of the connection direction nu against a section:
/// zero for the trivial corep; for the sign corep, 2 p nu on the left and
/// 2 nu* p on the right.
VForm k_field(const BaseForm& nu, const Section& s, Side side);

/// Extended inner product of two bundle-valued forms (same corep, side
/// and degree; throws DomainError otherwise).
ExactC vform_inner(const VForm& a, const VForm& b);

} // namespace qpb
