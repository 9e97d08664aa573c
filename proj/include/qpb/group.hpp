#pragma once

#include <array>
#include <string>

#include "qpb/scalar.hpp"

namespace qpb {

/// Homogeneous form on the order-two structure group, degrees 0..2.
///
/// The group algebra is spanned by the indicators (u0, u1) of the two
/// group elements; its calculus is again two-dimensional in each degree:
///   degree 0: (coefficient of u0, coefficient of u1)
///   degree 1: the two unit arrows g01 = u0.du1 and g10 = u1.du0
///   degree 2: the two round trips g01 g10 and g10 g01
/// Unlike the base calculus, degree-1 products carry no extra factor,
/// the degree-1 differential has plus signs, and the *-structure negates
/// degrees 1 and 2.
struct GroupForm {
    int degree = 0;
    std::array<ExactC, 2> c{};

    GroupForm() = default;
    GroupForm(int deg, ExactC c0, ExactC c1);

    static GroupForm fn(ExactC a, ExactC b);
    static GroupForm one_form(ExactC a, ExactC b);
    static GroupForm two_form(ExactC a, ExactC b);
    static GroupForm zero(int degree);

    /// The algebra unit u0 + u1.
    static GroupForm unit();
    /// Indicator of group element k (0 = identity).
    static GroupForm delta(int k);
    /// The nontrivial character u0 - u1 (a group-like element).
    static GroupForm sign_character();
    /// The canonical invariant one-form g01 + g10.
    static GroupForm invariant_one_form();

    bool is_zero() const { return c[0].is_zero() && c[1].is_zero(); }

    GroupForm operator-() const;
    friend GroupForm operator+(const GroupForm& a, const GroupForm& b);
    friend GroupForm operator-(const GroupForm& a, const GroupForm& b);
    friend GroupForm operator*(const ExactC& s, const GroupForm& a);
    friend GroupForm operator*(const GroupForm& a, const GroupForm& b);
    friend bool operator==(const GroupForm& a, const GroupForm& b);
    friend bool operator!=(const GroupForm& a, const GroupForm& b) { return !(a == b); }
};

GroupForm d(const GroupForm& a);
GroupForm star(const GroupForm& a);

/// Counit: evaluation at the identity element. Degree 0 only.
ExactC counit(const GroupForm& a);

/// Antipode: pullback along inversion, the identity map for this group.
/// Degree 0 only.
GroupForm antipode(const GroupForm& a);

/// Element of the (degree-truncated) tensor square of the group calculus.
/// coeff[j1][j2][g1][g2] is the coefficient of basis(j1,g1) x basis(j2,g2);
/// blocks with j1 + j2 > 2 are identically zero.
struct GroupTensor {
    std::array<std::array<std::array<std::array<ExactC, 2>, 2>, 3>, 3> coeff{};

    bool is_zero() const;

    GroupTensor operator-() const;
    friend GroupTensor operator+(const GroupTensor& a, const GroupTensor& b);
    friend GroupTensor operator-(const GroupTensor& a, const GroupTensor& b);
    friend GroupTensor operator*(const ExactC& s, const GroupTensor& a);
    /// Graded product: (a x b)(c x e) = (-1)^{|b||c|} ac x be.
    friend GroupTensor operator*(const GroupTensor& a, const GroupTensor& b);
    friend bool operator==(const GroupTensor& a, const GroupTensor& b);
    friend bool operator!=(const GroupTensor& a, const GroupTensor& b) { return !(a == b); }
};

GroupTensor tensor(const GroupForm& a, const GroupForm& b);

/// Coproduct on functions (degree 0), dual to group multiplication.
GroupTensor coproduct(const GroupForm& a);

/// The degree-extended coproduct on the whole calculus: the unique
/// d-compatible graded-multiplicative extension of the coproduct.
GroupTensor coproduct_ext(const GroupForm& a);

/// Apply d x id + (-1)^{j1} id x d (the tensor-square differential).
GroupTensor d(const GroupTensor& t);

/// Left germ map: functions to invariant one-forms,
/// g -> antipode(g(1)) d(g(2)).
GroupForm germ(const GroupForm& a);

/// Right action of functions on germs, theta o b = antipode(b(1)) theta b(2).
GroupForm germ_compose(const GroupForm& theta, const GroupForm& b);

/// The two one-dimensional corepresentations of the structure group.
enum class Corep { trivial, alternating };

/// The group-like element implementing the corep (unit or sign character).
GroupForm corep_element(Corep r);

/// Character value at the nontrivial group element: +1 or -1.
int corep_sign(Corep r);

std::string format_group(const GroupForm& a);

} // namespace qpb
