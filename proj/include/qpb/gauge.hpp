#pragma once

#include <array>
#include <string>

#include "qpb/connection.hpp"
#include "qpb/qvb.hpp"
#include "qpb/total_form.hpp"

namespace qpb {

/// Gauge transformation: a grade-preserving linear map from the group
/// calculus into the bundle calculus, stored by its values on the six
/// group basis elements. value[deg][idx] is the image of basis element
/// (deg, idx), homogeneous of total degree deg.
///
/// Validity (validate_gauge) further requires normalization f(1) = 1 and
/// covariance against the translation map. The conjugation coaction of
/// this order-two structure group is trivial, so covariance reads
/// psi(f(q)) = f(q) (x) 1 on the basis; equivalently every value lies in
/// the base calculus tensored with the group unit.
struct GaugeMap {
    std::array<std::array<TotalForm, 2>, 3> value{};

    /// Image of an arbitrary group form (linear extension).
    TotalForm apply(const GroupForm& q) const;

    friend bool operator==(const GaugeMap& a, const GaugeMap& b);
    friend bool operator!=(const GaugeMap& a, const GaugeMap& b) { return !(a == b); }
};

/// Group basis element (deg, idx) as a form.
GroupForm group_basis(int deg, int idx);

/// Convolution unit: the counit times the algebra unit, extended by zero
/// to degrees >= 1.
GaugeMap gauge_unit();

/// The gauge transformation induced by the nontrivial group element:
/// evaluation there on functions, zero on degrees >= 1. Convolution
/// involutive; negates sign-corep sections.
GaugeMap gauge_involution();

/// Unit-modulus phase transformation: sends the sign character to c times
/// the unit. Throws DomainError unless |c| = 1 exactly.
GaugeMap gauge_phase(const ExactC& c);

/// Throws DomainError naming the violated gauge invariant, if any.
void validate_gauge(const GaugeMap& f);
bool is_gauge(const GaugeMap& f);

/// Convolution product: multiply the two images of the extended-coproduct
/// legs. Associative, with unit gauge_unit().
GaugeMap convolve(const GaugeMap& f1, const GaugeMap& f2);

/// Two-sided convolution inverse via an exact linear solve on the 48
/// stored coefficients. Throws DomainError when f is not convolution
/// invertible.
GaugeMap conv_inverse(const GaugeMap& f);

/// The induced bundle operator: multiply a total form's translation-map
/// legs through f.
TotalForm gauge_transform(const GaugeMap& f, const TotalForm& w);

/// Action on a connection: the induced operator applied to the connection
/// form, which lands on the connection form of the result. Validates f
/// and the shape of the image.
Connection gauge_action(const GaugeMap& f, const Connection& conn);

/// Action on sections: the induced operator on the left, its star
/// conjugate on the right.
Section gauge_action(const GaugeMap& f, const Section& s, Side side);

/// Membership in the stabilizer subgroup fixing every connection,
/// equivalently the zero connection: the degree-1 values sum to zero.
bool in_gg_ym(const GaugeMap& f);

std::string format_gauge(const GaugeMap& f);

} // namespace qpb
