#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpb/base_form.hpp"
#include "qpb/connection.hpp"
#include "qpb/qvb.hpp"

namespace qpb {

/// Scalar potential: a componentwise map on functions together with its
/// derivative. Two kinds: a polynomial with exact coefficients (formal
/// derivative), and the constant-slope family with derivative
/// diag(2 - 2y/x, 2 - 2x/y) for fixed nonzero real parameters x, y
/// (its value is the linear map with that slope).
struct Potential {
    enum class Kind { polynomial, constant_slope };

    Kind kind = Kind::polynomial;
    std::vector<ExactC> coeffs; // ascending powers, polynomial kind
    ExactC x, y;                // constant_slope parameters

    static Potential zero();
    static Potential polynomial(std::vector<ExactC> c);
    /// Throws DomainError unless x, y are real with x*y != 0.
    static Potential constant_slope(ExactC x, ExactC y);

    /// The constant derivative matrix of the constant_slope kind.
    BaseForm slope() const;

    BaseForm value(const BaseForm& p) const;      // degree 0 -> degree 0
    BaseForm derivative(const BaseForm& p) const; // degree 0 -> degree 0
};

/// Named vector of exact equation components; zero iff the equation the
/// components discretize is satisfied.
struct Residual {
    std::vector<std::pair<std::string, ExactC>> comps;

    void add(std::string name, ExactC v) { comps.emplace_back(std::move(name), std::move(v)); }
    bool is_zero() const;
};

/// The four stationarity residuals in the connection direction plus the
/// two section equations.
struct YmsmResiduals {
    Residual connection_direction;
    Residual left_section;
    Residual right_section;
};

/// Output of the closed-form component system for sign-corep sections:
/// the stationarity system in the connection direction and the match of
/// the closed-form Laplacian components against the operator pipeline.
struct AltSystem {
    Residual stationarity;
    Residual laplacian_match;
};

/// The real ℝ-basis of connection directions used by every residual:
/// both arrows and their i-multiples (so sesquilinear pairings that
/// vanish on the real span are still detected).
const std::vector<std::pair<std::string, BaseForm>>& direction_basis();

/// Curvature as a connection-direction-valued two-form, and its star
/// conjugate partner carried by the right structures.
BaseForm ad_curvature(const Connection& conn);
BaseForm conjugate_ad_curvature(const Connection& conn);

/// Right-structure analogue of s_op: the same operator ordering with the
/// connection coefficient replaced by its star conjugate,
/// 2 ((-1)^{deg nu} nu mu* - mu* nu). The sign is pinned by the
/// variational consistency of the stationarity pairing.
BaseForm s_hat_op(const Connection& conn, const BaseForm& nu);

/// Adjoint of (covariant derivative minus multiplication field) on
/// connection-direction-valued forms, computed through the Gram matrices
/// of the chosen inner products. Lowers degree; zero on degree 0.
BaseForm ad_codifferential(const Connection& conn, const BaseForm& w, Side side);

/// Yang-Mills Lagrangian density (a function on the base) and action.
/// Closed form: both components equal -|u|^2/2 for the curvature
/// coefficient u.
BaseForm lagrangian_ym(const Connection& conn);
ExactC action_ym(const Connection& conn);

/// Stationarity pairing of the Yang-Mills action against a degree-1
/// direction: the left bracket pairs the direction linearly, the right
/// bracket pairs its star conjugate-linearly. Real-valued; equals -2
/// times the directional derivative of the action.
ExactC ym_pairing(const Connection& conn, const BaseForm& nu);

/// The pairing over the four-direction basis; zero exactly on the flat
/// locus and at the distinguished critical connection.
Residual ym_residual(const Connection& conn);

/// Yang-Mills scalar matter Lagrangian and action for a left section T1
/// and a right section T2 of conjugate (here: equal) corepresentation.
/// Throws DomainError on corep mismatch.
BaseForm lagrangian_ymsm(const Connection& conn, const Section& t1, const Section& t2,
                         const Potential& v);
ExactC action_ymsm(const Connection& conn, const Section& t1, const Section& t2,
                   const Potential& v);

/// Full stationarity pairing in the connection direction nu: the matter
/// brackets minus the curvature brackets. Its real part equals 2 times
/// the directional derivative of action_ymsm.
ExactC ymsm_pairing(const Connection& conn, const Section& t1, const Section& t2,
                    const BaseForm& nu);

/// The three field equations: connection-direction stationarity over the
/// direction basis, and the two section equations
///   laplacian(T1) - conj(V'(<T1,T1>_l)) T1  (left),
///   laplacian(T2) - T2 conj(V'(<T2,T2>_r))  (right).
YmsmResiduals ymsm_residuals(const Connection& conn, const Section& t1, const Section& t2,
                             const Potential& v);

/// Closed-form components of the repeated covariant derivative on
/// sign-corep sections, kept as an independent reference implementation.
/// They match the operator pipeline exactly on the anti-hermitian locus
/// (conj(lambda0) = -lambda1), which contains the zero connection and
/// the distinguished critical connection.
BaseForm alt_laplacian_formula(const Connection& conn, const BaseForm& p, Side side);

/// The closed-form component system for sign-corep sections: the
/// stationarity system in the connection direction (transcribed
/// componentwise, including its right-hand sides) and the Laplacian
/// formula match against the pipeline. Requires alternating coreps.
AltSystem alt_component_equations(const Connection& conn, const Section& t1, const Section& t2);

/// Exact directional derivative of action_ymsm along the degree-1
/// direction nu (a five-point stencil, exact because the action is
/// polynomial of degree <= 4 along connection lines).
ExactC directional_action_derivative(const Connection& conn, const Section& t1,
                                     const Section& t2, const Potential& v,
                                     const BaseForm& nu);

/// Verifies that the degree-lowering stationarity operators square to
/// zero on connection-direction-valued forms, on both sides.
bool continuity_check(const Connection& conn);

std::string format_residual(const Residual& r);

} // namespace qpb
