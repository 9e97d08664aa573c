#include "qpb/connection.hpp"

#include "qpb/error.hpp"

namespace qpb {

TotalForm Connection::form() const {
    return tensor_embed(mu(), GroupForm::unit()) +
           tensor_embed(BaseForm::unit(), GroupForm::invariant_one_form());
}

bool Connection::is_flat() const { return curvature_scalar(*this).is_zero(); }

Connection Connection::yang_mills() {
    ExactC half_i(Rat(0), make_rat(Int(1), Int(2)));
    return Connection(half_i, half_i);
}

ExactC curvature_scalar(const Connection& conn) {
    return -(conn.lambda0 + conn.lambda1) -
           ExactC(0, 2) * conn.lambda0 * conn.lambda1;
}

BaseForm curvature(const Connection& conn) {
    BaseForm mu = conn.mu();
    return d(mu) - ExactC(2) * (mu * mu);
}

ExactC flat_completion(const ExactC& lambda0) {
    ExactC a = ExactC::one() + ExactC(0, 2) * lambda0;
    if (a.is_zero())
        throw NumericError("no flat completion: lambda0 = i/2 is the pole of the flat locus");
    return -lambda0 / a;
}

TotalForm cov_deriv(const Connection& conn, const TotalForm& w) {
    if (!w.is_horizontal()) throw DomainError("covariant derivative expects a horizontal form");

    TotalForm omega = conn.form();
    TotalForm result = d(w);

    // Subtract (-1)^{i} (w-with-group-leg g(1)) * omega(germ(g(2))),
    // summed over the coproduct legs of each group function component.
    for (int i = 0; i < 3; ++i)
        for (int b = 0; b < 2; ++b)
            for (int a = 0; a < 2; ++a) {
                const ExactC& cz = w.at(i, 0, b, a);
                if (cz.is_zero()) continue;
                GroupTensor cp = coproduct(GroupForm::delta(a));
                for (int g1 = 0; g1 < 2; ++g1)
                    for (int g2 = 0; g2 < 2; ++g2) {
                        if (cp.coeff[0][0][g1][g2].is_zero()) continue;
                        // germ(delta_k) = (+-1) * invariant one-form
                        ExactC germ_sign = g2 == 1 ? ExactC::one() : -ExactC::one();
                        BaseForm eta = BaseForm::zero(i);
                        eta.c[b] = cz;
                        TotalForm piece = tensor_embed(eta, GroupForm::delta(g1)) * omega;
                        ExactC sgn = i % 2 == 0 ? ExactC::one() : -ExactC::one();
                        result = result - sgn * germ_sign * piece;
                    }
            }

    if (!result.is_horizontal())
        throw DomainError("covariant derivative produced a non-horizontal form");
    return result;
}

BaseForm s_op(const Connection& conn, const BaseForm& nu) {
    BaseForm mu = conn.mu();
    ExactC sgn = nu.degree % 2 == 0 ? ExactC::one() : -ExactC::one();
    return ExactC(2) * (mu * nu - sgn * (nu * mu));
}

} // namespace qpb
