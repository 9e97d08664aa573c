#include "qpb/base_form.hpp"

#include "qpb/calibration.hpp"
#include "qpb/error.hpp"

namespace qpb {

namespace {

void check_degree(int deg) {
    if (deg < 0 || deg > 2) throw DomainError("base form degree out of range");
}

const ExactC kI = ExactC::i_unit();

} // namespace

BaseForm::BaseForm(int deg, ExactC c0, ExactC c1) : degree(deg), c{std::move(c0), std::move(c1)} {
    check_degree(deg);
}

BaseForm BaseForm::fn(ExactC a, ExactC b) { return BaseForm(0, std::move(a), std::move(b)); }
BaseForm BaseForm::one_form(ExactC a, ExactC b) { return BaseForm(1, std::move(a), std::move(b)); }
BaseForm BaseForm::two_form(ExactC a, ExactC b) { return BaseForm(2, std::move(a), std::move(b)); }
BaseForm BaseForm::zero(int degree) { return BaseForm(degree, ExactC::zero(), ExactC::zero()); }
BaseForm BaseForm::unit() { return fn(ExactC::one(), ExactC::one()); }

BaseForm BaseForm::point(int k) {
    if (k != 0 && k != 1) throw DomainError("point index must be 0 or 1");
    return fn(ExactC(k == 0 ? 1 : 0), ExactC(k == 1 ? 1 : 0));
}

BaseForm BaseForm::dvol() { return two_form(-kI, kI); }

BaseForm BaseForm::operator-() const { return BaseForm(degree, -c[0], -c[1]); }

BaseForm operator+(const BaseForm& a, const BaseForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree != b.degree) throw DomainError("adding forms of different degree");
    return BaseForm(a.degree, a.c[0] + b.c[0], a.c[1] + b.c[1]);
}

BaseForm operator-(const BaseForm& a, const BaseForm& b) { return a + (-b); }

BaseForm operator*(const ExactC& s, const BaseForm& a) {
    return BaseForm(a.degree, s * a.c[0], s * a.c[1]);
}

BaseForm operator*(const BaseForm& a, const BaseForm& b) {
    int p = a.degree, q = b.degree;
    if (p + q > 2) return BaseForm::zero(2);
    if (p == 0) {
        // Functions act on the left through the arrow's source point:
        // degree 1 pairs (a0, a1) against (c01, c10); other degrees entrywise.
        if (q == 1) return BaseForm::one_form(a.c[0] * b.c[0], a.c[1] * b.c[1]);
        return BaseForm(q, a.c[0] * b.c[0], a.c[1] * b.c[1]);
    }
    if (q == 0) {
        if (p == 1) // right action reads the function at the arrow's target
            return BaseForm::one_form(a.c[0] * b.c[1], a.c[1] * b.c[0]);
        return BaseForm(p, a.c[0] * b.c[0], a.c[1] * b.c[1]);
    }
    // degree 1 times degree 1: round trips, with the calibrated factor
    const ExactC& f = calibration().one_one_factor;
    return BaseForm::two_form(f * (a.c[0] * b.c[1]), f * (a.c[1] * b.c[0]));
}

bool operator==(const BaseForm& a, const BaseForm& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree == b.degree && a.c[0] == b.c[0] && a.c[1] == b.c[1];
}

BaseForm d(const BaseForm& a) {
    switch (a.degree) {
    case 0: return BaseForm::one_form(kI * (a.c[1] - a.c[0]), kI * (a.c[0] - a.c[1]));
    case 1: {
        ExactC s = -(a.c[0] + a.c[1]);
        return BaseForm::two_form(s, s);
    }
    default: return BaseForm::zero(2);
    }
}

BaseForm star(const BaseForm& a) {
    if (a.degree == 1) return BaseForm::one_form(a.c[1].conj(), a.c[0].conj());
    return BaseForm(a.degree, a.c[0].conj(), a.c[1].conj());
}

ExactC integral(const BaseForm& a) {
    if (a.degree != 2) throw DomainError("integral expects a top-degree form");
    ExactC half_i(Rat(0), make_rat(Int(1), Int(2)));
    return half_i * (a.c[0] - a.c[1]);
}

BaseForm herm(const BaseForm& a, const BaseForm& b, Side side) {
    if (a.degree != b.degree) throw DomainError("hermitian pairing needs equal degrees");
    if (side == Side::left) {
        // linear in a, conjugate in b; componentwise in every degree
        return BaseForm::fn(a.c[0] * b.c[0].conj(), a.c[1] * b.c[1].conj());
    }
    // right structure: conjugate in a, linear in b; degree 1 pairs the
    // components through the arrow's target point, hence the swap.
    if (a.degree == 1)
        return BaseForm::fn(a.c[1].conj() * b.c[1], a.c[0].conj() * b.c[0]);
    return BaseForm::fn(a.c[0].conj() * b.c[0], a.c[1].conj() * b.c[1]);
}

ExactC inner(const BaseForm& a, const BaseForm& b, Side side) {
    return integral(herm(a, b, side) * BaseForm::dvol());
}

BaseForm hodge(const BaseForm& a, Side side) {
    ExactC s(calibration().hodge_sign);
    ExactC flip = side == Side::left ? ExactC::one() : -ExactC::one();
    switch (a.degree) {
    case 0: return BaseForm::two_form(s * flip * (-kI) * a.c[0], s * flip * kI * a.c[1]);
    case 1: return BaseForm::one_form(s * flip * (-a.c[0]), s * flip * a.c[1]);
    default: return BaseForm::fn(s * flip * kI * a.c[0], s * flip * (-kI) * a.c[1]);
    }
}

BaseForm codiff(const BaseForm& a, Side side) {
    if (a.degree == 0) return BaseForm::zero(0);
    return hodge(d(hodge(a, side)), side);
}

std::string format_base(const BaseForm& a) {
    static const char* names[] = {"fn", "one_form", "two_form"};
    return std::string(names[a.degree]) + "(" + format_exact(a.c[0]) + ", " +
           format_exact(a.c[1]) + ")";
}

} // namespace qpb
