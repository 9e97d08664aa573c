#include "qpb/gauge.hpp"

#include <utility>
#include <vector>

#include "qpb/error.hpp"
#include "qpb/linalg.hpp"

namespace qpb {

namespace {

/// Half as an exact scalar.
const ExactC& half() {
    static const ExactC h(make_rat(1, 2), Rat(0));
    return h;
}

/// Coefficient slots of a grade-matching gauge map: 48 in total
/// (degree 0: 2x4, degree 1: 2x8, degree 2: 2x12).
struct Slot {
    int deg, idx, i, j, b, g;
};

const std::vector<Slot>& slots() {
    static const std::vector<Slot> s = [] {
        std::vector<Slot> v;
        for (int deg = 0; deg < 3; ++deg)
            for (int idx = 0; idx < 2; ++idx)
                for (int i = 0; i <= deg; ++i)
                    for (int b = 0; b < 2; ++b)
                        for (int g = 0; g < 2; ++g)
                            v.push_back({deg, idx, i, deg - i, b, g});
        return v;
    }();
    return s;
}

ExactVec flatten(const GaugeMap& f) {
    ExactVec v;
    v.reserve(slots().size());
    for (const Slot& s : slots()) v.push_back(f.value[s.deg][s.idx].at(s.i, s.j, s.b, s.g));
    return v;
}

GaugeMap unflatten(const ExactVec& v) {
    GaugeMap f;
    for (std::size_t k = 0; k < slots().size(); ++k) {
        const Slot& s = slots()[k];
        f.value[s.deg][s.idx].at(s.i, s.j, s.b, s.g) = v[k];
    }
    return f;
}

} // namespace

TotalForm GaugeMap::apply(const GroupForm& q) const {
    TotalForm r = TotalForm::zero();
    for (int g = 0; g < 2; ++g)
        if (!q.c[g].is_zero()) r = r + q.c[g] * value[q.degree][g];
    return r;
}

bool operator==(const GaugeMap& a, const GaugeMap& b) {
    for (int deg = 0; deg < 3; ++deg)
        for (int idx = 0; idx < 2; ++idx)
            if (a.value[deg][idx] != b.value[deg][idx]) return false;
    return true;
}

GroupForm group_basis(int deg, int idx) {
    ExactC c0 = idx == 0 ? ExactC::one() : ExactC::zero();
    ExactC c1 = idx == 0 ? ExactC::zero() : ExactC::one();
    switch (deg) {
        case 0: return GroupForm::fn(c0, c1);
        case 1: return GroupForm::one_form(c0, c1);
        case 2: return GroupForm::two_form(c0, c1);
        default: throw DomainError("group basis degree out of range");
    }
}

GaugeMap gauge_unit() {
    GaugeMap f;
    f.value[0][0] = TotalForm::unit();
    return f;
}

GaugeMap gauge_involution() {
    GaugeMap f;
    f.value[0][1] = TotalForm::unit();
    return f;
}

GaugeMap gauge_phase(const ExactC& c) {
    if (c.abs2() != Rat(1)) throw DomainError("phase parameter must have unit modulus");
    GaugeMap f;
    f.value[0][0] = (half() * (ExactC::one() + c)) * TotalForm::unit();
    f.value[0][1] = (half() * (ExactC::one() - c)) * TotalForm::unit();
    return f;
}

void validate_gauge(const GaugeMap& f) {
    for (int deg = 0; deg < 3; ++deg)
        for (int idx = 0; idx < 2; ++idx) {
            const TotalForm& w = f.value[deg][idx];
            if (w != w.graded_part(deg))
                throw DomainError("gauge map value is not homogeneous of the basis degree");
            if (psi(w) != tensor_unit(w))
                throw DomainError("gauge map value is not covariant");
        }
    if (f.value[0][0] + f.value[0][1] != TotalForm::unit())
        throw DomainError("gauge map does not send the unit to the unit");
}

bool is_gauge(const GaugeMap& f) {
    try {
        validate_gauge(f);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

GaugeMap convolve(const GaugeMap& f1, const GaugeMap& f2) {
    GaugeMap r;
    for (int deg = 0; deg < 3; ++deg)
        for (int idx = 0; idx < 2; ++idx) {
            GroupTensor t = coproduct_ext(group_basis(deg, idx));
            TotalForm acc = TotalForm::zero();
            for (int j1 = 0; j1 < 3; ++j1)
                for (int j2 = 0; j2 + j1 < 3; ++j2)
                    for (int g1 = 0; g1 < 2; ++g1)
                        for (int g2 = 0; g2 < 2; ++g2) {
                            const ExactC& cz = t.coeff[j1][j2][g1][g2];
                            if (cz.is_zero()) continue;
                            acc = acc + cz * (f1.value[j1][g1] * f2.value[j2][g2]);
                        }
            r.value[deg][idx] = acc;
        }
    return r;
}

GaugeMap conv_inverse(const GaugeMap& f) {
    const std::size_t n = slots().size();
    ExactMat m(n, ExactVec(n));
    for (std::size_t k = 0; k < n; ++k) {
        ExactVec e(n);
        e[k] = ExactC::one();
        ExactVec col = flatten(convolve(f, unflatten(e)));
        for (std::size_t r = 0; r < n; ++r) m[r][k] = col[r];
    }
    ExactVec x;
    try {
        x = solve_linear(std::move(m), flatten(gauge_unit()));
    } catch (const NumericError&) {
        throw DomainError("not convolution invertible");
    }
    GaugeMap g = unflatten(x);
    if (convolve(f, g) != gauge_unit() || convolve(g, f) != gauge_unit())
        throw DomainError("not convolution invertible");
    return g;
}

TotalForm gauge_transform(const GaugeMap& f, const TotalForm& w) {
    PsiImage p = psi(w);
    TotalForm r = TotalForm::zero();
    for (int i = 0; i < 3; ++i)
        for (int j1 = 0; j1 + i < 3; ++j1)
            for (int j2 = 0; j2 + j1 + i < 3; ++j2)
                for (int b = 0; b < 2; ++b)
                    for (int g1 = 0; g1 < 2; ++g1)
                        for (int g2 = 0; g2 < 2; ++g2) {
                            const ExactC& cz = p.at(i, j1, j2, b, g1, g2);
                            if (cz.is_zero()) continue;
                            TotalForm left = TotalForm::zero();
                            left.at(i, j1, b, g1) = cz;
                            r = r + left * f.value[j2][g2];
                        }
    return r;
}

Connection gauge_action(const GaugeMap& f, const Connection& conn) {
    validate_gauge(f);
    TotalForm r = gauge_transform(f, conn.form());
    Connection out(r.at(1, 0, 0, 0), r.at(1, 0, 1, 0));
    if (r != out.form()) throw DomainError("gauge image is not a connection form");
    return out;
}

Section gauge_action(const GaugeMap& f, const Section& s, Side side) {
    validate_gauge(f);
    TotalForm w = s.horizontal_form();
    TotalForm r = side == Side::left ? gauge_transform(f, w)
                                     : star(gauge_transform(f, star(w)));
    Section out(s.corep, BaseForm::fn(r.at(0, 0, 0, 0), r.at(0, 0, 1, 0)));
    if (r != out.horizontal_form()) throw DomainError("gauge image is not a section");
    return out;
}

bool in_gg_ym(const GaugeMap& f) {
    validate_gauge(f);
    TotalForm w = Connection::trivial().form();
    return gauge_transform(f, w) == w;
}

std::string format_gauge(const GaugeMap& f) {
    std::string out;
    for (int deg = 0; deg < 3; ++deg)
        for (int idx = 0; idx < 2; ++idx) {
            out += "f(" + format_group(group_basis(deg, idx)) + ") = ";
            out += format_total(f.value[deg][idx]);
            out += "\n";
        }
    return out;
}

} // namespace qpb
