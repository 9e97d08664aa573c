#include "qpb/verify.hpp"

#include <cmath>
#include <random>
#include <string>

#include "qpb/base_form.hpp"
#include "qpb/calibration.hpp"
#include "qpb/connection.hpp"
#include "qpb/error.hpp"
#include "qpb/field_theory.hpp"
#include "qpb/gauge.hpp"
#include "qpb/group.hpp"
#include "qpb/qvb.hpp"
#include "qpb/total_form.hpp"

namespace qpb {
namespace {

const ExactC one = ExactC::one();
const ExactC I = ExactC::i_unit();
const ExactC two(2);

/// Collects the first failing condition of a check; later calls are
/// no-ops once a counterexample is recorded.
struct Probe {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& msg) {
        if (ok && !cond) {
            ok = false;
            detail = msg;
        }
    }
    std::pair<bool, std::string> result() const { return {ok, detail}; }
};

std::string at_trial(const char* what, int trial) {
    return std::string(what) + " (trial " + std::to_string(trial) + ")";
}

std::string at_deg(const char* what, int trial, int deg) {
    return std::string(what) + " (trial " + std::to_string(trial) + ", degree " +
           std::to_string(deg) + ")";
}

Rat rand_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    return make_rat(Int(num(rng)), Int(den(rng)));
}

ExactC rand_scalar(std::mt19937_64& rng) { return ExactC(rand_rat(rng), rand_rat(rng)); }

BaseForm rand_base(std::mt19937_64& rng, int degree) {
    return BaseForm(degree, rand_scalar(rng), rand_scalar(rng));
}

BaseForm rand_base_nonzero(std::mt19937_64& rng, int degree) {
    for (;;) {
        BaseForm a = rand_base(rng, degree);
        if (!a.is_zero()) return a;
    }
}

GroupForm rand_group(std::mt19937_64& rng, int degree) {
    return GroupForm(degree, rand_scalar(rng), rand_scalar(rng));
}

Connection rand_connection(std::mt19937_64& rng) {
    return Connection(rand_scalar(rng), rand_scalar(rng));
}

TotalForm rand_total(std::mt19937_64& rng) {
    TotalForm w;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; i + j < 3; ++j)
            for (int b = 0; b < 2; ++b)
                for (int g = 0; g < 2; ++g) w.at(i, j, b, g) = rand_scalar(rng);
    return w;
}

TotalForm rand_total_homogeneous(std::mt19937_64& rng, int n) {
    TotalForm w;
    for (int i = 0; i <= n; ++i) {
        int j = n - i;
        if (i > 2 || j > 2) continue;
        for (int b = 0; b < 2; ++b)
            for (int g = 0; g < 2; ++g) w.at(i, j, b, g) = rand_scalar(rng);
    }
    return w;
}

TotalForm rand_horizontal(std::mt19937_64& rng) {
    TotalForm w;
    for (int i = 0; i < 3; ++i)
        for (int b = 0; b < 2; ++b)
            for (int g = 0; g < 2; ++g) w.at(i, 0, b, g) = rand_scalar(rng);
    return w;
}

Section rand_section(std::mt19937_64& rng, Corep r) { return Section(r, rand_base(rng, 0)); }

/// Gauge map in the covariant shape: base forms tensored with the group
/// unit, function values summing to the unit. With `invertible` the
/// difference of the function values is kept componentwise nonzero.
GaugeMap rand_gauge(std::mt19937_64& rng, bool invertible = false) {
    GaugeMap f;
    BaseForm x0 = rand_base(rng, 0);
    if (invertible)
        for (int b = 0; b < 2; ++b)
            while ((two * x0.c[b] - one).is_zero()) x0.c[b] = rand_scalar(rng);
    BaseForm x1 = BaseForm::fn(one - x0.c[0], one - x0.c[1]);
    f.value[0][0] = tensor_embed(x0, GroupForm::unit());
    f.value[0][1] = tensor_embed(x1, GroupForm::unit());
    for (int idx = 0; idx < 2; ++idx) {
        f.value[1][idx] = tensor_embed(rand_base(rng, 1), GroupForm::unit());
        f.value[2][idx] = tensor_embed(rand_base(rng, 2), GroupForm::unit());
    }
    return f;
}

std::array<ExactC, 3> phase_samples() {
    return {ExactC(0, 1), ExactC(make_rat(3, 5), make_rat(4, 5)),
            ExactC(make_rat(5, 13), make_rat(12, 13))};
}

/// Exact lambda0 samples on the flat locus, avoiding the completion pole.
std::vector<ExactC> flat_seeds() {
    return {ExactC::zero(),
            one,
            -one,
            two,
            ExactC(make_rat(1, 2), Rat(0)),
            I,
            -I,
            one + I,
            one - I / ExactC(3),
            ExactC(make_rat(3, 4), Rat(0))};
}

// ---------------------------------------------------------------------------
// calculus
// ---------------------------------------------------------------------------

VerifySuite suite_calculus() {
    VerifySuite s{"calculus", {}};
    const BaseForm p0 = BaseForm::point(0);
    const BaseForm p1 = BaseForm::point(1);
    const BaseForm e01 = BaseForm::one_form(one, ExactC::zero());
    const BaseForm e10 = BaseForm::one_form(ExactC::zero(), one);
    const BaseForm x0 = BaseForm::two_form(one, ExactC::zero());
    const BaseForm x1 = BaseForm::two_form(ExactC::zero(), one);

    s.checks.push_back({"unit, projectors, and bimodule actions", [=]() {
        Probe p;
        p.require(p0 + p1 == BaseForm::unit(), "projectors do not sum to the unit");
        p.require(p0 * p0 == p0 && p1 * p1 == p1, "projectors are not idempotent");
        p.require((p0 * p1).is_zero(), "orthogonality p0 p1 != 0");
        p.require(p0 * e01 == e01 && (p1 * e01).is_zero(), "left action misses the source");
        p.require(e01 * p1 == e01 && (e01 * p0).is_zero(), "right action misses the target");
        p.require(p1 * e10 == e10 && e10 * p0 == e10, "reverse arrow actions are off");
        p.require(p0 * x0 == x0 && x0 * p0 == x0 && (p1 * x0).is_zero(),
                  "degree-2 projector action is off");
        std::mt19937_64 rng(701);
        for (int deg : {0, 1, 2}) {
            BaseForm a = rand_base(rng, deg);
            p.require(BaseForm::unit() * a == a && a * BaseForm::unit() == a,
                      "unit is not neutral at degree " + std::to_string(deg));
        }
        return p.result();
    }});

    s.checks.push_back({"degree-1 products close with factor i", [=]() {
        Probe p;
        p.require(e01 * e10 == I * x0, "round trip through the first point misses factor i");
        p.require(e10 * e01 == I * x1, "round trip through the second point misses factor i");
        p.require((e01 * e01).is_zero() && (e10 * e10).is_zero(), "parallel arrows do not vanish");
        p.require((e01 * x0).is_zero() && (x0 * e01).is_zero() && (x0 * x1).is_zero(),
                  "products past top degree do not collapse");
        return p.result();
    }});

    s.checks.push_back({"differential: basis values, square zero, exact integrals", [=]() {
        Probe p;
        p.require(d(p0) == BaseForm::one_form(-I, I), "d on the first projector is off");
        p.require(d(p1) == BaseForm::one_form(I, -I), "d on the second projector is off");
        p.require(d(e01) == BaseForm::two_form(-one, -one), "d on e01 is off");
        p.require(d(e10) == BaseForm::two_form(-one, -one), "d on e10 is off");
        p.require(d(x0).is_zero() && d(BaseForm::unit()).is_zero(),
                  "d does not vanish where required");
        std::mt19937_64 rng(703);
        for (int trial = 0; trial < 50; ++trial) {
            for (int deg : {0, 1})
                p.require(d(d(rand_base(rng, deg))).is_zero(), at_deg("d^2 != 0", trial, deg));
            p.require(integral(d(rand_base(rng, 1))) == ExactC::zero(),
                      at_trial("an exact top form has nonzero integral", trial));
        }
        return p.result();
    }});

    s.checks.push_back({"graded Leibniz rule", [=]() {
        Probe p;
        std::mt19937_64 rng(705);
        for (int trial = 0; trial < 50; ++trial)
            for (int dp : {0, 1, 2})
                for (int dq : {0, 1, 2}) {
                    BaseForm a = rand_base(rng, dp);
                    BaseForm b = rand_base(rng, dq);
                    ExactC sign = dp % 2 == 0 ? one : -one;
                    p.require(d(a * b) == d(a) * b + sign * (a * d(b)),
                              at_deg("Leibniz fails", trial, dp * 10 + dq));
                }
        return p.result();
    }});

    s.checks.push_back({"star: involution, d-compatibility, graded antimultiplicativity", [=]() {
        Probe p;
        p.require(star(e01) == e10 && star(e10) == e01, "star does not swap the arrows");
        p.require(star(x0) == x0 && star(p0) == p0, "star moves a real basis form");
        std::mt19937_64 rng(707);
        for (int trial = 0; trial < 50; ++trial) {
            for (int deg : {0, 1, 2}) {
                BaseForm a = rand_base(rng, deg);
                p.require(star(star(a)) == a, at_deg("star is not involutive", trial, deg));
                p.require(star(d(a)) == d(star(a)), at_deg("star does not commute with d", trial, deg));
            }
            for (int dp : {0, 1, 2})
                for (int dq : {0, 1, 2}) {
                    BaseForm a = rand_base(rng, dp);
                    BaseForm b = rand_base(rng, dq);
                    ExactC sign = (dp * dq) % 2 == 0 ? one : -one;
                    p.require(star(a * b) == sign * (star(b) * star(a)),
                              at_deg("graded antimultiplicativity fails", trial, dp * 10 + dq));
                }
        }
        return p.result();
    }});

    s.checks.push_back({"integral and volume normalization", [=]() {
        Probe p;
        p.require(integral(BaseForm::dvol()) == one, "volume does not integrate to 1");
        p.require(integral(x0) == ExactC(Rat(0), make_rat(1, 2)),
                  "first-point top form does not integrate to i/2");
        bool threw = false;
        try {
            (void)integral(p0);
        } catch (const DomainError&) {
            threw = true;
        }
        p.require(threw, "integral accepted a non-top form");
        std::mt19937_64 rng(709);
        BaseForm f = rand_base(rng, 0);
        p.require(f * BaseForm::dvol() == BaseForm::dvol() * f, "volume form is not central");
        return p.result();
    }});

    s.checks.push_back({"inner products: hermitian, definite, module-sided", [=]() {
        Probe p;
        ExactC half(make_rat(1, 2), Rat(0));
        p.require(inner(p0, p0, Side::left) == half, "frozen value <p0,p0> is off");
        p.require(inner(e01, e01, Side::left) == half, "frozen value <e01,e01> is off");
        p.require(inner(e01, e10, Side::left) == ExactC::zero(), "<e01,e10> is not zero");
        p.require(inner(x0, x0, Side::right) == half, "frozen value <x0,x0> is off");
        std::mt19937_64 rng(711);
        for (int trial = 0; trial < 50; ++trial)
            for (int deg : {0, 1, 2})
                for (Side side : {Side::left, Side::right}) {
                    BaseForm a = rand_base_nonzero(rng, deg);
                    BaseForm b = rand_base(rng, deg);
                    ExactC ip = inner(a, a, side);
                    p.require(ip.is_real() && ip.re > 0, at_deg("definiteness fails", trial, deg));
                    p.require(inner(a, b, side) == inner(b, a, side).conj(),
                              at_deg("conjugate symmetry fails", trial, deg));
                    ExactC z = rand_scalar(rng);
                    p.require(inner(z * a, b, Side::left) == z * inner(a, b, Side::left) &&
                                  inner(a, z * b, Side::left) ==
                                      z.conj() * inner(a, b, Side::left),
                              at_deg("left-sided linearity fails", trial, deg));
                    p.require(inner(z * a, b, Side::right) == z.conj() * inner(a, b, Side::right) &&
                                  inner(a, z * b, Side::right) == z * inner(a, b, Side::right),
                              at_deg("right-sided linearity fails", trial, deg));
                }
        for (int trial = 0; trial < 30; ++trial) {
            BaseForm f = rand_base(rng, 0);
            BaseForm a = rand_base(rng, 1);
            BaseForm b = rand_base(rng, 1);
            p.require(herm(f * a, b, Side::left) == f * herm(a, b, Side::left),
                      at_trial("left pairing is not module-compatible", trial));
            p.require(herm(a, b, Side::right) * f == herm(a, b * f, Side::right),
                      at_trial("right pairing is not module-compatible", trial));
        }
        return p.result();
    }});

    s.checks.push_back({"Hodge operators: frozen values, involution, isometry", [=]() {
        Probe p;
        p.require(hodge(BaseForm::unit(), Side::left) == BaseForm::dvol(),
                  "left dual of the unit is not the volume");
        p.require(hodge(BaseForm::dvol(), Side::left) == BaseForm::unit(),
                  "left dual of the volume is not the unit");
        p.require(hodge(e01, Side::left) == BaseForm::one_form(-one, ExactC::zero()),
                  "left dual of e01 is off");
        p.require(hodge(e01, Side::right) == e01 && hodge(e10, Side::right) == -e10,
                  "right duals of the arrows are off");
        std::mt19937_64 rng(713);
        for (int trial = 0; trial < 50; ++trial)
            for (int deg : {0, 1, 2}) {
                BaseForm a = rand_base(rng, deg);
                BaseForm b = rand_base(rng, deg);
                for (Side side : {Side::left, Side::right}) {
                    p.require(hodge(hodge(a, side), side) == a,
                              at_deg("duality is not involutive", trial, deg));
                    p.require(inner(hodge(a, side), hodge(b, side), side) == inner(a, b, side),
                              at_deg("duality is not an isometry", trial, deg));
                }
                p.require(hodge(a, Side::right) == star(hodge(star(a), Side::left)),
                          at_deg("right dual is not the star conjugate of the left", trial, deg));
            }
        return p.result();
    }});

    s.checks.push_back({"codifferential: component formulas and adjointness", [=]() {
        Probe p;
        std::mt19937_64 rng(715);
        for (int trial = 0; trial < 30; ++trial) {
            BaseForm w = rand_base(rng, 1);
            BaseForm v = rand_base(rng, 2);
            ExactC dz = I * (w.c[0] - w.c[1]);
            ExactC t = -(v.c[0] + v.c[1]);
            for (Side side : {Side::left, Side::right}) {
                p.require(codiff(w, side) == BaseForm::fn(dz, -dz),
                          at_trial("arrow codifferential misses its display", trial));
                p.require(codiff(v, side) == BaseForm::one_form(t, t),
                          at_trial("top codifferential misses its display", trial));
                p.require(codiff(codiff(v, side), side).is_zero(),
                          at_trial("codifferential does not square to zero", trial));
                p.require(codiff(rand_base(rng, 0), side).is_zero(),
                          at_trial("codifferential of a function is nonzero", trial));
                BaseForm f = rand_base(rng, 0);
                p.require(inner(d(f), w, side) == inner(f, codiff(w, side), side),
                          at_trial("adjointness fails in degrees 0/1", trial));
                p.require(inner(d(w), v, side) == inner(w, codiff(v, side), side),
                          at_trial("adjointness fails in degrees 1/2", trial));
            }
        }
        return p.result();
    }});

    return s;
}

// ---------------------------------------------------------------------------
// hopf
// ---------------------------------------------------------------------------

VerifySuite suite_hopf() {
    VerifySuite s{"hopf", {}};
    const GroupForm u0 = GroupForm::delta(0);
    const GroupForm u1 = GroupForm::delta(1);
    const GroupForm g01 = GroupForm::one_form(one, ExactC::zero());
    const GroupForm g10 = GroupForm::one_form(ExactC::zero(), one);
    const GroupForm g010 = GroupForm::two_form(one, ExactC::zero());
    const GroupForm g101 = GroupForm::two_form(ExactC::zero(), one);
    const GroupForm vin = GroupForm::invariant_one_form();
    const GroupForm alt = GroupForm::sign_character();

    s.checks.push_back({"basis products and truncation", [=]() {
        Probe p;
        p.require(u0 + u1 == GroupForm::unit(), "point functions do not sum to the unit");
        p.require(u0 * u0 == u0 && (u0 * u1).is_zero(), "point functions are not orthogonal");
        p.require(u0 * vin == g01 && u1 * vin == g10, "invariant form does not split");
        p.require(g01 * u1 == g01 && (g01 * u0).is_zero(), "arrow-function action is off");
        p.require(g01 * g10 == g010 && g10 * g01 == g101, "arrow concatenation is off");
        p.require((g01 * g01).is_zero() && (g010 * g01).is_zero(),
                  "degenerate products do not vanish");
        p.require(alt * vin == d(u1), "sign character times the invariant form is off");
        return p.result();
    }});

    s.checks.push_back({"differential and the invariant-form square", [=]() {
        Probe p;
        p.require(d(u1) == GroupForm::one_form(one, -one), "d on the second point is off");
        p.require(d(u0) == GroupForm::one_form(-one, one), "d on the first point is off");
        p.require(d(alt) == ExactC(-2) * d(u1), "d of the sign character is off");
        p.require(d(vin) == two * (vin * vin), "invariant form violates its square identity");
        std::mt19937_64 rng(721);
        for (int trial = 0; trial < 40; ++trial)
            for (int deg : {0, 1})
                p.require(d(d(rand_group(rng, deg))).is_zero(), at_deg("d^2 != 0", trial, deg));
        return p.result();
    }});

    s.checks.push_back({"Leibniz and star laws", [=]() {
        Probe p;
        p.require(star(vin) == -vin, "invariant form is not anti-selfadjoint");
        p.require(star(g01) == -g10 && star(g010) == -g010, "frozen star values are off");
        std::mt19937_64 rng(723);
        for (int trial = 0; trial < 40; ++trial)
            for (int dp : {0, 1, 2}) {
                for (int dq : {0, 1, 2}) {
                    GroupForm a = rand_group(rng, dp);
                    GroupForm b = rand_group(rng, dq);
                    ExactC sign = dp % 2 == 0 ? one : -one;
                    p.require(d(a * b) == d(a) * b + sign * (a * d(b)),
                              at_deg("Leibniz fails", trial, dp * 10 + dq));
                    ExactC ssign = (dp * dq) % 2 == 0 ? one : -one;
                    p.require(star(a * b) == ssign * (star(b) * star(a)),
                              at_deg("antimultiplicativity fails", trial, dp * 10 + dq));
                }
                GroupForm a = rand_group(rng, dp);
                p.require(star(star(a)) == a && star(d(a)) == d(star(a)),
                          at_deg("star involution or d-compatibility fails", trial, dp));
            }
        return p.result();
    }});

    s.checks.push_back({"coalgebra: coproduct, counit, antipode", [=]() {
        Probe p;
        p.require(coproduct(GroupForm::unit()) == tensor(GroupForm::unit(), GroupForm::unit()),
                  "unit is not group-like");
        p.require(coproduct(alt) == tensor(alt, alt), "sign character is not group-like");
        p.require(coproduct(u0) == tensor(u0, u0) + tensor(u1, u1), "coproduct of u0 is off");
        p.require(coproduct(u1) == tensor(u0, u1) + tensor(u1, u0), "coproduct of u1 is off");
        p.require(counit(GroupForm::unit()) == one && counit(u1) == ExactC::zero(),
                  "counit values are off");
        p.require(antipode(u1) == u1, "antipode moves a point function");
        std::mt19937_64 rng(725);
        for (int trial = 0; trial < 40; ++trial) {
            GroupForm a = rand_group(rng, 0);
            GroupForm b = rand_group(rng, 0);
            p.require(coproduct(a * b) == coproduct(a) * coproduct(b),
                      at_trial("coproduct is not an algebra map", trial));
            GroupTensor cp = coproduct(a);
            GroupForm left = GroupForm::zero(0), right = GroupForm::zero(0);
            GroupForm antip = GroupForm::zero(0);
            for (int g1 = 0; g1 < 2; ++g1)
                for (int g2 = 0; g2 < 2; ++g2) {
                    const ExactC& cz = cp.coeff[0][0][g1][g2];
                    left = left + cz * counit(GroupForm::delta(g1)) * GroupForm::delta(g2);
                    right = right + cz * counit(GroupForm::delta(g2)) * GroupForm::delta(g1);
                    antip = antip + cz * (antipode(GroupForm::delta(g1)) * GroupForm::delta(g2));
                }
            p.require(left == a && right == a, at_trial("counit laws fail", trial));
            p.require(antip == counit(a) * GroupForm::unit(), at_trial("antipode law fails", trial));
        }
        return p.result();
    }});

    s.checks.push_back({"extended coproduct: table, multiplicativity, d-compatibility", [=]() {
        Probe p;
        for (const GroupForm& a : {u0, u1})
            p.require(coproduct_ext(a) == coproduct(a), "degree-0 restriction is off");
        p.require(coproduct_ext(vin) ==
                      tensor(vin, GroupForm::unit()) + tensor(GroupForm::unit(), vin),
                  "invariant form is not primitive");
        p.require(coproduct_ext(g01) ==
                      tensor(u0, g01) + tensor(g01, u0) + tensor(g10, u1) + tensor(u1, g10),
                  "structure table row g01 is off");
        p.require(coproduct_ext(g10) ==
                      tensor(u0, g10) + tensor(g10, u0) + tensor(g01, u1) + tensor(u1, g01),
                  "structure table row g10 is off");
        p.require(coproduct_ext(g010) ==
                      tensor(u0, g010) + tensor(g010, u0) + tensor(g101, u1) + tensor(u1, g101),
                  "structure table row g010 is off");
        p.require(coproduct_ext(g101) ==
                      tensor(u0, g101) + tensor(g101, u0) + tensor(g010, u1) + tensor(u1, g010),
                  "structure table row g101 is off");
        const GroupForm basis[] = {u0, u1, g01, g10, g010, g101};
        for (const GroupForm& a : basis) {
            for (const GroupForm& b : basis)
                p.require(coproduct_ext(a * b) == coproduct_ext(a) * coproduct_ext(b),
                          "extension is not multiplicative");
            p.require(coproduct_ext(d(a)) == d(coproduct_ext(a)),
                      "extension does not commute with d");
            GroupTensor cp = coproduct_ext(a);
            GroupForm contracted = GroupForm::zero(a.degree);
            for (int g1 = 0; g1 < 2; ++g1)
                for (int g2 = 0; g2 < 2; ++g2) {
                    GroupForm leg = GroupForm::zero(a.degree);
                    leg.c[g2] = cp.coeff[0][a.degree][g1][g2];
                    contracted = contracted + counit(GroupForm::delta(g1)) * leg;
                }
            p.require(contracted == a, "counit contraction of the first leg is not the identity");
        }
        return p.result();
    }});

    s.checks.push_back({"germ map and its cocycle law", [=]() {
        Probe p;
        p.require(germ(u1) == vin && germ(u0) == -vin, "germ on the point functions is off");
        p.require(germ(GroupForm::unit()).is_zero(), "germ of the unit is nonzero");
        p.require(germ(alt) == ExactC(-2) * vin, "germ of the sign character is off");
        p.require(germ_compose(vin, u0).is_zero() && germ_compose(vin, u1) == vin,
                  "germ composition values are off");
        std::mt19937_64 rng(727);
        for (int trial = 0; trial < 40; ++trial) {
            GroupForm a = rand_group(rng, 0);
            GroupForm b = rand_group(rng, 0);
            p.require(germ(a * b) == counit(a) * germ(b) + germ_compose(germ(a), b),
                      at_trial("cocycle law fails", trial));
        }
        return p.result();
    }});

    s.checks.push_back({"corepresentation elements are group-like and unitary", [=]() {
        Probe p;
        p.require(corep_element(Corep::trivial) == GroupForm::unit(), "trivial element is off");
        p.require(corep_element(Corep::alternating) == alt, "alternating element is off");
        p.require(corep_sign(Corep::trivial) == 1 && corep_sign(Corep::alternating) == -1,
                  "signs are off");
        for (Corep r : {Corep::trivial, Corep::alternating}) {
            GroupForm u = corep_element(r);
            p.require(coproduct(u) == tensor(u, u), "element is not group-like");
            p.require(counit(u) == one, "element counit is not 1");
            p.require(star(u) * u == GroupForm::unit(), "element is not unitary");
            p.require(germ(u) == ExactC(corep_sign(r) - 1) * vin, "element germ is off");
        }
        return p.result();
    }});

    return s;
}

// ---------------------------------------------------------------------------
// bundle
// ---------------------------------------------------------------------------

VerifySuite suite_bundle() {
    VerifySuite s{"bundle", {}};

    s.checks.push_back({"total algebra: unit, associativity, graded interchange", []() {
        Probe p;
        std::mt19937_64 rng(731);
        TotalForm u = TotalForm::unit();
        for (int trial = 0; trial < 10; ++trial) {
            TotalForm a = rand_total(rng);
            TotalForm b = rand_total(rng);
            TotalForm c = rand_total(rng);
            p.require(u * a == a && a * u == a, at_trial("unit is not neutral", trial));
            p.require((a * b) * c == a * (b * c), at_trial("associativity fails", trial));
        }
        for (int trial = 0; trial < 10; ++trial)
            for (int i1 : {0, 1, 2})
                for (int j1 : {0, 1, 2})
                    for (int i2 : {0, 1, 2})
                        for (int j2 : {0, 1, 2}) {
                            if (i1 + j1 > 2 || i2 + j2 > 2) continue;
                            BaseForm a = rand_base(rng, i1);
                            GroupForm t = rand_group(rng, j1);
                            BaseForm b = rand_base(rng, i2);
                            GroupForm g = rand_group(rng, j2);
                            ExactC sign = (j1 * i2) % 2 == 0 ? one : -one;
                            p.require(tensor_embed(a, t) * tensor_embed(b, g) ==
                                          sign * tensor_embed(a * b, t * g),
                                      at_trial("graded interchange fails", trial));
                        }
        return p.result();
    }});

    s.checks.push_back({"total differential and star laws", []() {
        Probe p;
        std::mt19937_64 rng(733);
        for (int trial = 0; trial < 10; ++trial) {
            TotalForm a = rand_total(rng);
            p.require(d(d(a)).is_zero(), at_trial("d^2 != 0", trial));
            p.require(star(star(a)) == a, at_trial("star is not involutive", trial));
            p.require(star(d(a)) == d(star(a)), at_trial("star does not commute with d", trial));
            for (int n = 0; n <= 2; ++n) {
                TotalForm h = rand_total_homogeneous(rng, n);
                TotalForm b = rand_total(rng);
                ExactC sign = n % 2 == 0 ? one : -one;
                p.require(d(h * b) == d(h) * b + sign * (h * d(b)),
                          at_deg("graded Leibniz fails", trial, n));
                for (int m = 0; m + n <= 4 && m <= 2; ++m) {
                    TotalForm k = rand_total_homogeneous(rng, m);
                    ExactC ssign = (n * m) % 2 == 0 ? one : -one;
                    p.require(star(h * k) == ssign * (star(k) * star(h)),
                              at_deg("antimultiplicativity fails", trial, n * 10 + m));
                }
            }
        }
        for (int trial = 0; trial < 10; ++trial)
            for (int i : {0, 1, 2})
                for (int j : {0, 1, 2}) {
                    if (i + j > 2) continue;
                    BaseForm a = rand_base(rng, i);
                    GroupForm t = rand_group(rng, j);
                    ExactC sign = i % 2 == 0 ? one : -one;
                    p.require(d(tensor_embed(a, t)) ==
                                  tensor_embed(d(a), t) + sign * tensor_embed(a, d(t)),
                              at_deg("d misses the embedding", trial, i * 10 + j));
                    p.require(star(tensor_embed(a, t)) == tensor_embed(star(a), star(t)),
                              at_deg("star misses the embedding", trial, i * 10 + j));
                }
        return p.result();
    }});

    s.checks.push_back({"translation map coacts through functions only", []() {
        Probe p;
        std::mt19937_64 rng(735);
        BaseForm f = rand_base(rng, 0);
        TotalForm w = tensor_embed(f, GroupForm::delta(1));
        PsiImage expected;
        for (int b = 0; b < 2; ++b) {
            expected.at(0, 0, 0, b, 0, 1) = f.c[b];
            expected.at(0, 0, 0, b, 1, 0) = f.c[b];
        }
        p.require(psi(w) == expected, "coaction of a twisted function is off");
        for (int trial = 0; trial < 10; ++trial) {
            BaseForm a = rand_base(rng, trial % 3);
            TotalForm v = tensor_embed(a, GroupForm::unit());
            p.require(psi(v) == tensor_unit(v), at_trial("trivial coaction fails", trial));
        }
        return p.result();
    }});

    s.checks.push_back({"curvature: two computation paths and the affine chart", []() {
        Probe p;
        p.require(curvature(Connection::trivial()).is_zero(), "zero connection is not flat");
        p.require(Connection::trivial().is_flat(), "flatness test misses the zero connection");
        Connection ym = Connection::yang_mills();
        ExactC mhalf_i(Rat(0), make_rat(-1, 2));
        p.require(curvature(ym) == BaseForm::two_form(mhalf_i, mhalf_i),
                  "distinguished curvature is off");
        p.require(curvature_scalar(ym) == mhalf_i && !ym.is_flat(),
                  "distinguished connection misreports");
        std::mt19937_64 rng(737);
        for (int trial = 0; trial < 40; ++trial) {
            Connection conn = rand_connection(rng);
            ExactC u = curvature_scalar(conn);
            p.require(curvature(conn) == BaseForm::two_form(u, u),
                      at_trial("calculus path disagrees with the closed polynomial", trial));
            ExactC ab = conn.chart_a() * conn.chart_b();
            p.require(u == ExactC(Rat(0), make_rat(1, 2)) * (ab - one),
                      at_trial("affine chart identity fails", trial));
        }
        return p.result();
    }});

    s.checks.push_back({"flat locus completions and the pole", []() {
        Probe p;
        p.require(flat_completion(ExactC::zero()) == ExactC::zero(),
                  "zero does not complete to zero");
        p.require(flat_completion(one) == ExactC(make_rat(-1, 5), make_rat(2, 5)),
                  "completion of 1 is off");
        bool threw = false;
        try {
            (void)flat_completion(ExactC(Rat(0), make_rat(1, 2)));
        } catch (const NumericError&) {
            threw = true;
        }
        p.require(threw, "the completion pole did not raise");
        std::mt19937_64 rng(739);
        for (int trial = 0; trial < 40; ++trial) {
            ExactC l0 = rand_scalar(rng);
            if ((one + ExactC(0, 2) * l0).is_zero()) continue;
            Connection conn(l0, flat_completion(l0));
            p.require(conn.is_flat() && curvature(conn).is_zero(),
                      at_trial("completed connection is not flat", trial));
        }
        return p.result();
    }});

    s.checks.push_back({"covariant derivative rules and horizontality", []() {
        Probe p;
        std::mt19937_64 rng(741);
        for (int trial = 0; trial < 15; ++trial) {
            Connection conn = rand_connection(rng);
            BaseForm mu = conn.mu();
            TotalForm vert = tensor_embed(BaseForm::unit(), GroupForm::invariant_one_form());
            bool threw = false;
            try {
                (void)cov_deriv(conn, vert);
            } catch (const DomainError&) {
                threw = true;
            }
            p.require(threw, at_trial("a vertical form was accepted", trial));
            for (int deg : {0, 1, 2}) {
                BaseForm a = rand_base(rng, deg);
                p.require(cov_deriv(conn, tensor_embed(a, GroupForm::unit())) ==
                              tensor_embed(d(a), GroupForm::unit()),
                          at_deg("trivially coacting rule fails", trial, deg));
                ExactC sign = deg % 2 == 0 ? ExactC(2) : ExactC(-2);
                p.require(cov_deriv(conn, tensor_embed(a, GroupForm::sign_character())) ==
                              tensor_embed(d(a) + sign * (a * mu), GroupForm::sign_character()),
                          at_deg("sign-character rule fails", trial, deg));
            }
            BaseForm f = rand_base(rng, 0);
            TotalForm w = tensor_embed(f, GroupForm::delta(1));
            TotalForm expect = tensor_embed(d(f), GroupForm::delta(1)) +
                               tensor_embed(f * mu, GroupForm::delta(1)) -
                               tensor_embed(f * mu, GroupForm::delta(0));
            p.require(cov_deriv(conn, w) == expect, at_trial("mixed rule fails", trial));
            TotalForm h = rand_horizontal(rng);
            p.require(cov_deriv(conn, h).is_horizontal(),
                      at_trial("horizontality is not preserved", trial));
            for (int deg : {0, 1}) {
                BaseForm a = rand_base(rng, deg);
                TotalForm fa = tensor_embed(a, GroupForm::unit());
                TotalForm hh = rand_horizontal(rng);
                ExactC sign = deg % 2 == 0 ? one : -one;
                p.require(cov_deriv(conn, fa * hh) ==
                              tensor_embed(d(a), GroupForm::unit()) * hh +
                                  sign * (fa * cov_deriv(conn, hh)),
                          at_deg("first-order Leibniz fails", trial, deg));
            }
        }
        return p.result();
    }});

    s.checks.push_back({"connection equivariance and direction-field derivatives", []() {
        Probe p;
        std::mt19937_64 rng(743);
        for (int trial = 0; trial < 15; ++trial) {
            Connection conn = rand_connection(rng);
            TotalForm omega = conn.form();
            PsiImage expected;
            for (int b = 0; b < 2; ++b)
                for (int g1 = 0; g1 < 2; ++g1)
                    for (int g2 = 0; g2 < 2; ++g2) expected.at(0, 0, 1, b, g1, g2) = one;
            p.require(psi(omega) - tensor_unit(omega) == expected,
                      at_trial("equivariance defect is off", trial));
            const ExactC& l0 = conn.lambda0;
            const ExactC& l1 = conn.lambda1;
            BaseForm nu0 = rand_base(rng, 0);
            p.require(s_op(conn, nu0) ==
                          BaseForm::one_form(two * l0 * (nu0.c[1] - nu0.c[0]),
                                             two * l1 * (nu0.c[0] - nu0.c[1])),
                      at_trial("degree-0 direction field is off", trial));
            BaseForm nu1 = rand_base(rng, 1);
            ExactC v = ExactC(0, 2) * (l1 * nu1.c[0] + l0 * nu1.c[1]);
            p.require(s_op(conn, nu1) == BaseForm::two_form(v, v),
                      at_trial("degree-1 direction field is off", trial));
            p.require(s_op(conn, rand_base(rng, 2)).is_zero(),
                      at_trial("top-degree direction field is nonzero", trial));
        }
        return p.result();
    }});

    return s;
}

// ---------------------------------------------------------------------------
// qvb
// ---------------------------------------------------------------------------

VerifySuite suite_qvb() {
    VerifySuite s{"qvb", {}};

    s.checks.push_back({"extended derivative Leibniz rules", []() {
        Probe p;
        std::mt19937_64 rng(751);
        for (int trial = 0; trial < 20; ++trial) {
            Connection conn = rand_connection(rng);
            BaseForm f = rand_base(rng, 0);
            for (Corep r : {Corep::trivial, Corep::alternating})
                for (int deg : {0, 1}) {
                    BaseForm eta = rand_base(rng, deg);
                    VForm lv(r, Side::left, f * eta);
                    p.require(ext_deriv(conn, lv).comp ==
                                  d(f) * eta +
                                      f * ext_deriv(conn, VForm(r, Side::left, eta)).comp,
                              at_deg("left Leibniz fails", trial, deg));
                    VForm rv(r, Side::right, eta * f);
                    ExactC sign = deg % 2 == 0 ? one : -one;
                    p.require(ext_deriv(conn, rv).comp ==
                                  ext_deriv(conn, VForm(r, Side::right, eta)).comp * f +
                                      sign * (eta * d(f)),
                              at_deg("right Leibniz fails", trial, deg));
                }
        }
        return p.result();
    }});

    s.checks.push_back({"square of the covariant derivative is the curvature action", []() {
        Probe p;
        std::mt19937_64 rng(753);
        for (int trial = 0; trial < 20; ++trial) {
            Connection conn = rand_connection(rng);
            ExactC u = curvature_scalar(conn);
            Section triv = rand_section(rng, Corep::trivial);
            p.require(ext_deriv(conn, nabla(conn, triv)).comp.is_zero() &&
                          ext_deriv(conn, nabla_hat(conn, triv)).comp.is_zero(),
                      at_trial("trivial sections see curvature", trial));
            Section alt = rand_section(rng, Corep::alternating);
            p.require(ext_deriv(conn, nabla(conn, alt)).comp ==
                          two * (BaseForm::two_form(u, u) * alt.value),
                      at_trial("left square misses the curvature", trial));
            p.require(ext_deriv(conn, nabla_hat(conn, alt)).comp ==
                          two * (BaseForm::two_form(u.conj(), u.conj()) * alt.value),
                      at_trial("right square misses the conjugate curvature", trial));
        }
        return p.result();
    }});

    s.checks.push_back({"adjointness for the extended inner products", []() {
        Probe p;
        std::mt19937_64 rng(755);
        for (int trial = 0; trial < 20; ++trial) {
            Connection conn = rand_connection(rng);
            for (Corep r : {Corep::trivial, Corep::alternating})
                for (Side side : {Side::left, Side::right})
                    for (int k : {1, 2}) {
                        VForm low(r, side, rand_base(rng, k - 1));
                        VForm high(r, side, rand_base(rng, k));
                        p.require(vform_inner(ext_deriv(conn, low), high) ==
                                      vform_inner(low, adjoint_ext_deriv(conn, high)),
                                  at_deg("adjointness fails", trial, k));
                    }
        }
        return p.result();
    }});

    s.checks.push_back({"Laplacian at the distinguished connection is the identity", []() {
        Probe p;
        std::mt19937_64 rng(757);
        Connection ym = Connection::yang_mills();
        for (int trial = 0; trial < 20; ++trial) {
            Section sec = rand_section(rng, Corep::alternating);
            p.require(laplacian(ym, sec, Side::left).comp == sec.value,
                      at_trial("left Laplacian is not the identity", trial));
            p.require(laplacian(ym, sec, Side::right).comp == sec.value,
                      at_trial("right Laplacian is not the identity", trial));
        }
        for (int trial = 0; trial < 15; ++trial) {
            Connection conn = rand_connection(rng);
            for (Side side : {Side::left, Side::right}) {
                Section sec = rand_section(rng, Corep::alternating);
                VForm s0(Corep::alternating, side, sec.value);
                VForm grad = side == Side::left ? nabla(conn, sec) : nabla_hat(conn, sec);
                p.require(vform_inner(laplacian(conn, sec, side), s0) ==
                              vform_inner(grad, grad),
                          at_trial("energy pairing misses the gradient norm", trial));
                p.require(vform_inner(grad, grad).re >= 0,
                          at_trial("gradient energy is negative", trial));
            }
        }
        return p.result();
    }});

    s.checks.push_back({"multiplication field of a connection direction", []() {
        Probe p;
        std::mt19937_64 rng(759);
        for (int trial = 0; trial < 15; ++trial) {
            BaseForm nu = rand_base(rng, 1);
            Section triv = rand_section(rng, Corep::trivial);
            p.require(k_field(nu, triv, Side::left).comp.is_zero() &&
                          k_field(nu, triv, Side::right).comp.is_zero(),
                      at_trial("trivial sections feel the direction field", trial));
            Section alt = rand_section(rng, Corep::alternating);
            p.require(k_field(nu, alt, Side::left).comp == two * (alt.value * nu),
                      at_trial("left multiplication field is off", trial));
            p.require(k_field(nu, alt, Side::right).comp == two * (star(nu) * alt.value),
                      at_trial("right multiplication field is off", trial));
        }
        return p.result();
    }});

    return s;
}

// ---------------------------------------------------------------------------
// gauge
// ---------------------------------------------------------------------------

VerifySuite suite_gauge() {
    VerifySuite s{"gauge", {}};

    s.checks.push_back({"catalog maps satisfy the gauge invariants", []() {
        Probe p;
        p.require(is_gauge(gauge_unit()), "unit map fails the invariants");
        p.require(is_gauge(gauge_involution()), "involution fails the invariants");
        for (const ExactC& c : phase_samples())
            p.require(is_gauge(gauge_phase(c)), "a phase map fails the invariants");
        std::mt19937_64 rng(761);
        for (int trial = 0; trial < 15; ++trial)
            p.require(is_gauge(rand_gauge(rng)), at_trial("covariant-shape map rejected", trial));
        p.require(!is_gauge(GaugeMap{}), "the zero map passed the invariants");
        return p.result();
    }});

    s.checks.push_back({"application is the linear extension of the stored values", []() {
        Probe p;
        std::mt19937_64 rng(763);
        GaugeMap f = rand_gauge(rng);
        ExactC a = rand_scalar(rng), b = rand_scalar(rng);
        GroupForm q(1, a, b);
        p.require(f.apply(q) == a * f.value[1][0] + b * f.value[1][1],
                  "application is not linear in the group argument");
        p.require(f.apply(GroupForm::unit()) == TotalForm::unit(),
                  "the unit is not sent to the unit");
        return p.result();
    }});

    s.checks.push_back({"convolution: unit laws, associativity, closure", []() {
        Probe p;
        std::mt19937_64 rng(765);
        for (int trial = 0; trial < 6; ++trial) {
            GaugeMap f1 = rand_gauge(rng), f2 = rand_gauge(rng), f3 = rand_gauge(rng);
            p.require(convolve(gauge_unit(), f1) == f1 && convolve(f1, gauge_unit()) == f1,
                      at_trial("unit laws fail", trial));
            p.require(convolve(convolve(f1, f2), f3) == convolve(f1, convolve(f2, f3)),
                      at_trial("associativity fails", trial));
            p.require(is_gauge(convolve(f1, f2)), at_trial("closure fails", trial));
        }
        return p.result();
    }});

    s.checks.push_back({"inverses: involution, phases, generic two-sided", []() {
        Probe p;
        p.require(convolve(gauge_involution(), gauge_involution()) == gauge_unit(),
                  "involution does not square to the unit");
        p.require(conv_inverse(gauge_involution()) == gauge_involution(),
                  "involution is not self-inverse");
        auto cs = phase_samples();
        for (const ExactC& c1 : cs)
            for (const ExactC& c2 : cs)
                p.require(convolve(gauge_phase(c1), gauge_phase(c2)) == gauge_phase(c1 * c2),
                          "phases do not multiply");
        for (const ExactC& c : cs)
            p.require(conv_inverse(gauge_phase(c)) == gauge_phase(c.conj()),
                      "phase inverse is not the conjugate");
        p.require(conv_inverse(gauge_unit()) == gauge_unit(), "unit is not self-inverse");
        std::mt19937_64 rng(767);
        for (int trial = 0; trial < 4; ++trial) {
            GaugeMap f = rand_gauge(rng, true);
            GaugeMap g = conv_inverse(f);
            p.require(convolve(f, g) == gauge_unit() && convolve(g, f) == gauge_unit(),
                      at_trial("inverse is not two-sided", trial));
            p.require(is_gauge(g), at_trial("inverse left the gauge set", trial));
        }
        return p.result();
    }});

    s.checks.push_back({"action on connections is a group action by shifts", []() {
        Probe p;
        std::mt19937_64 rng(769);
        for (int trial = 0; trial < 8; ++trial) {
            GaugeMap f = rand_gauge(rng);
            Connection conn = rand_connection(rng);
            BaseForm shift = BaseForm::one_form(
                f.value[1][0].at(1, 0, 0, 0) + f.value[1][1].at(1, 0, 0, 0),
                f.value[1][0].at(1, 0, 1, 0) + f.value[1][1].at(1, 0, 1, 0));
            Connection moved = gauge_action(f, conn);
            p.require(moved.lambda0 == conn.lambda0 + shift.c[0] &&
                          moved.lambda1 == conn.lambda1 + shift.c[1],
                      at_trial("action is not the degree-1 shift", trial));
            GaugeMap f2 = rand_gauge(rng);
            p.require(gauge_action(convolve(f, f2), conn) ==
                          gauge_action(f, gauge_action(f2, conn)),
                      at_trial("action does not compose", trial));
            TotalForm w = rand_total(rng);
            p.require(gauge_transform(gauge_unit(), w) == w,
                      at_trial("unit operator is not the identity", trial));
        }
        for (int trial = 0; trial < 3; ++trial) {
            GaugeMap f = rand_gauge(rng, true);
            Connection conn = rand_connection(rng);
            p.require(gauge_action(conv_inverse(f), gauge_action(f, conn)) == conn,
                      at_trial("inverse does not undo the action", trial));
        }
        return p.result();
    }});

    s.checks.push_back({"stabilizer fixes connections and their energy", []() {
        Probe p;
        p.require(in_gg_ym(gauge_unit()) && in_gg_ym(gauge_involution()),
                  "unit or involution left the stabilizer");
        for (const ExactC& c : phase_samples())
            p.require(in_gg_ym(gauge_phase(c)), "a phase left the stabilizer");
        GaugeMap shifter = gauge_unit();
        shifter.value[1][0] =
            tensor_embed(BaseForm::one_form(one, ExactC::zero()), GroupForm::unit());
        p.require(is_gauge(shifter) && !in_gg_ym(shifter),
                  "a genuine shift map was admitted to the stabilizer");
        std::mt19937_64 rng(771);
        for (int trial = 0; trial < 6; ++trial) {
            Connection conn = rand_connection(rng);
            p.require(gauge_action(gauge_involution(), conn) == conn,
                      at_trial("involution moves a connection", trial));
            p.require(gauge_action(gauge_phase(ExactC(0, 1)), conn) == conn,
                      at_trial("a phase moves a connection", trial));
            Rat e = curvature_scalar(conn).abs2();
            p.require(curvature_scalar(gauge_action(gauge_involution(), conn)).abs2() == e,
                      at_trial("involution changes the energy", trial));
            for (const ExactC& c : phase_samples())
                p.require(curvature_scalar(gauge_action(gauge_phase(c), conn)).abs2() == e,
                          at_trial("a phase changes the energy", trial));
        }
        p.require(curvature_scalar(gauge_action(shifter, Connection::trivial())).abs2() !=
                      curvature_scalar(Connection::trivial()).abs2(),
                  "a shift map left the energy invariant");
        return p.result();
    }});

    s.checks.push_back({"section actions: phases, involution, character image", []() {
        Probe p;
        std::mt19937_64 rng(773);
        for (const ExactC& c : phase_samples()) {
            GaugeMap f = gauge_phase(c);
            for (int trial = 0; trial < 4; ++trial) {
                Section sec = rand_section(rng, Corep::alternating);
                p.require(gauge_action(f, sec, Side::left).value == c * sec.value,
                          at_trial("left phase action is off", trial));
                p.require(gauge_action(f, sec, Side::right).value == c.conj() * sec.value,
                          at_trial("right phase action is off", trial));
                Section tr = rand_section(rng, Corep::trivial);
                p.require(gauge_action(f, tr, Side::left) == tr &&
                              gauge_action(f, tr, Side::right) == tr,
                          at_trial("phases move trivial sections", trial));
            }
        }
        for (int trial = 0; trial < 6; ++trial) {
            Section sec = rand_section(rng, Corep::alternating);
            p.require(gauge_action(gauge_involution(), sec, Side::left).value == -sec.value &&
                          gauge_action(gauge_involution(), sec, Side::right).value == -sec.value,
                      at_trial("involution does not negate sign-corep sections", trial));
            Section tr = rand_section(rng, Corep::trivial);
            p.require(gauge_action(gauge_involution(), tr, Side::left) == tr,
                      at_trial("involution moves a trivial section", trial));
        }
        return p.result();
    }});

    return s;
}

// ---------------------------------------------------------------------------
// field
// ---------------------------------------------------------------------------

VerifySuite suite_field() {
    VerifySuite s{"field", {}};

    s.checks.push_back({"potential kinds evaluate and differentiate", []() {
        Probe p;
        Potential v = Potential::polynomial({ExactC(3), ExactC::zero(), two, -one});
        BaseForm q = BaseForm::fn(two, -one);
        p.require(v.value(q) == BaseForm::fn(ExactC(3) + two * ExactC(4) - ExactC(8),
                                             ExactC(3) + two + one),
                  "polynomial evaluation is off");
        p.require(v.derivative(q) == BaseForm::fn(ExactC(8) - ExactC(12), ExactC(-4) - ExactC(3)),
                  "polynomial derivative is off");
        Potential cs = Potential::constant_slope(two, one);
        p.require(cs.slope() == BaseForm::fn(one, -two), "pinned slope is off");
        p.require(cs.value(q) == BaseForm::fn(two, two) && cs.derivative(q) == cs.slope(),
                  "pinned-slope evaluation is off");
        p.require(Potential::zero().value(q) == BaseForm::zero(0) &&
                      Potential::zero().derivative(q) == BaseForm::zero(0),
                  "zero potential is not zero");
        bool threw = false;
        try {
            (void)Potential::constant_slope(I, one);
        } catch (const DomainError&) {
            threw = true;
        }
        p.require(threw, "a non-real anchor was accepted");
        return p.result();
    }});

    s.checks.push_back({"curvature action closed form and anchors", []() {
        Probe p;
        std::mt19937_64 rng(781);
        for (int trial = 0; trial < 20; ++trial) {
            Connection conn = rand_connection(rng);
            ExactC u = curvature_scalar(conn);
            ExactC density = -ExactC(u.abs2(), Rat(0)) / two;
            p.require(lagrangian_ym(conn) == BaseForm::fn(density, density),
                      at_trial("density misses the closed form", trial));
            p.require(action_ym(conn) == density, at_trial("action misses the density", trial));
        }
        p.require(action_ym(Connection::trivial()) == ExactC::zero(),
                  "zero connection has nonzero action");
        p.require(action_ym(Connection::yang_mills()) == ExactC(make_rat(-1, 8), Rat(0)),
                  "distinguished action is not -1/8");
        p.require(action_ym(Connection(one, ExactC::zero())) == ExactC(make_rat(-1, 2), Rat(0)),
                  "anchor action at (1, 0) is not -1/2");
        return p.result();
    }});

    s.checks.push_back({"stationarity operators match their lowered adjoints", []() {
        Probe p;
        std::mt19937_64 rng(783);
        for (int trial = 0; trial < 5; ++trial) {
            Connection conn = trial == 0 ? Connection::yang_mills() : rand_connection(rng);
            for (Side side : {Side::left, Side::right})
                for (int deg = 0; deg <= 1; ++deg)
                    for (int a = 0; a < 2; ++a) {
                        BaseForm ea = BaseForm::zero(deg);
                        ea.c[static_cast<std::size_t>(a)] = one;
                        BaseForm moved =
                            side == Side::left ? d(ea) - s_op(conn, ea) : d(ea) - s_hat_op(conn, ea);
                        for (int b = 0; b < 2; ++b) {
                            BaseForm eb = BaseForm::zero(deg + 1);
                            eb.c[static_cast<std::size_t>(b)] = one;
                            p.require(inner(moved, eb, side) ==
                                          inner(ea, ad_codifferential(conn, eb, side), side),
                                      at_deg("Gram adjointness fails", trial, deg));
                        }
                    }
        }
        return p.result();
    }});

    s.checks.push_back({"curvature avatars and their lowered closed forms", []() {
        Probe p;
        std::mt19937_64 rng(785);
        for (int trial = 0; trial < 10; ++trial) {
            Connection conn = rand_connection(rng);
            ExactC u = curvature_scalar(conn);
            ExactC ub = u.conj();
            p.require(ad_curvature(conn) == BaseForm::two_form(u, u),
                      at_trial("adjoint curvature is off", trial));
            p.require(conjugate_ad_curvature(conn) == BaseForm::two_form(-ub, -ub),
                      at_trial("conjugate avatar is off", trial));
            ExactC cl0 = conn.lambda0.conj();
            ExactC cl1 = conn.lambda1.conj();
            p.require(ad_codifferential(conn, ad_curvature(conn), Side::left) ==
                          BaseForm::one_form(-two * u * (one - ExactC(0, 2) * cl1),
                                             -two * u * (one - ExactC(0, 2) * cl0)),
                      at_trial("left lowered curvature is off", trial));
            p.require(ad_codifferential(conn, conjugate_ad_curvature(conn), Side::right) ==
                          BaseForm::one_form(two * ub * (one + ExactC(0, 2) * conn.lambda0),
                                             two * ub * (one + ExactC(0, 2) * conn.lambda1)),
                      at_trial("right lowered curvature is off", trial));
            p.require(ad_codifferential(conn, rand_base(rng, 0), Side::left).is_zero(),
                      at_trial("lowering a function is nonzero", trial));
        }
        return p.result();
    }});

    s.checks.push_back({"stationarity pairings differentiate the actions exactly", []() {
        Probe p;
        std::mt19937_64 rng(787);
        Potential vz = Potential::zero();
        Potential vp = Potential::polynomial({one, ExactC(make_rat(1, 2), Rat(0)),
                                              -ExactC(make_rat(1, 3), Rat(0))});
        Section z(Corep::trivial, BaseForm::zero(0));
        for (int trial = 0; trial < 8; ++trial) {
            Connection conn = rand_connection(rng);
            for (const auto& [name, nu] : direction_basis()) {
                (void)name;
                ExactC pr = ym_pairing(conn, nu);
                p.require(pr.im == 0, at_trial("pairing is not real", trial));
                ExactC deriv = directional_action_derivative(conn, z, z, vz, nu);
                p.require(pr == -two * deriv, at_trial("pairing misses the derivative", trial));
            }
            for (Corep corep : {Corep::trivial, Corep::alternating}) {
                Section t1(corep, rand_base(rng, 0));
                Section t2(corep, rand_base(rng, 0));
                for (const auto& [name, nu] : direction_basis()) {
                    (void)name;
                    ExactC f = ymsm_pairing(conn, t1, t2, nu);
                    ExactC deriv = directional_action_derivative(conn, t1, t2, vp, nu);
                    p.require(ExactC(f.re, Rat(0)) == two * deriv,
                              at_trial("matter pairing misses the derivative", trial));
                }
            }
        }
        return p.result();
    }});

    s.checks.push_back({"residual zero set is exactly the critical set", []() {
        Probe p;
        p.require(ym_residual(Connection::trivial()).is_zero(),
                  "residual is nonzero at the zero connection");
        p.require(ym_residual(Connection::yang_mills()).is_zero(),
                  "residual is nonzero at the distinguished connection");
        for (const ExactC& l0 : flat_seeds()) {
            Connection conn(l0, flat_completion(l0));
            p.require(conn.is_flat(), "a seed did not complete to a flat connection");
            p.require(ym_residual(conn).is_zero(), "residual is nonzero on the flat family");
        }
        p.require(!ym_residual(Connection(one, ExactC::zero())).is_zero(),
                  "residual misses the probe at (1, 0)");
        Residual r2 = ym_residual(Connection(I, ExactC::zero()));
        p.require(!r2.is_zero(), "residual misses the probe at (i, 0)");
        p.require(r2.comps.size() >= 2 && r2.comps[0].second == ExactC::zero() &&
                      r2.comps[1].second != ExactC::zero(),
                  "only the imaginary directions should expose the defect at (i, 0)");
        return p.result();
    }});

    s.checks.push_back({"float finite differences of the action match the pairing", []() {
        Probe p;
        std::mt19937_64 rng(789);
        const Int dens[] = {Int(10000), Int(100000), Int(1000000)};
        for (int trial = 0; trial < 10; ++trial) {
            Connection conn = rand_connection(rng);
            for (const auto& [name, nu] : direction_basis()) {
                double pr = to_approx(ym_pairing(conn, nu)).real();
                for (const Int& den : dens) {
                    ExactC h(make_rat(Int(1), den), Rat(0));
                    Connection up(conn.lambda0 + h * nu.c[0], conn.lambda1 + h * nu.c[1]);
                    Connection down(conn.lambda0 - h * nu.c[0], conn.lambda1 - h * nu.c[1]);
                    ExactC quot = (action_ym(up) - action_ym(down)) / (two * h);
                    double fd = -2.0 * to_approx(quot).real();
                    bool close = std::abs(pr - fd) <= 1e-6 * std::max(1.0, std::abs(pr));
                    p.require(close, at_trial(("finite difference misses the pairing along " +
                                               std::string(name))
                                                  .c_str(),
                                              trial));
                }
            }
        }
        return p.result();
    }});

    s.checks.push_back({"diagonal matter triplets solve all field equations", []() {
        Probe p;
        std::vector<std::pair<int, int>> xy = {{2, 1}, {3, 2}, {1, 1}};
        std::vector<Connection> conns = {Connection::trivial(),
                                         Connection(one, flat_completion(one)),
                                         Connection::yang_mills()};
        for (auto [x, y] : xy) {
            Section t(Corep::trivial, BaseForm::fn(ExactC(x), ExactC(y)));
            Potential v = Potential::constant_slope(ExactC(x), ExactC(y));
            for (const Connection& conn : conns) {
                YmsmResiduals r = ymsm_residuals(conn, t, t, v);
                p.require(r.connection_direction.is_zero() && r.left_section.is_zero() &&
                              r.right_section.is_zero(),
                          "a residual is nonzero for the pair (" + std::to_string(x) + ", " +
                              std::to_string(y) + ")");
            }
        }
        return p.result();
    }});

    s.checks.push_back({"sign-corep component system at the distinguished connection", []() {
        Probe p;
        Connection ym = Connection::yang_mills();
        ExactC half(make_rat(1, 2), Rat(0));
        ExactC third(make_rat(1, 3), Rat(0));
        ExactC sixth(make_rat(1, 6), Rat(0));
        std::vector<std::pair<BaseForm, BaseForm>> samples = {
            {BaseForm::fn(one, one), BaseForm::fn(one, one)},
            {BaseForm::fn(two, one), BaseForm::fn(one, two)},
            {BaseForm::fn(I, one), BaseForm::fn(one, I)},
            {BaseForm::fn(one + I, one), BaseForm::fn(one, one + I)},
            {BaseForm::fn(half, third), BaseForm::fn(one, sixth)},
        };
        for (const auto& [p1, p2] : samples) {
            Section t1(Corep::alternating, p1);
            Section t2(Corep::alternating, p2);
            AltSystem sys = alt_component_equations(ym, t1, t2);
            p.require(sys.stationarity.is_zero() && sys.laplacian_match.is_zero(),
                      "the system fails on a matched pair");
            p.require(laplacian(ym, t1, Side::left).comp == p1 &&
                          laplacian(ym, t2, Side::right).comp == p2,
                      "the Laplacians are not the identity on a matched pair");
            p.require(alt_laplacian_formula(ym, p1, Side::left) == p1 &&
                          alt_laplacian_formula(ym, p2, Side::right) == p2,
                      "the closed Laplacian forms are not the identity");
        }
        Section bad1(Corep::alternating, BaseForm::fn(one, one));
        Section bad2(Corep::alternating, BaseForm::fn(two, one));
        p.require(!alt_component_equations(ym, bad1, bad2).stationarity.is_zero(),
                  "a mismatched pair passed the system");
        std::mt19937_64 rng(791);
        for (int trial = 0; trial < 6; ++trial) {
            ExactC l0 = rand_scalar(rng);
            Connection conn(l0, -l0.conj());
            Section t1(Corep::alternating, rand_base(rng, 0));
            Section t2(Corep::alternating, rand_base(rng, 0));
            p.require(alt_component_equations(conn, t1, t2).laplacian_match.is_zero(),
                      at_trial("closed forms miss the pipeline on the matching locus", trial));
        }
        return p.result();
    }});

    s.checks.push_back({"degree-lowering operators square to zero", []() {
        Probe p;
        p.require(continuity_check(Connection::trivial()), "identity fails at the zero connection");
        p.require(continuity_check(Connection::yang_mills()),
                  "identity fails at the distinguished connection");
        std::mt19937_64 rng(793);
        for (int trial = 0; trial < 10; ++trial)
            p.require(continuity_check(rand_connection(rng)),
                      at_trial("identity fails at a random connection", trial));
        return p.result();
    }});

    s.checks.push_back({"gauge families leave the Lagrangians invariant", []() {
        Probe p;
        std::mt19937_64 rng(795);
        Potential v = Potential::polynomial({ExactC(make_rat(1, 2), Rat(0)), -one,
                                             ExactC(make_rat(2, 3), Rat(0))});
        for (const ExactC& c : phase_samples()) {
            GaugeMap f = gauge_phase(c);
            p.require(in_gg_ym(f), "a phase left the stabilizer");
            for (Corep corep : {Corep::trivial, Corep::alternating})
                for (int trial = 0; trial < 3; ++trial) {
                    Connection conn = rand_connection(rng);
                    Section t1(corep, rand_base(rng, 0));
                    Section t2(corep, rand_base(rng, 0));
                    p.require(gauge_action(f, conn) == conn,
                              at_trial("a phase moves a connection", trial));
                    Section m1 = gauge_action(f, t1, Side::left);
                    Section m2 = gauge_action(f, t2, Side::right);
                    p.require(lagrangian_ymsm(conn, m1, m2, v) == lagrangian_ymsm(conn, t1, t2, v),
                              at_trial("matter density moves under a phase", trial));
                    p.require(action_ymsm(conn, m1, m2, v) == action_ymsm(conn, t1, t2, v),
                              at_trial("matter action moves under a phase", trial));
                }
        }
        for (const GaugeMap& f : {gauge_unit(), gauge_involution()})
            for (int trial = 0; trial < 5; ++trial) {
                Connection conn = rand_connection(rng);
                p.require(lagrangian_ym(gauge_action(f, conn)) == lagrangian_ym(conn),
                          at_trial("curvature density moves under the stabilizer", trial));
            }
        return p.result();
    }});

    return s;
}

std::string fmt_base(const BaseForm& a) {
    return "(" + format_exact(a.c[0]) + ", " + format_exact(a.c[1]) + ") in degree " +
           std::to_string(a.degree);
}

} // namespace

const std::vector<VerifySuite>& verify_suites() {
    static const std::vector<VerifySuite> suites = {suite_calculus(), suite_hopf(),
                                                    suite_bundle(),   suite_qvb(),
                                                    suite_gauge(),    suite_field()};
    return suites;
}

std::vector<CheckResult> run_suite(const std::string& name) {
    std::vector<CheckResult> out;
    bool found = false;
    for (const VerifySuite& suite : verify_suites()) {
        if (name != "all" && name != suite.name) continue;
        found = true;
        for (const Check& check : suite.checks) {
            CheckResult res{suite.name, check.name, false, {}};
            try {
                auto [ok, detail] = check.run();
                res.pass = ok;
                res.detail = detail;
            } catch (const std::exception& e) {
                res.pass = false;
                res.detail = std::string("unexpected exception: ") + e.what();
            }
            out.push_back(std::move(res));
        }
    }
    if (!found && name != "all")
        throw DomainError("unknown suite '" + name +
                          "'; known: calculus, hopf, bundle, qvb, gauge, field, all");
    return out;
}

std::vector<ReplicationRow> replication_report() {
    std::vector<ReplicationRow> rows;
    auto push = [&rows](std::string claim, std::string expected, std::string computed) {
        bool pass = expected == computed;
        rows.push_back({std::move(claim), std::move(expected), std::move(computed), pass});
    };

    const BaseForm p0 = BaseForm::point(0);
    const BaseForm p1 = BaseForm::point(1);

    push("volume form components", fmt_base(BaseForm::two_form(-I, I)),
         fmt_base(BaseForm::dvol()));

    push("cyclic volume integral", "1/2", format_exact(integral(p0 * d(p1) * d(p0))));

    {
        BaseForm w = BaseForm::one_form(two + I, ExactC(make_rat(1, 3), Rat(0)));
        ExactC dz = I * (w.c[0] - w.c[1]);
        push("arrow codifferential display", fmt_base(BaseForm::fn(dz, -dz)),
             fmt_base(codiff(w, Side::left)));
        BaseForm v = BaseForm::two_form(one + two * I, ExactC(make_rat(-1, 2), Rat(0)));
        ExactC t = -(v.c[0] + v.c[1]);
        push("top codifferential display", fmt_base(BaseForm::one_form(t, t)),
             fmt_base(codiff(v, Side::left)));
    }

    {
        std::mt19937_64 rng(797);
        int agree = 0;
        const int total = 20;
        for (int trial = 0; trial < total; ++trial) {
            Connection conn = rand_connection(rng);
            ExactC u = curvature_scalar(conn);
            ExactC ab = conn.chart_a() * conn.chart_b();
            bool ok = curvature(conn) == BaseForm::two_form(u, u) &&
                      u == ExactC(Rat(0), make_rat(1, 2)) * (ab - one);
            if (ok) ++agree;
        }
        push("curvature closed form at random connections", "agreement at 20 of 20 samples",
             "agreement at " + std::to_string(agree) + " of 20 samples");
    }

    push("left dual of the unit is the volume form", fmt_base(BaseForm::two_form(-I, I)),
         fmt_base(hodge(BaseForm::unit(), Side::left)));

    {
        Connection conn(one, ExactC(make_rat(1, 3), make_rat(-1, 2)));
        VForm low(Corep::alternating, Side::left, BaseForm::one_form(two, -one));
        VForm high(Corep::alternating, Side::left,
                   BaseForm::two_form(one + I, ExactC(make_rat(1, 2), Rat(0))));
        ExactC lhs = vform_inner(ext_deriv(conn, low), high);
        ExactC rhs = vform_inner(low, adjoint_ext_deriv(conn, high));
        std::string verdict = "both pairings equal " + format_exact(lhs);
        push("extended adjointness in top degree", verdict,
             lhs == rhs ? verdict
                        : "raised pairing " + format_exact(lhs) + ", lowered pairing " +
                              format_exact(rhs));
    }

    {
        ExactC mhalf_i(Rat(0), make_rat(-1, 2));
        push("distinguished curvature", fmt_base(BaseForm::two_form(mhalf_i, mhalf_i)),
             fmt_base(curvature(Connection::yang_mills())));
        push("distinguished action value", "-1/8",
             format_exact(action_ym(Connection::yang_mills())));
    }

    {
        int zero_count = 0;
        const int zero_total = 12;
        if (ym_residual(Connection::trivial()).is_zero()) ++zero_count;
        if (ym_residual(Connection::yang_mills()).is_zero()) ++zero_count;
        for (const ExactC& l0 : flat_seeds())
            if (ym_residual(Connection(l0, flat_completion(l0))).is_zero()) ++zero_count;
        int nonzero_count = 0;
        if (!ym_residual(Connection(one, ExactC::zero())).is_zero()) ++nonzero_count;
        if (!ym_residual(Connection(I, ExactC::zero())).is_zero()) ++nonzero_count;
        push("stationarity residual zero set",
             "zero at " + std::to_string(zero_total) + " critical points, nonzero at 2 probes",
             "zero at " + std::to_string(zero_count) + " critical points, nonzero at " +
                 std::to_string(nonzero_count) + " probes");
    }

    {
        Section t(Corep::trivial, BaseForm::fn(two, one));
        Potential v = Potential::constant_slope(two, one);
        YmsmResiduals r = ymsm_residuals(Connection::trivial(), t, t, v);
        std::string verdict = "connection, left, and right residuals all zero";
        std::string got = verdict;
        if (!r.connection_direction.is_zero())
            got = "connection residual = " + format_residual(r.connection_direction);
        else if (!r.left_section.is_zero())
            got = "left residual = " + format_residual(r.left_section);
        else if (!r.right_section.is_zero())
            got = "right residual = " + format_residual(r.right_section);
        push("diagonal matter triplet (2, 1) at the flat base point", verdict, got);
    }

    {
        Connection ym = Connection::yang_mills();
        Section t1(Corep::alternating, BaseForm::fn(two, one));
        Section t2(Corep::alternating, BaseForm::fn(one, two));
        AltSystem sys = alt_component_equations(ym, t1, t2);
        Section bad1(Corep::alternating, BaseForm::fn(one, one));
        Section bad2(Corep::alternating, BaseForm::fn(two, one));
        AltSystem mism = alt_component_equations(ym, bad1, bad2);
        std::string verdict = "system holds for the matched pair, fails for the mismatched one";
        bool ok = sys.stationarity.is_zero() && sys.laplacian_match.is_zero() &&
                  !mism.stationarity.is_zero();
        push("sign-corep reduction at the distinguished connection", verdict,
             ok ? verdict : "reduction did not separate the two pairs");

        Section probe(Corep::alternating, BaseForm::fn(ExactC(3) + I,
                                                       ExactC(make_rat(1, 2), Rat(0))));
        bool ident = laplacian(ym, probe, Side::left).comp == probe.value &&
                     laplacian(ym, probe, Side::right).comp == probe.value;
        std::string lverdict = "the Laplacian acts as the identity on both sides";
        push("Laplacian identity at the distinguished connection", lverdict,
             ident ? lverdict : "the Laplacian moved a section");
    }

    {
        std::mt19937_64 rng(799);
        int hold = 0;
        if (continuity_check(Connection::trivial())) ++hold;
        if (continuity_check(Connection::yang_mills())) ++hold;
        for (int trial = 0; trial < 10; ++trial)
            if (continuity_check(rand_connection(rng))) ++hold;
        push("degree-lowering square-zero identity", "holds at 12 of 12 connections",
             "holds at " + std::to_string(hold) + " of 12 connections");
    }

    {
        Connection ym = Connection::yang_mills();
        bool fixed = gauge_action(gauge_unit(), ym) == ym &&
                     gauge_action(gauge_involution(), ym) == ym &&
                     gauge_action(gauge_phase(ExactC(0, 1)), ym) == ym;
        std::string verdict = "fixed by the unit, the involution, and a phase";
        push("stabilizer orbit of the distinguished connection", verdict,
             fixed ? verdict : "a stabilizer element moved the connection");
    }

    return rows;
}

} // namespace qpb
