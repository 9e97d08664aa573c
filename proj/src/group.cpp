#include "qpb/group.hpp"

#include "qpb/error.hpp"

namespace qpb {

namespace {

void check_degree(int deg) {
    if (deg < 0 || deg > 2) throw DomainError("group form degree out of range");
}

} // namespace

GroupForm::GroupForm(int deg, ExactC c0, ExactC c1)
    : degree(deg), c{std::move(c0), std::move(c1)} {
    check_degree(deg);
}

GroupForm GroupForm::fn(ExactC a, ExactC b) { return GroupForm(0, std::move(a), std::move(b)); }
GroupForm GroupForm::one_form(ExactC a, ExactC b) { return GroupForm(1, std::move(a), std::move(b)); }
GroupForm GroupForm::two_form(ExactC a, ExactC b) { return GroupForm(2, std::move(a), std::move(b)); }
GroupForm GroupForm::zero(int deg) { return GroupForm(deg, ExactC::zero(), ExactC::zero()); }
GroupForm GroupForm::unit() { return fn(ExactC::one(), ExactC::one()); }

GroupForm GroupForm::delta(int k) {
    if (k != 0 && k != 1) throw DomainError("group element index must be 0 or 1");
    return fn(ExactC(k == 0 ? 1 : 0), ExactC(k == 1 ? 1 : 0));
}

GroupForm GroupForm::sign_character() { return fn(ExactC::one(), -ExactC::one()); }
GroupForm GroupForm::invariant_one_form() { return one_form(ExactC::one(), ExactC::one()); }

GroupForm GroupForm::operator-() const { return GroupForm(degree, -c[0], -c[1]); }

GroupForm operator+(const GroupForm& a, const GroupForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree != b.degree) throw DomainError("adding group forms of different degree");
    return GroupForm(a.degree, a.c[0] + b.c[0], a.c[1] + b.c[1]);
}

GroupForm operator-(const GroupForm& a, const GroupForm& b) { return a + (-b); }

GroupForm operator*(const ExactC& s, const GroupForm& a) {
    return GroupForm(a.degree, s * a.c[0], s * a.c[1]);
}

GroupForm operator*(const GroupForm& a, const GroupForm& b) {
    int p = a.degree, q = b.degree;
    if (p + q > 2) return GroupForm::zero(2);
    if (p == 0) {
        // functions pair with an arrow's source on the left...
        return GroupForm(q, a.c[0] * b.c[0], a.c[1] * b.c[1]);
    }
    if (q == 0) {
        if (p == 1) // ...and with its target on the right
            return GroupForm::one_form(a.c[0] * b.c[1], a.c[1] * b.c[0]);
        return GroupForm(p, a.c[0] * b.c[0], a.c[1] * b.c[1]);
    }
    // arrows concatenate into round trips, no extra factor here
    return GroupForm::two_form(a.c[0] * b.c[1], a.c[1] * b.c[0]);
}

bool operator==(const GroupForm& a, const GroupForm& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree == b.degree && a.c[0] == b.c[0] && a.c[1] == b.c[1];
}

GroupForm d(const GroupForm& a) {
    switch (a.degree) {
    case 0: return GroupForm::one_form(a.c[1] - a.c[0], a.c[0] - a.c[1]);
    case 1: {
        ExactC s = a.c[0] + a.c[1];
        return GroupForm::two_form(s, s);
    }
    default: return GroupForm::zero(2);
    }
}

GroupForm star(const GroupForm& a) {
    switch (a.degree) {
    case 0: return GroupForm::fn(a.c[0].conj(), a.c[1].conj());
    case 1: return GroupForm::one_form(-a.c[1].conj(), -a.c[0].conj());
    default: return GroupForm::two_form(-a.c[0].conj(), -a.c[1].conj());
    }
}

ExactC counit(const GroupForm& a) {
    if (a.degree != 0) throw DomainError("counit expects a degree-0 element");
    return a.c[0];
}

GroupForm antipode(const GroupForm& a) {
    if (a.degree != 0) throw DomainError("antipode expects a degree-0 element");
    return a; // inversion is trivial in an order-two group
}

bool GroupTensor::is_zero() const {
    for (const auto& j1 : coeff)
        for (const auto& j2 : j1)
            for (const auto& g1 : j2)
                for (const auto& z : g1)
                    if (!z.is_zero()) return false;
    return true;
}

GroupTensor GroupTensor::operator-() const {
    GroupTensor r;
    for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = 0; j2 < 3; ++j2)
            for (int g1 = 0; g1 < 2; ++g1)
                for (int g2 = 0; g2 < 2; ++g2)
                    r.coeff[j1][j2][g1][g2] = -coeff[j1][j2][g1][g2];
    return r;
}

GroupTensor operator+(const GroupTensor& a, const GroupTensor& b) {
    GroupTensor r;
    for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = 0; j2 < 3; ++j2)
            for (int g1 = 0; g1 < 2; ++g1)
                for (int g2 = 0; g2 < 2; ++g2)
                    r.coeff[j1][j2][g1][g2] =
                        a.coeff[j1][j2][g1][g2] + b.coeff[j1][j2][g1][g2];
    return r;
}

GroupTensor operator-(const GroupTensor& a, const GroupTensor& b) { return a + (-b); }

GroupTensor operator*(const ExactC& s, const GroupTensor& a) {
    GroupTensor r;
    for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = 0; j2 < 3; ++j2)
            for (int g1 = 0; g1 < 2; ++g1)
                for (int g2 = 0; g2 < 2; ++g2)
                    r.coeff[j1][j2][g1][g2] = s * a.coeff[j1][j2][g1][g2];
    return r;
}

namespace {

GroupForm basis_form(int deg, int idx) {
    GroupForm b = GroupForm::zero(deg);
    b.c[idx] = ExactC::one();
    return b;
}

} // namespace

GroupTensor operator*(const GroupTensor& a, const GroupTensor& b) {
    GroupTensor r;
    for (int aj1 = 0; aj1 < 3; ++aj1)
        for (int aj2 = 0; aj2 + aj1 < 3; ++aj2)
            for (int ag1 = 0; ag1 < 2; ++ag1)
                for (int ag2 = 0; ag2 < 2; ++ag2) {
                    const ExactC& ca = a.coeff[aj1][aj2][ag1][ag2];
                    if (ca.is_zero()) continue;
                    for (int bj1 = 0; bj1 < 3; ++bj1)
                        for (int bj2 = 0; bj2 + bj1 < 3; ++bj2)
                            for (int bg1 = 0; bg1 < 2; ++bg1)
                                for (int bg2 = 0; bg2 < 2; ++bg2) {
                                    const ExactC& cb = b.coeff[bj1][bj2][bg1][bg2];
                                    if (cb.is_zero()) continue;
                                    if (aj1 + bj1 > 2 || aj2 + bj2 > 2 ||
                                        aj1 + bj1 + aj2 + bj2 > 2)
                                        continue;
                                    GroupForm left =
                                        basis_form(aj1, ag1) * basis_form(bj1, bg1);
                                    GroupForm right =
                                        basis_form(aj2, ag2) * basis_form(bj2, bg2);
                                    ExactC sign =
                                        (aj2 * bj1) % 2 == 0 ? ExactC::one() : -ExactC::one();
                                    ExactC factor = sign * ca * cb;
                                    for (int g1 = 0; g1 < 2; ++g1)
                                        for (int g2 = 0; g2 < 2; ++g2) {
                                            ExactC term =
                                                factor * left.c[g1] * right.c[g2];
                                            if (!term.is_zero())
                                                r.coeff[left.degree][right.degree][g1][g2] +=
                                                    term;
                                        }
                                }
                }
    return r;
}

bool operator==(const GroupTensor& a, const GroupTensor& b) { return (a - b).is_zero(); }

GroupTensor tensor(const GroupForm& a, const GroupForm& b) {
    GroupTensor r;
    for (int g1 = 0; g1 < 2; ++g1)
        for (int g2 = 0; g2 < 2; ++g2)
            r.coeff[a.degree][b.degree][g1][g2] = a.c[g1] * b.c[g2];
    return r;
}

GroupTensor coproduct(const GroupForm& a) {
    if (a.degree != 0) throw DomainError("coproduct expects a degree-0 element");
    // dual to the group law: delta_k -> sum over products landing on k
    GroupTensor r;
    for (int k = 0; k < 2; ++k) {
        const ExactC& ck = a.c[k];
        if (ck.is_zero()) continue;
        for (int g = 0; g < 2; ++g) r.coeff[0][0][g][k ^ g] += ck;
    }
    return r;
}

GroupTensor coproduct_ext(const GroupForm& a) {
    // Structure table of the extension; every entry has coefficient 1.
    // Each row lists, for basis element (deg, idx), the terms
    // (j1, g1) x (j2, g2).
    struct Term { int j1, g1, j2, g2; };
    static const Term table[3][2][4] = {
        // degree 0: u0, u1 (the coproduct itself; rows padded with j1 = -1)
        {{{0, 0, 0, 0}, {0, 1, 0, 1}, {-1, 0, 0, 0}, {-1, 0, 0, 0}},
         {{0, 0, 0, 1}, {0, 1, 0, 0}, {-1, 0, 0, 0}, {-1, 0, 0, 0}}},
        // degree 1: g01, g10
        {{{0, 0, 1, 0}, {1, 0, 0, 0}, {1, 1, 0, 1}, {0, 1, 1, 1}},
         {{0, 0, 1, 1}, {1, 1, 0, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}}},
        // degree 2: g01 g10, g10 g01
        {{{0, 0, 2, 0}, {2, 0, 0, 0}, {2, 1, 0, 1}, {0, 1, 2, 1}},
         {{0, 0, 2, 1}, {2, 1, 0, 0}, {2, 0, 0, 1}, {0, 1, 2, 0}}},
    };
    GroupTensor r;
    for (int idx = 0; idx < 2; ++idx) {
        const ExactC& coeff = a.c[idx];
        if (coeff.is_zero()) continue;
        for (const Term& t : table[a.degree][idx]) {
            if (t.j1 < 0) continue; // padding
            r.coeff[t.j1][t.j2][t.g1][t.g2] += coeff;
        }
    }
    return r;
}

GroupTensor d(const GroupTensor& t) {
    GroupTensor r;
    for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = 0; j2 + j1 < 3; ++j2)
            for (int g1 = 0; g1 < 2; ++g1)
                for (int g2 = 0; g2 < 2; ++g2) {
                    const ExactC& cz = t.coeff[j1][j2][g1][g2];
                    if (cz.is_zero()) continue;
                    GroupForm left = d(basis_form(j1, g1));
                    if (!left.is_zero() && j1 + 1 + j2 <= 2)
                        for (int g = 0; g < 2; ++g) {
                            ExactC term = cz * left.c[g];
                            if (!term.is_zero()) r.coeff[j1 + 1][j2][g][g2] += term;
                        }
                    GroupForm right = d(basis_form(j2, g2));
                    ExactC sign = j1 % 2 == 0 ? ExactC::one() : -ExactC::one();
                    if (!right.is_zero() && j1 + j2 + 1 <= 2)
                        for (int g = 0; g < 2; ++g) {
                            ExactC term = sign * cz * right.c[g];
                            if (!term.is_zero()) r.coeff[j1][j2 + 1][g1][g] += term;
                        }
                }
    return r;
}

GroupForm germ(const GroupForm& a) {
    if (a.degree != 0) throw DomainError("germ map expects a degree-0 element");
    ExactC s = a.c[1] - a.c[0];
    return s * GroupForm::invariant_one_form();
}

GroupForm germ_compose(const GroupForm& theta, const GroupForm& b) {
    if (theta.degree != 1) throw DomainError("germ composition expects a degree-1 element");
    if (b.degree != 0) throw DomainError("germ composition expects a degree-0 argument");
    // theta o b = antipode(b(1)) theta b(2), summed over the coproduct of b
    GroupForm r = GroupForm::zero(1);
    GroupTensor cp = coproduct(b);
    for (int g1 = 0; g1 < 2; ++g1)
        for (int g2 = 0; g2 < 2; ++g2) {
            const ExactC& cz = cp.coeff[0][0][g1][g2];
            if (cz.is_zero()) continue;
            r = r + cz * (antipode(basis_form(0, g1)) * theta * basis_form(0, g2));
        }
    return r;
}

GroupForm corep_element(Corep r) {
    return r == Corep::trivial ? GroupForm::unit() : GroupForm::sign_character();
}

int corep_sign(Corep r) { return r == Corep::trivial ? 1 : -1; }

std::string format_group(const GroupForm& a) {
    static const char* names[] = {"gfn", "gone", "gtwo"};
    return std::string(names[a.degree]) + "(" + format_exact(a.c[0]) + ", " +
           format_exact(a.c[1]) + ")";
}

} // namespace qpb
