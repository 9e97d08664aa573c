#include "qpb/total_form.hpp"

#include "qpb/error.hpp"

namespace qpb {

namespace {

int tf_index(int i, int j, int b, int g) {
    if (i < 0 || i > 2 || j < 0 || j > 2 || b < 0 || b > 1 || g < 0 || g > 1)
        throw DomainError("total form index out of range");
    return ((i * 3 + j) * 2 + b) * 2 + g;
}

int psi_index(int i, int j1, int j2, int b, int g1, int g2) {
    if (i < 0 || i > 2 || j1 < 0 || j1 > 2 || j2 < 0 || j2 > 2 || b < 0 || b > 1 ||
        g1 < 0 || g1 > 1 || g2 < 0 || g2 > 1)
        throw DomainError("translation image index out of range");
    return ((((i * 3 + j1) * 3 + j2) * 2 + b) * 2 + g1) * 2 + g2;
}

BaseForm base_basis(int deg, int idx) {
    BaseForm a = BaseForm::zero(deg);
    a.c[idx] = ExactC::one();
    return a;
}

GroupForm group_basis(int deg, int idx) {
    GroupForm a = GroupForm::zero(deg);
    a.c[idx] = ExactC::one();
    return a;
}

ExactC parity(int n) { return n % 2 == 0 ? ExactC::one() : -ExactC::one(); }

} // namespace

ExactC& TotalForm::at(int i, int j, int b, int g) { return c_[tf_index(i, j, b, g)]; }
const ExactC& TotalForm::at(int i, int j, int b, int g) const {
    return c_[tf_index(i, j, b, g)];
}

TotalForm TotalForm::zero() { return TotalForm{}; }

TotalForm TotalForm::unit() {
    TotalForm w;
    for (int b = 0; b < 2; ++b)
        for (int g = 0; g < 2; ++g) w.at(0, 0, b, g) = ExactC::one();
    return w;
}

bool TotalForm::is_zero() const {
    for (const ExactC& z : c_)
        if (!z.is_zero()) return false;
    return true;
}

bool TotalForm::is_horizontal() const {
    for (int i = 0; i < 3; ++i)
        for (int j = 1; j < 3; ++j)
            for (int b = 0; b < 2; ++b)
                for (int g = 0; g < 2; ++g)
                    if (i + j <= 2 && !at(i, j, b, g).is_zero()) return false;
    return true;
}

TotalForm TotalForm::graded_part(int n) const {
    TotalForm w;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; i + j < 3; ++j) {
            if (i + j != n) continue;
            for (int b = 0; b < 2; ++b)
                for (int g = 0; g < 2; ++g) w.at(i, j, b, g) = at(i, j, b, g);
        }
    return w;
}

bool TotalForm::is_homogeneous() const {
    int live = 0;
    for (int n = 0; n <= 2; ++n)
        if (!graded_part(n).is_zero()) ++live;
    return live <= 1;
}

TotalForm TotalForm::operator-() const {
    TotalForm w;
    for (std::size_t k = 0; k < c_.size(); ++k) w.c_[k] = -c_[k];
    return w;
}

TotalForm operator+(const TotalForm& a, const TotalForm& b) {
    TotalForm w;
    for (std::size_t k = 0; k < a.c_.size(); ++k) w.c_[k] = a.c_[k] + b.c_[k];
    return w;
}

TotalForm operator-(const TotalForm& a, const TotalForm& b) { return a + (-b); }

TotalForm operator*(const ExactC& s, const TotalForm& a) {
    TotalForm w;
    for (std::size_t k = 0; k < a.c_.size(); ++k) w.c_[k] = s * a.c_[k];
    return w;
}

TotalForm operator*(const TotalForm& a, const TotalForm& b) {
    TotalForm w;
    for (int i1 = 0; i1 < 3; ++i1)
        for (int j1 = 0; i1 + j1 < 3; ++j1)
            for (int b1 = 0; b1 < 2; ++b1)
                for (int g1 = 0; g1 < 2; ++g1) {
                    const ExactC& ca = a.at(i1, j1, b1, g1);
                    if (ca.is_zero()) continue;
                    for (int i2 = 0; i2 < 3; ++i2)
                        for (int j2 = 0; i2 + j2 < 3; ++j2) {
                            if (i1 + i2 > 2 || j1 + j2 > 2 || i1 + i2 + j1 + j2 > 2)
                                continue;
                            for (int b2 = 0; b2 < 2; ++b2)
                                for (int g2 = 0; g2 < 2; ++g2) {
                                    const ExactC& cb = b.at(i2, j2, b2, g2);
                                    if (cb.is_zero()) continue;
                                    BaseForm pb = base_basis(i1, b1) * base_basis(i2, b2);
                                    if (pb.is_zero()) continue;
                                    GroupForm pg =
                                        group_basis(j1, g1) * group_basis(j2, g2);
                                    if (pg.is_zero()) continue;
                                    ExactC f = parity(j1 * i2) * ca * cb;
                                    for (int b3 = 0; b3 < 2; ++b3)
                                        for (int g3 = 0; g3 < 2; ++g3) {
                                            ExactC term = f * pb.c[b3] * pg.c[g3];
                                            if (!term.is_zero())
                                                w.at(pb.degree, pg.degree, b3, g3) += term;
                                        }
                                }
                        }
                }
    return w;
}

bool operator==(const TotalForm& a, const TotalForm& b) { return (a - b).is_zero(); }

TotalForm tensor_embed(const BaseForm& a, const GroupForm& t) {
    if (a.degree + t.degree > 2) return TotalForm::zero();
    TotalForm w;
    for (int b = 0; b < 2; ++b)
        for (int g = 0; g < 2; ++g) w.at(a.degree, t.degree, b, g) = a.c[b] * t.c[g];
    return w;
}

TotalForm d(const TotalForm& w) {
    TotalForm r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; i + j < 3; ++j)
            for (int b = 0; b < 2; ++b)
                for (int g = 0; g < 2; ++g) {
                    const ExactC& cz = w.at(i, j, b, g);
                    if (cz.is_zero()) continue;
                    BaseForm db = d(base_basis(i, b));
                    if (!db.is_zero() && i + 1 + j <= 2)
                        for (int b3 = 0; b3 < 2; ++b3) {
                            ExactC term = cz * db.c[b3];
                            if (!term.is_zero()) r.at(i + 1, j, b3, g) += term;
                        }
                    GroupForm dg = d(group_basis(j, g));
                    if (!dg.is_zero() && i + j + 1 <= 2) {
                        ExactC sgn = parity(i);
                        for (int g3 = 0; g3 < 2; ++g3) {
                            ExactC term = sgn * cz * dg.c[g3];
                            if (!term.is_zero()) r.at(i, j + 1, b, g3) += term;
                        }
                    }
                }
    return r;
}

TotalForm star(const TotalForm& w) {
    TotalForm r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; i + j < 3; ++j)
            for (int b = 0; b < 2; ++b)
                for (int g = 0; g < 2; ++g) {
                    const ExactC& cz = w.at(i, j, b, g);
                    if (cz.is_zero()) continue;
                    BaseForm sb = star(base_basis(i, b));   // real +-1 pattern
                    GroupForm sg = star(group_basis(j, g)); // real +-1 pattern
                    // No interchange sign here: the leg-wise star is the
                    // unique involution that commutes with d and stays
                    // graded-antimultiplicative for the total degree.
                    ExactC f = cz.conj();
                    for (int b3 = 0; b3 < 2; ++b3)
                        for (int g3 = 0; g3 < 2; ++g3) {
                            ExactC term = f * sb.c[b3] * sg.c[g3];
                            if (!term.is_zero()) r.at(i, j, b3, g3) += term;
                        }
                }
    return r;
}

ExactC& PsiImage::at(int i, int j1, int j2, int b, int g1, int g2) {
    return c_[psi_index(i, j1, j2, b, g1, g2)];
}
const ExactC& PsiImage::at(int i, int j1, int j2, int b, int g1, int g2) const {
    return c_[psi_index(i, j1, j2, b, g1, g2)];
}

bool PsiImage::is_zero() const {
    for (const ExactC& z : c_)
        if (!z.is_zero()) return false;
    return true;
}

PsiImage PsiImage::operator-() const {
    PsiImage r;
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
    return r;
}

PsiImage operator+(const PsiImage& a, const PsiImage& b) {
    PsiImage r;
    for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

PsiImage operator-(const PsiImage& a, const PsiImage& b) { return a + (-b); }

bool operator==(const PsiImage& a, const PsiImage& b) { return (a - b).is_zero(); }

PsiImage psi(const TotalForm& w) {
    PsiImage r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; i + j < 3; ++j)
            for (int b = 0; b < 2; ++b)
                for (int g = 0; g < 2; ++g) {
                    const ExactC& cz = w.at(i, j, b, g);
                    if (cz.is_zero()) continue;
                    GroupTensor cp = coproduct_ext(group_basis(j, g));
                    for (int j1 = 0; j1 < 3; ++j1)
                        for (int j2 = 0; j1 + j2 < 3; ++j2)
                            for (int g1 = 0; g1 < 2; ++g1)
                                for (int g2 = 0; g2 < 2; ++g2) {
                                    const ExactC& t = cp.coeff[j1][j2][g1][g2];
                                    if (t.is_zero()) continue;
                                    r.at(i, j1, j2, b, g1, g2) += cz * t;
                                }
                }
    return r;
}

PsiImage tensor_unit(const TotalForm& w) {
    PsiImage r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; i + j < 3; ++j)
            for (int b = 0; b < 2; ++b)
                for (int g = 0; g < 2; ++g) {
                    const ExactC& cz = w.at(i, j, b, g);
                    if (cz.is_zero()) continue;
                    for (int g2 = 0; g2 < 2; ++g2) r.at(i, j, 0, b, g, g2) += cz;
                }
    return r;
}

std::string format_total(const TotalForm& w) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; i + j < 3; ++j)
            for (int b = 0; b < 2; ++b)
                for (int g = 0; g < 2; ++g) {
                    const ExactC& cz = w.at(i, j, b, g);
                    if (cz.is_zero()) continue;
                    if (!first) out += ", ";
                    first = false;
                    out += "(" + std::to_string(i) + "," + std::to_string(j) + ")[" +
                           std::to_string(b) + "][" + std::to_string(g) +
                           "]=" + format_exact(cz);
                }
    return out + (first ? "0}" : "}");
}

} // namespace qpb
