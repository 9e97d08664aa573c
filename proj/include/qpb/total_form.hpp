#pragma once

#include <array>
#include <string>

#include "qpb/base_form.hpp"
#include "qpb/group.hpp"

namespace qpb {

/// Form on the total space of the bundle: an element of the graded
/// tensor product of the base calculus and the group calculus.
///
/// The component of bidegree (i, j) is a 2x2 exact coefficient matrix,
/// indexed by the degree-i base basis and the degree-j group basis.
/// Bidegrees with i + j > 2 vanish identically (degree truncation).
struct TotalForm {
    /// coefficient of base_basis(i, b) (x) group_basis(j, g)
    ExactC& at(int i, int j, int b, int g);
    const ExactC& at(int i, int j, int b, int g) const;

    static TotalForm zero();
    /// The algebra unit 1 (x) 1.
    static TotalForm unit();

    bool is_zero() const;
    /// True when only bidegrees (i, 0) carry coefficients.
    bool is_horizontal() const;
    /// Total-degree homogeneous part (sum of bidegrees with i + j = n).
    TotalForm graded_part(int n) const;
    /// True if exactly one total degree carries coefficients (or all vanish).
    bool is_homogeneous() const;

    TotalForm operator-() const;
    friend TotalForm operator+(const TotalForm& a, const TotalForm& b);
    friend TotalForm operator-(const TotalForm& a, const TotalForm& b);
    friend TotalForm operator*(const ExactC& s, const TotalForm& a);
    /// Graded product: pure tensors compose with the sign (-1)^{j1 i2}.
    friend TotalForm operator*(const TotalForm& a, const TotalForm& b);
    friend bool operator==(const TotalForm& a, const TotalForm& b);
    friend bool operator!=(const TotalForm& a, const TotalForm& b) { return !(a == b); }

private:
    std::array<ExactC, 36> c_{};
};

/// Pure tensor a (x) t as a total form.
TotalForm tensor_embed(const BaseForm& a, const GroupForm& t);

/// Total differential: d(a x t) = da x t + (-1)^{|a|} a x dt.
TotalForm d(const TotalForm& w);

/// Star structure: *(a x t) = a* x t* on pure tensors (the unique
/// involution commuting with d and graded-antimultiplicative in the
/// total degree).
TotalForm star(const TotalForm& w);

/// Image of the bundle translation map Psi = id (x) extended-coproduct:
/// triple-graded coefficients over (base degree i, bundle group leg j1,
/// coacting group leg j2), with i + j1 + j2 <= 2.
struct PsiImage {
    ExactC& at(int i, int j1, int j2, int b, int g1, int g2);
    const ExactC& at(int i, int j1, int j2, int b, int g1, int g2) const;

    bool is_zero() const;

    PsiImage operator-() const;
    friend PsiImage operator+(const PsiImage& a, const PsiImage& b);
    friend PsiImage operator-(const PsiImage& a, const PsiImage& b);
    friend bool operator==(const PsiImage& a, const PsiImage& b);
    friend bool operator!=(const PsiImage& a, const PsiImage& b) { return !(a == b); }

private:
    std::array<ExactC, 216> c_{};
};

/// Apply the translation map to a total form.
PsiImage psi(const TotalForm& w);

/// w (x) 1: the image a trivially-coacting form would have.
PsiImage tensor_unit(const TotalForm& w);

std::string format_total(const TotalForm& w);

} // namespace qpb
