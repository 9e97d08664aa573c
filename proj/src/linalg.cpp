#include "qpb/linalg.hpp"

#include "qpb/error.hpp"

namespace qpb {

ExactMat mat_identity(std::size_t n) {
    ExactMat m(n, ExactVec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = ExactC::one();
    return m;
}

ExactMat mat_mul(const ExactMat& a, const ExactMat& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size())
        throw DomainError("matrix product shape mismatch");
    ExactMat r(a.size(), ExactVec(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

ExactVec mat_apply(const ExactMat& a, const ExactVec& v) {
    if (a.empty() || a[0].size() != v.size())
        throw DomainError("matrix-vector shape mismatch");
    ExactVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

ExactMat conj_transpose(const ExactMat& a) {
    if (a.empty()) return a;
    ExactMat r(a[0].size(), ExactVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j].conj();
    return r;
}

namespace {

/// In-place elimination solving a * X = b for several right-hand sides.
ExactMat eliminate(ExactMat a, ExactMat b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        // exact arithmetic: any nonzero pivot is a valid pivot
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw NumericError("singular linear system");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        ExactC inv = inverse(a[col][col]);
        for (std::size_t j = 0; j < n; ++j) a[col][j] *= inv;
        for (std::size_t j = 0; j < b[0].size(); ++j) b[col][j] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            ExactC f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) a[row][j] -= f * a[col][j];
            for (std::size_t j = 0; j < b[0].size(); ++j) b[row][j] -= f * b[col][j];
        }
    }
    return b;
}

} // namespace

ExactVec solve_linear(ExactMat a, ExactVec rhs) {
    if (a.empty() || a.size() != a[0].size() || a.size() != rhs.size())
        throw DomainError("solve_linear shape mismatch");
    ExactMat b(rhs.size(), ExactVec(1));
    for (std::size_t i = 0; i < rhs.size(); ++i) b[i][0] = std::move(rhs[i]);
    ExactMat x = eliminate(std::move(a), std::move(b));
    ExactVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = std::move(x[i][0]);
    return r;
}

ExactMat solve_matrix(const ExactMat& a, const ExactMat& b) {
    if (a.empty() || a.size() != a[0].size() || a.size() != b.size())
        throw DomainError("solve_matrix shape mismatch");
    return eliminate(a, b);
}

ExactMat gram_adjoint(const ExactMat& m, const ExactMat& gram_in,
                      const ExactMat& gram_out) {
    return solve_matrix(gram_in, mat_mul(conj_transpose(m), gram_out));
}

} // namespace qpb
