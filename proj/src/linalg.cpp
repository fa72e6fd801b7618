#include "rpde/linalg.hpp"

namespace rpde {

IVector operator*(const IMatrix& m, const IVector& x) {
    if (m.cols() != x.size()) throw DomainError("matrix-vector shape mismatch");
    IVector y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Interval s(0.0);
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

IMatrix operator*(const IMatrix& a, const IMatrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matrix-matrix shape mismatch");
    IMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Interval& aik = a(i, k);
            if (aik.lo == 0.0 && aik.hi == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::vector<CInterval> operator*(const CIMatrix& m, const std::vector<CInterval>& x) {
    if (m.cols() != x.size()) throw DomainError("matrix-vector shape mismatch");
    std::vector<CInterval> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        CInterval s;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (is_zero(x[j])) continue;
            s += m(i, j) * x[j];
        }
        y[i] = s;
    }
    return y;
}

}  // namespace rpde
