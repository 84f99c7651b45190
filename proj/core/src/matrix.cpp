#include "torustransit/matrix.hpp"

namespace torustransit {

QMat to_rational(const IMat& m) {
    QMat q(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
    return q;
}

QVec to_rational(const IVec& v) {
    QVec q(v.size());
    for (size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
    return q;
}

std::vector<double> apply_double(const IMat& m, const std::vector<double>& v) {
    if (v.size() != m.cols()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<double> out(m.rows(), 0.0);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j).get_d() * v[j];
    return out;
}

std::string format_matrix(const IMat& m) {
    std::string out;
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += m(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

IMat matrix_power(const IMat& a, unsigned long e) {
    if (!a.square()) throw DimensionError("matrix power requires a square matrix");
    IMat result = IMat::identity(a.rows());
    IMat base = a;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

}  // namespace torustransit
