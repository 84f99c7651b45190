#include "torustransit/rational.hpp"

#include <cmath>

#include "torustransit/errors.hpp"

namespace torustransit {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return make_rational(Int(text), 1);
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw InvalidInput("malformed rational: '" + text + "'");
    }
}

std::string format_rational(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_qvec(const QVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_rational(v[i]);
    }
    return out + ")";
}

Int floor_int(const Rational& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

Int ceil_int(const Rational& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

Rational frac_part(const Rational& q) {
    return q - Rational(floor_int(q));
}

QVec reduce_mod1(const QVec& p) {
    QVec out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = frac_part(p[i]);
    return out;
}

std::vector<double> reduce_mod1(const std::vector<double>& p) {
    std::vector<double> out(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        double f = p[i] - std::floor(p[i]);
        if (f >= 1.0) f = 0.0;  // guard against floor rounding at integers
        out[i] = f;
    }
    return out;
}

QVec qvec_add(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DimensionError("vector size mismatch");
    QVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DimensionError("vector size mismatch");
    QVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Rational qvec_dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DimensionError("vector size mismatch");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<double> to_double(const QVec& v) {
    std::vector<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
    return out;
}

}  // namespace torustransit
