#include "torustransit/polynomial.hpp"

#include <map>

#include "torustransit/errors.hpp"

namespace torustransit {

namespace {

void trim(IVec& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void trim(QVec& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IPoly::IPoly(IVec coeffs) : c(std::move(coeffs)) { trim(c); }

const Int& IPoly::leading() const {
    if (is_zero()) throw InvalidInput("zero polynomial has no leading coefficient");
    return c.back();
}

Int IPoly::eval(const Int& x) const {
    Int acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

Rational IPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + Rational(c[i]);
    return acc;
}

IPoly ipoly_add(const IPoly& a, const IPoly& b) {
    IVec out(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
    return IPoly(std::move(out));
}

IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
    if (a.is_zero() || b.is_zero()) return IPoly();
    IVec out(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    return IPoly(std::move(out));
}

IPoly ipoly_derivative(const IPoly& p) {
    if (p.c.size() <= 1) return IPoly();
    IVec out(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) out[i - 1] = p.c[i] * Int(i);
    return IPoly(std::move(out));
}

bool ipoly_divide_monic(const IPoly& p, const IPoly& d, IPoly* quo) {
    if (d.is_zero() || d.leading() != 1) throw InvalidInput("divisor must be monic");
    if (p.is_zero()) {
        if (quo) *quo = IPoly();
        return true;
    }
    if (p.degree() < d.degree()) return false;
    IVec rem = p.c;
    const size_t dn = d.c.size();
    IVec q(rem.size() - dn + 1, Int(0));
    for (size_t shift = q.size(); shift-- > 0;) {
        Int f = rem[shift + dn - 1];
        if (f != 0) {
            q[shift] = f;
            for (size_t i = 0; i < dn; ++i) rem[shift + i] -= f * d.c[i];
        }
    }
    trim(rem);
    if (!rem.empty()) return false;
    if (quo) *quo = IPoly(std::move(q));
    return true;
}

std::string format_poly(const IPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (i) out += ' ';
        out += p.c[i].get_str();
    }
    return out;
}

QPoly::QPoly(QVec coeffs) : c(std::move(coeffs)) { trim(c); }

QPoly to_qpoly(const IPoly& p) {
    QVec out(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) out[i] = Rational(p.c[i]);
    return QPoly(std::move(out));
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QVec out(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    return QPoly(std::move(out));
}

void qpoly_divmod(const QPoly& num, const QPoly& den, QPoly* quo, QPoly* rem) {
    if (den.is_zero()) throw InvalidInput("polynomial division by zero");
    QVec r = num.c;
    QVec q;
    const size_t dn = den.c.size();
    const Rational lead = den.c.back();
    if (r.size() >= dn) {
        q.assign(r.size() - dn + 1, Rational(0));
        for (size_t shift = q.size(); shift-- > 0;) {
            if (r[shift + dn - 1] != 0) {
                Rational f = r[shift + dn - 1] / lead;
                q[shift] = f;
                for (size_t i = 0; i < dn; ++i) r[shift + i] -= f * den.c[i];
            }
        }
    }
    if (quo) *quo = QPoly(std::move(q));
    if (rem) *rem = QPoly(std::move(r));
}

QPoly qpoly_make_monic(const QPoly& p) {
    if (p.is_zero()) return p;
    QVec out = p.c;
    const Rational lead = out.back();
    for (auto& v : out) v /= lead;
    return QPoly(std::move(out));
}

QPoly qpoly_gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly rem;
        qpoly_divmod(x, y, nullptr, &rem);
        x = y;
        y = rem;
    }
    if (x.is_zero()) return x;
    return qpoly_make_monic(x);
}

QPoly qpoly_lcm(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QPoly g = qpoly_gcd(a, b);
    QPoly quo;
    qpoly_divmod(a, g, &quo, nullptr);
    return qpoly_make_monic(qpoly_mul(quo, b));
}

QPoly qpoly_derivative(const QPoly& p) {
    if (p.c.size() <= 1) return QPoly();
    QVec out(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) out[i - 1] = p.c[i] * Rational(Int(i));
    return QPoly(std::move(out));
}

std::string format_poly(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (i) out += ' ';
        out += format_rational(p.c[i]);
    }
    return out;
}

unsigned long euler_phi(unsigned long m) {
    unsigned long result = m;
    unsigned long x = m;
    for (unsigned long p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            result -= result / p;
            while (x % p == 0) x /= p;
        }
    }
    if (x > 1) result -= result / x;
    return result;
}

namespace {

IPoly cyclotomic_impl(unsigned long m, std::map<unsigned long, IPoly>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // x^m - 1 divided by the product of all proper cyclotomic divisors.
    IVec xm(m + 1, Int(0));
    xm[0] = -1;
    xm[m] = 1;
    IPoly result(std::move(xm));
    for (unsigned long d = 1; d < m; ++d) {
        if (m % d == 0) {
            IPoly quotient;
            if (!ipoly_divide_monic(result, cyclotomic_impl(d, cache), &quotient))
                throw Error("cyclotomic division failed");
            result = quotient;
        }
    }
    cache.emplace(m, result);
    return result;
}

}  // namespace

IPoly cyclotomic(unsigned long m) {
    if (m == 0) throw InvalidInput("cyclotomic index must be positive");
    std::map<unsigned long, IPoly> cache;
    return cyclotomic_impl(m, cache);
}

}  // namespace torustransit
