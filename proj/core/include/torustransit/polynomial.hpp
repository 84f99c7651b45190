#pragma once

#include <string>
#include <vector>

#include "torustransit/rational.hpp"

namespace torustransit {

/// Integer polynomial, coefficients lowest-degree-first (index = degree).
/// Kept trimmed: no trailing zero coefficient; the zero polynomial is {}.
struct IPoly {
    IVec c;

    IPoly() = default;
    explicit IPoly(IVec coeffs);

    bool is_zero() const { return c.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const Int& leading() const;

    Int eval(const Int& x) const;
    Rational eval(const Rational& x) const;

    bool operator==(const IPoly& o) const { return c == o.c; }
};

IPoly ipoly_add(const IPoly& a, const IPoly& b);
IPoly ipoly_mul(const IPoly& a, const IPoly& b);
IPoly ipoly_derivative(const IPoly& p);

/// Quotient of p by a monic divisor; remainder must vanish as well when
/// `require_exact`. Returns false (leaving quo untouched) when the division
/// leaves a remainder or non-integer quotient.
bool ipoly_divide_monic(const IPoly& p, const IPoly& monic_divisor, IPoly* quo);

/// Space-separated coefficients, lowest degree first ("6 -5 1" = t^2-5t+6).
std::string format_poly(const IPoly& p);

/// Rational polynomial used for minimal-polynomial arithmetic.
struct QPoly {
    QVec c;

    QPoly() = default;
    explicit QPoly(QVec coeffs);

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }

    bool operator==(const QPoly& o) const { return c == o.c; }
};

QPoly to_qpoly(const IPoly& p);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
void qpoly_divmod(const QPoly& num, const QPoly& den, QPoly* quo, QPoly* rem);
QPoly qpoly_gcd(const QPoly& a, const QPoly& b);  // monic result
QPoly qpoly_lcm(const QPoly& a, const QPoly& b);  // monic result
QPoly qpoly_derivative(const QPoly& p);
QPoly qpoly_make_monic(const QPoly& p);
std::string format_poly(const QPoly& p);

unsigned long euler_phi(unsigned long m);

/// m-th cyclotomic polynomial, exact integer coefficients.
IPoly cyclotomic(unsigned long m);

}  // namespace torustransit
