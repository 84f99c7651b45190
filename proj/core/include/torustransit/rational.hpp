#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace torustransit {

// Exact arithmetic substrate. Every certification path works over these
// types; doubles appear only in the simulator.
using Int = mpz_class;
using Rational = mpq_class;
using QVec = std::vector<Rational>;
using IVec = std::vector<Int>;

/// num/den reduced to lowest terms with positive denominator.
Rational make_rational(const Int& num, const Int& den);

/// Parses "p/q" or "p". Throws InvalidInput on malformed text or q = 0.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" form, denominator always present ("3" -> "3/1").
std::string format_rational(const Rational& q);

std::string format_qvec(const QVec& v);

Int floor_int(const Rational& q);
Int ceil_int(const Rational& q);

/// q - floor(q), in [0,1).
Rational frac_part(const Rational& q);

QVec reduce_mod1(const QVec& p);
std::vector<double> reduce_mod1(const std::vector<double>& p);

QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
Rational qvec_dot(const QVec& a, const QVec& b);

std::vector<double> to_double(const QVec& v);

}  // namespace torustransit
