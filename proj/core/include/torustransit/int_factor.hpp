#pragma once

#include <map>
#include <vector>

#include "torustransit/rational.hpp"

namespace torustransit {

/// Prime factorization of |n|, n != 0. Trial division plus Pollard rho;
/// ample for the determinant-sized constants the root search meets.
std::map<Int, unsigned> factorize(const Int& n);

/// All positive divisors of |n| in increasing order, n != 0.
std::vector<Int> positive_divisors(const Int& n);

}  // namespace torustransit
