#include "torustransit/int_factor.hpp"

#include <algorithm>

#include "torustransit/errors.hpp"

namespace torustransit {

namespace {

Int pollard_rho(const Int& n, unsigned long c0) {
    // Floyd cycle detection on x -> x^2 + c mod n.
    Int x = 2, y = 2, d = 1;
    const Int c(c0);
    while (d == 1) {
        x = (x * x + c) % n;
        y = (y * y + c) % n;
        y = (y * y + c) % n;
        Int diff = x - y;
        if (diff < 0) diff = -diff;
        if (diff == 0) return 0;  // cycle without factor; retry with new c
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    return d == n ? Int(0) : d;
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
        ++out[n];
        return;
    }
    Int d = 0;
    for (unsigned long c = 1; d == 0; ++c) d = pollard_rho(n, c);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<Int, unsigned> factorize(const Int& n) {
    if (n == 0) throw InvalidInput("cannot factorize zero");
    Int m = n < 0 ? Int(-n) : n;
    std::map<Int, unsigned> out;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Int(p)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    unsigned long p = 17;
    while (m > 1 && Int(p) * Int(p) <= m && p < 100000) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Int(p)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
        p += 2;
    }
    if (m > 1) factor_rec(m, out);
    return out;
}

std::vector<Int> positive_divisors(const Int& n) {
    auto factors = factorize(n);
    std::vector<Int> divs{Int(1)};
    for (const auto& [prime, mult] : factors) {
        const size_t base = divs.size();
        Int pk = 1;
        for (unsigned e = 1; e <= mult; ++e) {
            pk *= prime;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace torustransit
