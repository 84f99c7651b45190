#include <doctest.h>

#include "torustransit/errors.hpp"
#include "torustransit/exact_algebra.hpp"
#include "torustransit/rng.hpp"

using namespace torustransit;

namespace {

IPoly ipoly(std::initializer_list<long> coeffs) {
    IVec c;
    for (long v : coeffs) c.push_back(Int(v));
    return IPoly(std::move(c));
}

QVec qvec(std::initializer_list<long> entries) {
    QVec v;
    for (long e : entries) v.push_back(Rational(Int(e)));
    return v;
}

IMat random_matrix(SplitMix64& rng, size_t n, long lo, long hi) {
    IMat a(n, n);
    const uint64_t span = static_cast<uint64_t>(hi - lo + 1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            a(i, j) = Int(lo + static_cast<long>(rng.below(span)));
    return a;
}

}  // namespace

TEST_CASE("char_poly matches hand-expanded determinants") {
    CHECK(char_poly(IMat::identity(2).scaled(Int(2))) == ipoly({4, -4, 1}));
    CHECK(char_poly(IMat{{Int(2), Int(0)}, {Int(1), Int(3)}}) == ipoly({6, -5, 1}));
    CHECK(char_poly(IMat{{Int(0), Int(2)}, {Int(1), Int(0)}}) == ipoly({-2, 0, 1}));
    CHECK_THROWS_AS(char_poly(IMat(2, 3)), DimensionError);
}

TEST_CASE("char_poly vanishes exactly on the integer eigenvalues") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const size_t n = 2 + rng.below(3);
        IMat a = random_matrix(rng, n, -4, 4);
        const IPoly p = char_poly(a);
        for (const Int& root : integer_eigenvalues(p)) CHECK(p.eval(root) == 0);
    }
}

TEST_CASE("integer_eigenvalues enumerates constant-term divisors") {
    CHECK(integer_eigenvalues(ipoly({6, -5, 1})) == std::vector<Int>{Int(2), Int(3)});
    CHECK(integer_eigenvalues(ipoly({-2, 0, 1})).empty());
    CHECK(integer_eigenvalues(ipoly({4, -4, 1})) == std::vector<Int>{Int(2), Int(2)});
    // t^2 (t - 1): zero roots come from the stripped power of t.
    CHECK(integer_eigenvalues(ipoly({0, 0, -1, 1})) == std::vector<Int>{Int(0), Int(0), Int(1)});
    CHECK_THROWS_AS(integer_eigenvalues(IPoly()), InvalidInput);
}

TEST_CASE("compound matrix: order 1, full order, explicit 2x2") {
    const IMat a{{Int(2), Int(0)}, {Int(1), Int(3)}};
    CHECK(compound_matrix(a, 1) == a);
    CHECK(compound_matrix(a, 2) == IMat{{Int(6)}});
    const IMat b = IMat{{Int(1), Int(2), Int(0)}, {Int(0), Int(1), Int(1)}, {Int(2), Int(0), Int(1)}};
    CHECK(compound_matrix(b, 3) == IMat{{det(b)}});
    CHECK_THROWS_AS(compound_matrix(a, 0), InvalidInput);
    CHECK_THROWS_AS(compound_matrix(a, 3), InvalidInput);
}

TEST_CASE("Cauchy-Binet: compound of a product is the product of compounds") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const size_t n = 2 + rng.below(3);  // up to 4x4
        IMat a = random_matrix(rng, n, -3, 3);
        IMat b = random_matrix(rng, n, -3, 3);
        for (size_t m = 1; m <= n; ++m)
            CHECK(compound_matrix(a * b, m) == compound_matrix(a, m) * compound_matrix(b, m));
    }
}

TEST_CASE("smith_normal_form on the worked examples") {
    CHECK(smith_normal_form(IMat::identity(3)).d == IMat::identity(3));
    CHECK(smith_normal_form(IMat::identity(2).scaled(Int(2))).d ==
          IMat::identity(2).scaled(Int(2)));
    const auto snf = smith_normal_form(IMat{{Int(2), Int(0)}, {Int(1), Int(3)}});
    CHECK(snf.d == IMat{{Int(1), Int(0)}, {Int(0), Int(6)}});
    CHECK_THROWS_AS(smith_normal_form(IMat{{Int(1), Int(1)}, {Int(1), Int(1)}}),
                    SingularMatrixError);
}

TEST_CASE("smith_normal_form invariants on random nonsingular matrices") {
    SplitMix64 rng(37);
    int done = 0;
    while (done < 40) {
        const size_t n = 2 + rng.below(3);
        IMat a = random_matrix(rng, n, -6, 6);
        const Int da = det(a);
        if (da == 0) continue;
        ++done;
        const auto snf = smith_normal_form(a);
        CHECK(snf.u * a * snf.v == snf.d);
        const Int du = det(snf.u), dv = det(snf.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        Int prod = 1;
        for (size_t i = 0; i < n; ++i) {
            CHECK(snf.d(i, i) > 0);
            if (i + 1 < n) CHECK(mpz_divisible_p(snf.d(i + 1, i + 1).get_mpz_t(),
                                                 snf.d(i, i).get_mpz_t()));
            prod *= snf.d(i, i);
        }
        CHECK(prod == (da < 0 ? Int(-da) : da));
    }
}

TEST_CASE("rational_kernel basis") {
    QMat m(2, 2);
    m(0, 0) = -1;
    m(0, 1) = 1;
    auto basis = rational_kernel(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == qvec({1, 1}));

    CHECK(rational_kernel(QMat(2, 2)).size() == 2);
    QMat inv(2, 2);
    inv(0, 0) = 2;
    inv(1, 1) = 3;
    CHECK(rational_kernel(inv).empty());
}

TEST_CASE("transverse_invariant_hyperplane witness and its absence") {
    const IMat a{{Int(2), Int(0)}, {Int(1), Int(3)}};
    auto w = transverse_invariant_hyperplane(a, Int(3));
    REQUIRE(w.has_value());
    CHECK(*w == qvec({1, 1}));

    CHECK_FALSE(transverse_invariant_hyperplane(IMat{{Int(2), Int(0)}, {Int(1), Int(2)}}, Int(2))
                    .has_value());

    IMat diag(2, 2);
    diag(0, 0) = 2;
    diag(1, 1) = 3;
    auto w2 = transverse_invariant_hyperplane(diag, Int(3));
    REQUIRE(w2.has_value());
    CHECK(*w2 == qvec({0, 1}));
}

TEST_CASE("hyperplane witnesses verify w^T A = lambda w^T with nonzero last entry") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const size_t n = 2 + rng.below(3);
        IMat a = random_matrix(rng, n, -3, 3);
        const Int lambda(static_cast<long>(rng.below(7)) - 3);
        auto w = transverse_invariant_hyperplane(a, lambda);
        if (!w) continue;
        CHECK((*w)[n - 1] > 0);
        for (size_t j = 0; j < n; ++j) {
            Rational lhs = 0;
            for (size_t i = 0; i < n; ++i) lhs += (*w)[i] * Rational(a(i, j));
            CHECK(lhs == Rational(lambda) * (*w)[j]);
        }
    }
}

TEST_CASE("is_diagonalizable via squarefree minimal polynomial") {
    CHECK(is_diagonalizable(IMat::identity(3)));
    CHECK_FALSE(is_diagonalizable(IMat{{Int(1), Int(1)}, {Int(0), Int(1)}}));
    CHECK(is_diagonalizable(IMat{{Int(2), Int(0)}, {Int(1), Int(3)}}));

    // Minimal polynomial spot checks: (t-1)^2 for the Jordan block, t-1 for Id.
    QPoly mu = minimal_polynomial(IMat{{Int(1), Int(1)}, {Int(0), Int(1)}});
    CHECK(mu == QPoly(QVec{Rational(1), Rational(-2), Rational(1)}));
    CHECK(minimal_polynomial(IMat::identity(2)) == QPoly(QVec{Rational(-1), Rational(1)}));
}

TEST_CASE("positive_definite by exact leading minors") {
    CHECK(positive_definite(IMat::identity(2).scaled(Int(5))));
    CHECK_FALSE(positive_definite(IMat::identity(2).scaled(Int(-1))));
    CHECK_FALSE(positive_definite(IMat{{Int(2), Int(3)}, {Int(3), Int(2)}}));
    CHECK(leading_principal_minors(IMat{{Int(2), Int(3)}, {Int(3), Int(2)}}) ==
          std::vector<Int>{Int(2), Int(-5)});
    CHECK_THROWS_AS(positive_definite(IMat{{Int(1), Int(2)}, {Int(0), Int(1)}}), InvalidInput);
}

TEST_CASE("positive_definite agrees with the small-box quadratic-form scan") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const size_t n = 2 + rng.below(2);  // 2 or 3
        IMat m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                m(i, j) = Int(static_cast<long>(rng.below(9)) - 4);
                m(j, i) = m(i, j);
            }
        bool brute = true;
        std::vector<long> v(n, -3);
        while (true) {
            bool zero = true;
            for (long c : v) zero = zero && c == 0;
            if (!zero) {
                Int q = 0;
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j) q += m(i, j) * Int(v[i]) * Int(v[j]);
                if (q <= 0) {
                    brute = false;
                    break;
                }
            }
            size_t k = 0;
            while (k < n && v[k] == 3) v[k++] = -3;
            if (k == n) break;
            ++v[k];
        }
        CHECK(positive_definite(m) == brute);
    }
}

TEST_CASE("no_root_of_unity_eigenvalue against cyclotomic divisors") {
    CHECK(no_root_of_unity_eigenvalue(ipoly({-2, 1})));        // t - 2
    CHECK_FALSE(no_root_of_unity_eigenvalue(ipoly({-1, 1})));  // t - 1
    CHECK_FALSE(no_root_of_unity_eigenvalue(ipoly({1, 0, 1}))); // t^2 + 1, roots +-i
    CHECK_FALSE(no_root_of_unity_eigenvalue(ipoly({1, 1, 1}))); // t^2 + t + 1
    CHECK(no_root_of_unity_eigenvalue(ipoly({-1, -1, 1})));     // golden-mean polynomial
}

TEST_CASE("restriction determinant divides det(A)") {
    const IMat a{{Int(2), Int(0)}, {Int(1), Int(3)}};
    auto r = restriction_determinant_divides(a, {qvec({0, 1})});
    CHECK(r.det_restricted == Rational(3));
    CHECK(r.divides);

    auto full = restriction_determinant_divides(a, {qvec({1, 0}), qvec({0, 1})});
    CHECK(full.det_restricted == Rational(6));
    CHECK(full.divides);

    IMat d24(2, 2);
    d24(0, 0) = 2;
    d24(1, 1) = 4;
    auto r2 = restriction_determinant_divides(d24, {qvec({1, 0})});
    CHECK(r2.det_restricted == Rational(2));
    CHECK(r2.divides);

    CHECK_THROWS_AS(
        restriction_determinant_divides(IMat{{Int(0), Int(1)}, {Int(1), Int(0)}}, {qvec({1, 0})}),
        InvarianceError);
    CHECK_THROWS_AS(restriction_determinant_divides(a, {qvec({1, 1}), qvec({2, 2})}), RankError);
}

TEST_CASE("restriction determinant appears among the compound's integer eigenvalues") {
    SplitMix64 rng(67);
    for (int trial = 0; trial < 30; ++trial) {
        const size_t n = 2 + rng.below(3);
        IMat a(n, n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i; j < n; ++j) a(i, j) = Int(static_cast<long>(rng.below(11)) - 5);
            while (a(i, i) == 0) a(i, i) = Int(static_cast<long>(rng.below(11)) - 5);
        }
        const size_t dim_s = 1 + rng.below(n - 1);
        std::vector<QVec> basis;
        for (size_t j = 0; j < dim_s; ++j) {
            QVec e(n, Rational(0));
            e[j] = 1;
            basis.push_back(std::move(e));
        }
        auto r = restriction_determinant_divides(a, basis);
        CHECK(r.divides);
        REQUIRE(r.det_restricted.get_den() == 1);
        const auto eigen = integer_eigenvalues(char_poly(compound_matrix(a, dim_s)));
        bool found = false;
        for (const Int& e : eigen) found = found || e == r.det_restricted.get_num();
        CHECK(found);
    }
}
