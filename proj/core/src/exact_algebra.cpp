#include "torustransit/exact_algebra.hpp"

#include <algorithm>

#include "torustransit/errors.hpp"
#include "torustransit/int_factor.hpp"

namespace torustransit {

Int det(const IMat& a) {
    if (!a.square()) throw DimensionError("determinant requires a square matrix");
    const size_t n = a.rows();
    if (n == 0) return 1;
    IMat w = a;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            size_t pivot = k;
            while (pivot < n && w(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(w(k, j), w(pivot, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                mpz_divexact(w(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

Rational det(const QMat& a) {
    if (!a.square()) throw DimensionError("determinant requires a square matrix");
    const size_t n = a.rows();
    QMat w = a;
    Rational result = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && w(pivot, k) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            for (size_t j = 0; j < n; ++j) std::swap(w(k, j), w(pivot, j));
            result = -result;
        }
        result *= w(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            if (w(i, k) == 0) continue;
            Rational f = w(i, k) / w(k, k);
            for (size_t j = k; j < n; ++j) w(i, j) -= f * w(k, j);
        }
    }
    return result;
}

IPoly char_poly(const IMat& a) {
    if (!a.square()) throw DimensionError("characteristic polynomial requires a square matrix");
    const size_t n = a.rows();
    IVec coeff(n + 1, Int(0));
    coeff[n] = 1;
    // Faddeev-LeVerrier: every division below is exact over Z.
    IMat m = IMat::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            m = a * m;
            for (size_t i = 0; i < n; ++i) m(i, i) += coeff[n - k + 1];
        }
        Int tr = (a * m).trace();
        Int ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        coeff[n - k] = -ck;
    }
    return IPoly(std::move(coeff));
}

std::vector<Int> integer_eigenvalues(const IPoly& p) {
    if (p.is_zero()) throw InvalidInput("zero polynomial has every value as a root");
    std::vector<Int> roots;
    IPoly work = p;
    // Zero roots first: strip the t^k factor.
    size_t zero_mult = 0;
    while (!work.is_zero() && work.c[0] == 0) {
        work = IPoly(IVec(work.c.begin() + 1, work.c.end()));
        ++zero_mult;
    }
    roots.assign(zero_mult, Int(0));
    if (work.degree() < 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    const Int constant = work.c[0];
    std::vector<Int> candidates;
    for (const Int& d : positive_divisors(constant)) {
        candidates.push_back(-d);
        candidates.push_back(d);
    }
    for (const Int& r : candidates) {
        while (!work.is_zero() && work.degree() >= 1 && work.eval(r) == 0) {
            IPoly factor(IVec{Int(-r), Int(1)});
            IPoly quotient;
            if (!ipoly_divide_monic(work, factor, &quotient))
                throw Error("deflation by a verified root failed");
            work = quotient;
            roots.push_back(r);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

std::vector<std::vector<size_t>> index_sets(size_t n, size_t m) {
    std::vector<std::vector<size_t>> sets;
    std::vector<size_t> cur(m);
    for (size_t i = 0; i < m; ++i) cur[i] = i;
    while (true) {
        sets.push_back(cur);
        size_t i = m;
        while (i-- > 0) {
            if (cur[i] + (m - i) < n) {
                ++cur[i];
                for (size_t j = i + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
                break;
            }
            if (i == 0) return sets;
        }
    }
}

}  // namespace

IMat compound_matrix(const IMat& a, size_t m) {
    if (!a.square()) throw DimensionError("compound of a non-square matrix");
    const size_t n = a.rows();
    if (m < 1 || m > n) throw InvalidInput("compound order out of range");
    const auto sets = index_sets(n, m);
    IMat out(sets.size(), sets.size());
    for (size_t r = 0; r < sets.size(); ++r) {
        for (size_t c = 0; c < sets.size(); ++c) {
            IMat minor(m, m);
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j) minor(i, j) = a(sets[r][i], sets[c][j]);
            out(r, c) = det(minor);
        }
    }
    return out;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Truncated quotient, remainder has |r| < |b|.
Int trunc_div(const Int& a, const Int& b) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

struct SnfWork {
    IMat d, u, v;
    size_t n;

    void row_sub(size_t dst, size_t src, const Int& q) {
        for (size_t j = 0; j < n; ++j) {
            d(dst, j) -= q * d(src, j);
            u(dst, j) -= q * u(src, j);
        }
    }
    void col_sub(size_t dst, size_t src, const Int& q) {
        for (size_t i = 0; i < n; ++i) {
            d(i, dst) -= q * d(i, src);
            v(i, dst) -= q * v(i, src);
        }
    }
    void row_swap(size_t i1, size_t i2) {
        if (i1 == i2) return;
        for (size_t j = 0; j < n; ++j) {
            std::swap(d(i1, j), d(i2, j));
            std::swap(u(i1, j), u(i2, j));
        }
    }
    void col_swap(size_t j1, size_t j2) {
        if (j1 == j2) return;
        for (size_t i = 0; i < n; ++i) {
            std::swap(d(i, j1), d(i, j2));
            std::swap(v(i, j1), v(i, j2));
        }
    }
    void row_add(size_t dst, size_t src) {
        for (size_t j = 0; j < n; ++j) {
            d(dst, j) += d(src, j);
            u(dst, j) += u(src, j);
        }
    }
    void row_negate(size_t i) {
        for (size_t j = 0; j < n; ++j) {
            d(i, j) = -d(i, j);
            u(i, j) = -u(i, j);
        }
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IMat& a) {
    if (!a.square()) throw DimensionError("Smith form requires a square matrix");
    if (det(a) == 0) throw SingularMatrixError("Smith form requires a nonsingular matrix");
    const size_t n = a.rows();
    SnfWork w{a, IMat::identity(n), IMat::identity(n), n};

    for (size_t t = 0; t < n; ++t) {
        while (true) {
            // Move the smallest nonzero entry of the trailing block to (t,t).
            size_t pi = n, pj = n;
            for (size_t i = t; i < n; ++i)
                for (size_t j = t; j < n; ++j)
                    if (w.d(i, j) != 0 &&
                        (pi == n || abs_int(w.d(i, j)) < abs_int(w.d(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            bool reduced_everything = true;
            for (size_t i = t + 1; i < n; ++i) {
                if (w.d(i, t) == 0) continue;
                w.row_sub(i, t, trunc_div(w.d(i, t), w.d(t, t)));
                if (w.d(i, t) != 0) reduced_everything = false;
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (w.d(t, j) == 0) continue;
                w.col_sub(j, t, trunc_div(w.d(t, j), w.d(t, t)));
                if (w.d(t, j) != 0) reduced_everything = false;
            }
            if (!reduced_everything) continue;

            // Divisibility of the remaining block by the pivot keeps the
            // diagonal chain d1 | d2 | ... intact.
            bool fixed = false;
            for (size_t i = t + 1; i < n && !fixed; ++i)
                for (size_t j = t + 1; j < n && !fixed; ++j)
                    if (!mpz_divisible_p(w.d(i, j).get_mpz_t(), w.d(t, t).get_mpz_t())) {
                        w.row_add(t, i);
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }
    for (size_t i = 0; i < n; ++i)
        if (w.d(i, i) < 0) w.row_negate(i);
    return {w.u, w.d, w.v};
}

std::vector<QVec> rational_kernel(const QMat& m) {
    QMat r = m;
    const size_t rows = r.rows(), cols = r.cols();
    std::vector<size_t> pivot_col;
    size_t pr = 0;
    for (size_t col = 0; col < cols && pr < rows; ++col) {
        size_t sel = pr;
        while (sel < rows && r(sel, col) == 0) ++sel;
        if (sel == rows) continue;
        for (size_t j = 0; j < cols; ++j) std::swap(r(pr, j), r(sel, j));
        Rational inv = r(pr, col);
        for (size_t j = 0; j < cols; ++j) r(pr, j) /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == pr || r(i, col) == 0) continue;
            Rational f = r(i, col);
            for (size_t j = 0; j < cols; ++j) r(i, j) -= f * r(pr, j);
        }
        pivot_col.push_back(col);
        ++pr;
    }
    std::vector<QVec> basis;
    size_t next_pivot = 0;
    for (size_t col = 0; col < cols; ++col) {
        if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        QVec v(cols, Rational(0));
        v[col] = 1;
        for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -r(k, col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> transverse_invariant_hyperplane(const IMat& a, const Int& lambda) {
    if (!a.square()) throw DimensionError("hyperplane test requires a square matrix");
    const size_t n = a.rows();
    QMat m = to_rational(a.transpose());
    for (size_t i = 0; i < n; ++i) m(i, i) -= Rational(lambda);
    for (const QVec& v : rational_kernel(m)) {
        if (v[n - 1] == 0) continue;
        // Clear denominators to coprime integers, last coordinate positive.
        Int l = 1;
        for (const Rational& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        IVec w(n);
        for (size_t i = 0; i < n; ++i) {
            Rational scaled = v[i] * Rational(l);
            w[i] = scaled.get_num();
        }
        Int g = 0;
        for (const Int& x : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        for (Int& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        if (w[n - 1] < 0)
            for (Int& x : w) x = -x;
        return to_rational(w);
    }
    return std::nullopt;
}

QPoly minimal_polynomial(const IMat& a) {
    if (!a.square()) throw DimensionError("minimal polynomial requires a square matrix");
    const size_t n = a.rows();
    const QMat aq = to_rational(a);
    QPoly mu(QVec{Rational(1)});
    for (size_t start = 0; start < n; ++start) {
        if (mu.degree() == static_cast<long>(n)) break;
        std::vector<QVec> echelon;
        std::vector<size_t> pivots;
        std::vector<QVec> combos;  // coordinates over Krylov powers t^0..t^k
        QVec cur(n, Rational(0));
        cur[start] = 1;
        for (size_t k = 0; k <= n; ++k) {
            QVec w = cur;
            QVec combo(n + 1, Rational(0));
            combo[k] = 1;
            for (size_t r = 0; r < echelon.size(); ++r) {
                if (w[pivots[r]] == 0) continue;
                Rational f = w[pivots[r]] / echelon[r][pivots[r]];
                for (size_t j = 0; j < n; ++j) w[j] -= f * echelon[r][j];
                for (size_t j = 0; j <= k; ++j) combo[j] -= f * combos[r][j];
            }
            size_t piv = 0;
            while (piv < n && w[piv] == 0) ++piv;
            if (piv == n) {
                // Dependence: combo is a monic degree-k annihilator of e_start.
                QVec cs(combo.begin(), combo.begin() + k + 1);
                mu = qpoly_lcm(mu, QPoly(std::move(cs)));
                break;
            }
            echelon.push_back(w);
            pivots.push_back(piv);
            combos.push_back(combo);
            cur = aq.apply(cur);
        }
    }
    return qpoly_make_monic(mu);
}

bool is_diagonalizable(const IMat& a) {
    QPoly mu = minimal_polynomial(a);
    return qpoly_gcd(mu, qpoly_derivative(mu)).degree() == 0;
}

std::vector<Int> leading_principal_minors(const IMat& m) {
    if (!m.square()) throw DimensionError("principal minors require a square matrix");
    std::vector<Int> minors;
    for (size_t k = 1; k <= m.rows(); ++k) {
        IMat block(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) block(i, j) = m(i, j);
        minors.push_back(det(block));
    }
    return minors;
}

bool positive_definite(const IMat& m) {
    if (!m.square()) throw InvalidInput("positive-definiteness requires a square matrix");
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) throw InvalidInput("positive-definiteness requires symmetry");
    for (const Int& minor : leading_principal_minors(m))
        if (minor <= 0) return false;
    return true;
}

bool no_root_of_unity_eigenvalue(const IPoly& p) {
    if (p.is_zero()) throw InvalidInput("zero polynomial");
    const long d = p.degree();
    if (d < 1) return true;
    // phi(m) >= sqrt(m/2), so phi(m) <= d forces m <= 2 d^2.
    const unsigned long bound = 2 * static_cast<unsigned long>(d) * static_cast<unsigned long>(d) + 1;
    for (unsigned long m = 1; m <= bound; ++m) {
        if (euler_phi(m) > static_cast<unsigned long>(d)) continue;
        if (ipoly_divide_monic(p, cyclotomic(m), nullptr)) return false;
    }
    return true;
}

std::optional<QVec> solve_linear(const QMat& m, const QVec& rhs) {
    if (rhs.size() != m.rows()) throw DimensionError("solve shape mismatch");
    const size_t rows = m.rows(), cols = m.cols();
    QMat aug(rows, cols + 1);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
        aug(i, cols) = rhs[i];
    }
    std::vector<size_t> pivot_col;
    size_t pr = 0;
    for (size_t col = 0; col < cols && pr < rows; ++col) {
        size_t sel = pr;
        while (sel < rows && aug(sel, col) == 0) ++sel;
        if (sel == rows) continue;
        for (size_t j = 0; j <= cols; ++j) std::swap(aug(pr, j), aug(sel, j));
        Rational inv = aug(pr, col);
        for (size_t j = 0; j <= cols; ++j) aug(pr, j) /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == pr || aug(i, col) == 0) continue;
            Rational f = aug(i, col);
            for (size_t j = 0; j <= cols; ++j) aug(i, j) -= f * aug(pr, j);
        }
        pivot_col.push_back(col);
        ++pr;
    }
    for (size_t i = pr; i < rows; ++i)
        if (aug(i, cols) != 0) return std::nullopt;
    QVec x(cols, Rational(0));
    for (size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = aug(k, cols);
    return x;
}

RestrictionDivisibility restriction_determinant_divides(const IMat& a,
                                                        const std::vector<QVec>& basis) {
    if (!a.square()) throw DimensionError("restriction requires a square matrix");
    const size_t n = a.rows();
    const size_t k = basis.size();
    if (k == 0 || k > n) throw RankError("basis size out of range");
    for (const auto& b : basis)
        if (b.size() != n) throw DimensionError("basis vector of wrong length");

    QMat b(n, k);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < n; ++i) b(i, j) = basis[j][i];
    {
        // Rank probe: dependent columns make the restriction ill-defined.
        std::vector<QVec> ker = rational_kernel(b);
        if (!ker.empty()) throw RankError("basis vectors are linearly dependent");
    }

    const QMat aq = to_rational(a);
    QMat c(k, k);
    for (size_t j = 0; j < k; ++j) {
        auto sol = solve_linear(b, aq.apply(basis[j]));
        if (!sol) throw InvarianceError("subspace is not invariant under the matrix");
        for (size_t i = 0; i < k; ++i) c(i, j) = (*sol)[i];
    }
    const Rational det_s = det(c);
    const Int det_a = det(a);
    bool divides = det_s != 0 && det_s.get_den() == 1 &&
                   mpz_divisible_p(det_a.get_mpz_t(), det_s.get_num().get_mpz_t());
    return {det_s, divides};
}

}  // namespace torustransit
