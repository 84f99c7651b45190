#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "torustransit/matrix.hpp"
#include "torustransit/polynomial.hpp"

namespace torustransit {

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IMat& a);
Rational det(const QMat& a);

/// det(tI - A), monic, exact integer coefficients (Faddeev-LeVerrier).
IPoly char_poly(const IMat& a);

/// All integer roots of p with multiplicity, ascending. Complete: zero
/// roots come from the t^k factor, the rest from divisors of the
/// remaining constant term.
std::vector<Int> integer_eigenvalues(const IPoly& p);

/// m-th compound: the C(n,m) x C(n,m) matrix of all m x m minors, rows
/// and columns indexed by increasing index sets in lexicographic order.
IMat compound_matrix(const IMat& a, size_t m);

struct SmithDecomposition {
    IMat u;  // unimodular row transform
    IMat d;  // diagonal, nonnegative, d1 | d2 | ...
    IMat v;  // unimodular column transform; u*a*v == d
};

/// Requires square nonsingular input.
SmithDecomposition smith_normal_form(const IMat& a);

/// Basis of { v : M v = 0 }, from reduced row echelon form; empty iff
/// M is injective. Deterministic ordering by free column.
std::vector<QVec> rational_kernel(const QMat& m);

/// Left eigenvector w of `a` for eigenvalue `lambda` with nonzero last
/// coordinate, normalized to coprime integer entries with positive last
/// coordinate; nullopt when every such eigenvector is parallel to the
/// last coordinate hyperplane. ker(w^T) is then an invariant hyperplane
/// transverse to the last basis vector.
std::optional<QVec> transverse_invariant_hyperplane(const IMat& a, const Int& lambda);

/// Exact minimal polynomial over Q, monic (Krylov per basis vector, lcm
/// of the local annihilators).
QPoly minimal_polynomial(const IMat& a);

/// True iff the minimal polynomial is squarefree.
bool is_diagonalizable(const IMat& a);

/// Sylvester criterion with exact integer minors; input must be symmetric.
bool positive_definite(const IMat& m);
std::vector<Int> leading_principal_minors(const IMat& m);

/// True iff no root of p is a root of unity: gcd(p, Phi_m) is constant
/// for every m with phi(m) <= deg(p).
bool no_root_of_unity_eigenvalue(const IPoly& p);

struct RestrictionDivisibility {
    Rational det_restricted;
    bool divides;
};

/// Determinant of a restricted to span(basis), expressed in that basis,
/// plus whether it is a nonzero integer dividing det(a). Throws RankError
/// for dependent bases and InvarianceError when a*span is not in span.
RestrictionDivisibility restriction_determinant_divides(const IMat& a,
                                                        const std::vector<QVec>& basis);

/// Solves m*x = rhs exactly; nullopt when inconsistent. For wide or
/// rank-deficient systems returns one solution (free variables zero).
std::optional<QVec> solve_linear(const QMat& m, const QVec& rhs);

}  // namespace torustransit
