#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "cycdim/cyclotomic.hpp"

namespace cycdim {

/**
 * Result of a floating-point route: the nearest integer to the evaluated
 * sum and the absolute distance to it.  The residual is always reported;
 * the caller owns any threshold on it.
 */
struct Rounded {
    mpz_class value;
    double residual = 0.0;
};

/**
 * Floating-point routes refuse g beyond this bound: the summands grow like
 * 4^g and the dynamic range would make the reported residual meaningless.
 */
constexpr long kFloatGenusLimit = 500;

/** Largest admissible color parameter c at prime p, i.e. (p-3)/2. */
long max_color_index(long p);

/**
 * Classical dimension binom(2g, k) - binom(2g, k-2), with the convention
 * that a binomial with negative lower index is zero.  Requires 0 <= k <= g.
 */
mpz_class classical_dim(long g, long k);

/**
 * Dimension of the n-th irreducible constituent at genus g, read off the
 * (n,1) entry of the g-th power of the tridiagonal recursion matrix.
 * Requires 1 <= n <= p-1 and g >= 1.
 */
mpz_class gow_dim_matrix(long p, long g, long n);

/**
 * The same dimension from the trigonometric closed form, evaluated entirely
 * in exact cyclotomic arithmetic:
 *   -(1/2p) * sum_{j=1}^{(p-1)/2} (q^{nj}-q^{-nj})(q^j-q^{-j})
 *             * [(2+q^j+q^{-j})^g - (-1)^n (2-q^j-q^{-j})^g].
 * The total must come out as a rational integer divisible by 2p; a violation
 * throws ExactnessError (it would falsify the formula, not the input).
 */
mpz_class gow_dim_exact(long p, long g, long n);

/** Floating-point evaluation of the same trigonometric sum. */
Rounded gow_dim_float(long p, long g, long n);

/** All dimensions at one (p, g), keyed by highest weight k = g+1-n. */
struct GowDims {
    long p = 0;
    long g = 0;
    std::map<long, mpz_class> by_weight; // k -> dim, for n = g+1-k in 1..min(p-1, g+1)
};

GowDims gow_dims(long p, long g);

/** The field element -p/(q-q^{-1})^2 whose g-th power drives the total dimension. */
CycRat verlinde_base(long p);

/**
 * Total TQFT vector-space dimension at (p, g, c) from the exact Galois-sum
 * form: -(1/p) * sum_{j=1}^{(p-1)/2} G_j((q^{2c+1}-q^{-(2c+1)})(q-q^{-1})
 * * verlinde_base(p)^g).  Requires p >= 5; asserts integrality and
 * divisibility by p (ExactnessError otherwise).
 */
mpz_class verlinde_dim_exact(long p, long g, long c);

/** Floating-point evaluation of the total dimension via the sine sum. */
Rounded verlinde_dim_float(long p, long g, long c);

/**
 * The cyclotomic integer ceil((p-1)/4) + sum_{k=1}^{(p-3)/2} (-1)^k
 * ceil((p-2k-1)/4) (q^{2k}+q^{-2k}) whose powers drive the even/odd
 * dimension difference.
 */
CycInt delta_base(long p);

/**
 * Even-minus-odd dimension difference at (p, g, c), exact Galois-sum form
 * with delta_base(p)^g.  Same integrality assertions as the total.
 */
mpz_class delta_exact(long p, long g, long c);

/** Floating-point evaluation of the difference. */
Rounded delta_float(long p, long g, long c);

/** Total, difference, and the even/odd split at one (p, g, c). */
struct TqftDims {
    long p = 0;
    long g = 0;
    long c = 0;
    mpz_class total; // even + odd
    mpz_class delta; // even - odd
    mpz_class even;
    mpz_class odd;
};

/**
 * Computes the split even = (total+delta)/2, odd = (total-delta)/2 and
 * checks the structural invariants: total and delta share parity, and both
 * parts are nonnegative.  Violations throw ExactnessError.
 */
TqftDims even_odd_dims(long p, long g, long c);

/** Side-by-side comparison of the two (p-1)-tuples of dimensions at genus g. */
struct TupleComparison {
    long p = 0;
    long g = 0;
    std::vector<mpz_class> gow;  // (dim V(g, g-m))_{m=0..p-2}
    std::vector<mpz_class> tqft; // evens ascending in c, then odds descending
    bool ordered_match = false;  // tuples equal entrywise
    bool multiset_match = false; // equal after sorting
    std::vector<mpz_class> diffs; // gow[i] - tqft[i]
};

/**
 * Builds both dimension tuples at (p, g) and compares them entrywise and as
 * multisets.  The TQFT tuple ordering mirrors the p = 5 pattern: even parts
 * with c ascending, then odd parts with c descending.  Requires p >= 5.
 */
TupleComparison compare_dimension_tuples(long p, long g);

} // namespace cycdim
