#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cycdim/cyclotomic.hpp"

namespace cycdim {

/**
 * Dense square matrix of arbitrary-precision integers.
 * Entries are addressed 0-based internally; the report layer translates to
 * the 1-based indexing used in the underlying dimension formulas.
 */
class BigIntMatrix {
private:
    long _n;
    std::vector<mpz_class> _e; // row-major

public:
    /** n x n zero matrix. */
    explicit BigIntMatrix(long n);

    static BigIntMatrix identity(long n);

    long dim() const { return _n; }

    mpz_class& at(long i, long j);
    const mpz_class& at(long i, long j) const;

    BigIntMatrix operator*(const BigIntMatrix& other) const;

    bool operator==(const BigIntMatrix& other) const { return _n == other._n && _e == other._e; }
    bool operator!=(const BigIntMatrix& other) const { return !(*this == other); }

    bool is_symmetric() const;
};

/** M^g by binary exponentiation; mat_pow(M, 0) is the identity. */
BigIntMatrix mat_pow(const BigIntMatrix& m, unsigned long g);

/** Dense square matrix of cyclotomic integers sharing one prime. */
class CycMatrix {
private:
    long _p;
    long _n;
    std::vector<CycInt> _e; // row-major

public:
    /** n x n zero matrix over Z[zeta_p]. */
    CycMatrix(long p, long n);

    /** v on the diagonal, zero elsewhere. */
    static CycMatrix scalar(long p, long n, const CycInt& v);

    /** Entry-wise lift of an integer matrix into Z[zeta_p]. */
    static CycMatrix from_integer(long p, const BigIntMatrix& m);

    long prime() const { return _p; }
    long dim() const { return _n; }

    CycInt& at(long i, long j);
    const CycInt& at(long i, long j) const;

    CycMatrix operator*(const CycMatrix& other) const;
    CycMatrix operator+(const CycMatrix& other) const;
    CycMatrix operator*(const CycInt& s) const;

    bool operator==(const CycMatrix& other) const;
    bool operator!=(const CycMatrix& other) const { return !(*this == other); }
};

/**
 * The (p-1) x (p-1) tridiagonal recursion matrix: 2 on the diagonal, 1 on
 * the sub- and super-diagonal.  Its g-th power's first column carries the
 * symplectic-group dimensions.
 */
BigIntMatrix recursion_matrix(long p);

/** S with entries S_ij = (-1)^{ij} (q^{ij} - q^{-ij}), i, j in 1..p-1. */
CycMatrix s_matrix(long p);

/** Diagonal matrix of eigenvalues, Q_jj = 2 + (-1)^j (q^j + q^{-j}). */
CycMatrix eigenvalue_diagonal(long p);

/** One exact matrix identity: pass/fail plus the first failing entry if any. */
struct IdentityCheck {
    std::string name;      // short machine-readable label
    std::string statement; // the identity in matrix notation
    bool pass = false;
    std::optional<std::pair<long, long>> first_fail; // 1-based entry indices
    std::string detail;    // diagnostics for a failing entry, empty on pass
};

/** Outcome of the three S-matrix identity checks at one prime. */
struct SMatrixReport {
    long p = 0;
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/**
 * Verifies, in exact arithmetic, the identities that diagonalize the
 * recursion matrix: S*S = -2p*I, C*S = S*Q, and the inverse-free form
 * 2p*C + S*Q*S = 0.  Failures are reported as data, not exceptions.
 */
SMatrixReport verify_s_matrix(long p);

} // namespace cycdim
