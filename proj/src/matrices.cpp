#include "cycdim/matrices.hpp"

#include <stdexcept>

namespace cycdim {

namespace {

void check_index(long n, long i, long j) {
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::invalid_argument("matrix index out of range");
}

} // namespace

// ---- BigIntMatrix ----------------------------------------------------------

BigIntMatrix::BigIntMatrix(long n) : _n(n), _e() {
    if (n <= 0)
        throw std::invalid_argument("matrix dimension must be positive");
    _e.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
}

BigIntMatrix BigIntMatrix::identity(long n) {
    BigIntMatrix m(n);
    for (long i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

mpz_class& BigIntMatrix::at(long i, long j) {
    check_index(_n, i, j);
    return _e[static_cast<size_t>(i) * static_cast<size_t>(_n) + static_cast<size_t>(j)];
}

const mpz_class& BigIntMatrix::at(long i, long j) const {
    check_index(_n, i, j);
    return _e[static_cast<size_t>(i) * static_cast<size_t>(_n) + static_cast<size_t>(j)];
}

BigIntMatrix BigIntMatrix::operator*(const BigIntMatrix& other) const {
    if (_n != other._n)
        throw std::invalid_argument("matrix dimension mismatch");
    BigIntMatrix r(_n);
    mpz_class acc;
    for (long i = 0; i < _n; ++i) {
        for (long j = 0; j < _n; ++j) {
            acc = 0;
            for (long k = 0; k < _n; ++k)
                acc += at(i, k) * other.at(k, j);
            r.at(i, j) = acc;
        }
    }
    return r;
}

bool BigIntMatrix::is_symmetric() const {
    for (long i = 0; i < _n; ++i)
        for (long j = i + 1; j < _n; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

BigIntMatrix mat_pow(const BigIntMatrix& m, unsigned long g) {
    BigIntMatrix result = BigIntMatrix::identity(m.dim());
    BigIntMatrix base = m;
    while (g > 0) {
        if (g & 1) result = result * base;
        base = base * base;
        g >>= 1;
    }
    return result;
}

// ---- CycMatrix -------------------------------------------------------------

CycMatrix::CycMatrix(long p, long n) : _p(p), _n(n), _e() {
    require_odd_prime(p);
    if (n <= 0)
        throw std::invalid_argument("matrix dimension must be positive");
    _e.assign(static_cast<size_t>(n) * static_cast<size_t>(n), CycInt(p));
}

CycMatrix CycMatrix::scalar(long p, long n, const CycInt& v) {
    CycMatrix m(p, n);
    for (long i = 0; i < n; ++i)
        m.at(i, i) = v;
    return m;
}

CycMatrix CycMatrix::from_integer(long p, const BigIntMatrix& src) {
    CycMatrix m(p, src.dim());
    for (long i = 0; i < src.dim(); ++i)
        for (long j = 0; j < src.dim(); ++j)
            m.at(i, j) = CycInt::constant(p, src.at(i, j));
    return m;
}

CycInt& CycMatrix::at(long i, long j) {
    check_index(_n, i, j);
    return _e[static_cast<size_t>(i) * static_cast<size_t>(_n) + static_cast<size_t>(j)];
}

const CycInt& CycMatrix::at(long i, long j) const {
    check_index(_n, i, j);
    return _e[static_cast<size_t>(i) * static_cast<size_t>(_n) + static_cast<size_t>(j)];
}

CycMatrix CycMatrix::operator*(const CycMatrix& other) const {
    if (_p != other._p || _n != other._n)
        throw std::invalid_argument("matrix prime or dimension mismatch");
    CycMatrix r(_p, _n);
    for (long i = 0; i < _n; ++i) {
        for (long j = 0; j < _n; ++j) {
            CycInt acc(_p);
            for (long k = 0; k < _n; ++k)
                acc += at(i, k) * other.at(k, j);
            r.at(i, j) = acc;
        }
    }
    return r;
}

CycMatrix CycMatrix::operator+(const CycMatrix& other) const {
    if (_p != other._p || _n != other._n)
        throw std::invalid_argument("matrix prime or dimension mismatch");
    CycMatrix r(_p, _n);
    for (long i = 0; i < _n; ++i)
        for (long j = 0; j < _n; ++j)
            r.at(i, j) = at(i, j) + other.at(i, j);
    return r;
}

CycMatrix CycMatrix::operator*(const CycInt& s) const {
    CycMatrix r(_p, _n);
    for (long i = 0; i < _n; ++i)
        for (long j = 0; j < _n; ++j)
            r.at(i, j) = at(i, j) * s;
    return r;
}

bool CycMatrix::operator==(const CycMatrix& other) const {
    if (_p != other._p || _n != other._n) return false;
    return _e == other._e;
}

// ---- builders ---------------------------------------------------------------

BigIntMatrix recursion_matrix(long p) {
    require_odd_prime(p);
    long d = p - 1;
    BigIntMatrix m(d);
    for (long i = 0; i < d; ++i) {
        m.at(i, i) = 2;
        if (i > 0) m.at(i, i - 1) = 1;
        if (i + 1 < d) m.at(i, i + 1) = 1;
    }
    return m;
}

CycMatrix s_matrix(long p) {
    require_odd_prime(p);
    long d = p - 1;
    CycMatrix m(p, d);
    for (long i = 1; i <= d; ++i) {
        for (long j = 1; j <= d; ++j) {
            CycInt v = root_power(p, i * j) - root_power(p, -i * j);
            if ((i * j) % 2 != 0) v = -v;
            m.at(i - 1, j - 1) = v;
        }
    }
    return m;
}

CycMatrix eigenvalue_diagonal(long p) {
    require_odd_prime(p);
    long d = p - 1;
    CycMatrix m(p, d);
    for (long j = 1; j <= d; ++j) {
        CycInt pair = root_power(p, j) + root_power(p, -j);
        if (j % 2 != 0) pair = -pair;
        m.at(j - 1, j - 1) = CycInt::constant(p, 2) + pair;
    }
    return m;
}

// ---- identity verification ---------------------------------------------------

namespace {

IdentityCheck compare_entrywise(std::string name, std::string statement,
                                const CycMatrix& lhs, const CycMatrix& rhs) {
    IdentityCheck check{std::move(name), std::move(statement), true, std::nullopt, ""};
    for (long i = 0; i < lhs.dim() && check.pass; ++i) {
        for (long j = 0; j < lhs.dim(); ++j) {
            if (lhs.at(i, j) != rhs.at(i, j)) {
                check.pass = false;
                check.first_fail = {i + 1, j + 1};
                check.detail = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               "): lhs = " + lhs.at(i, j).str() + ", rhs = " + rhs.at(i, j).str();
                break;
            }
        }
    }
    return check;
}

} // namespace

SMatrixReport verify_s_matrix(long p) {
    require_odd_prime(p);
    long d = p - 1;
    const CycMatrix s = s_matrix(p);
    const CycMatrix q = eigenvalue_diagonal(p);
    const CycMatrix c = CycMatrix::from_integer(p, recursion_matrix(p));
    const CycInt two_p = CycInt::constant(p, 2 * p);

    SMatrixReport report{p, {}};
    report.checks.push_back(compare_entrywise(
        "s_squared", "S*S = -2p*I", s * s, CycMatrix::scalar(p, d, -two_p)));
    report.checks.push_back(compare_entrywise(
        "conjugation", "C*S = S*Q", c * s, s * q));
    report.checks.push_back(compare_entrywise(
        "inverse_relation", "2p*C + S*Q*S = 0", c * two_p + s * q * s, CycMatrix(p, d)));
    return report;
}

} // namespace cycdim
