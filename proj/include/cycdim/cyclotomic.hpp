#pragma once

#include <complex>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cycdim {

/**
 * Thrown when a value that must be exact (a rational integer, an exactly
 * divisible total, ...) turns out not to be.  Always indicates a genuine
 * mathematical violation or an implementation bug, never bad user input.
 */
class ExactnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_odd_prime(long p);

/** Throws std::invalid_argument unless p is an odd prime. */
void require_odd_prime(long p);

/**
 * Cyclotomic: element of Z[zeta_p] (Coeff = mpz_class) or Q(zeta_p)
 * (Coeff = mpq_class) for an odd prime p, written in the power basis
 * {1, q, ..., q^(p-2)} where q is an abstract primitive p-th root of unity.
 *
 * Canonical form: the relation q^(p-1) = -(1 + q + ... + q^(p-2)) is applied
 * by every constructor and operation, so equality is coefficient-wise.
 * Values are immutable after construction; all operations are pure.
 */
template <typename Coeff>
class Cyclotomic {
private:
    long _p;               // odd prime: conductor of the root of unity
    std::vector<Coeff> _c; // coefficients of 1, q, ..., q^(p-2)

    void check_same_prime(const Cyclotomic& other) const {
        if (_p != other._p)
            throw std::invalid_argument("mixed primes in cyclotomic arithmetic: " +
                                        std::to_string(_p) + " vs " + std::to_string(other._p));
    }

    // Reduce a buffer of coefficients indexed by exponent 0..p-1 into the
    // canonical basis: q^(p-1) = -(1 + q + ... + q^(p-2)).
    static Cyclotomic from_exponents(long p, const std::vector<Coeff>& t) {
        Cyclotomic r(p);
        for (long i = 0; i + 1 < p; ++i)
            r._c[i] = t[i] - t[p - 1];
        return r;
    }

public:
    /** Zero element of the ring with the given prime. */
    explicit Cyclotomic(long p) : _p(p), _c(static_cast<size_t>(p - 1)) {
        require_odd_prime(p);
    }

    /** Element with the given canonical coefficients (c0, ..., c_{p-2}). */
    Cyclotomic(long p, std::vector<Coeff> coeffs) : _p(p), _c(std::move(coeffs)) {
        require_odd_prime(p);
        if (_c.size() != static_cast<size_t>(p - 1))
            throw std::invalid_argument("coefficient vector must have length p-1");
    }

    /** Lossless lift, e.g. from integer to rational coefficients. */
    template <typename Other>
        requires(!std::is_same_v<Other, Coeff> && std::is_constructible_v<Coeff, Other>)
    explicit Cyclotomic(const Cyclotomic<Other>& other) : _p(other.prime()), _c() {
        _c.reserve(static_cast<size_t>(_p - 1));
        for (const auto& x : other.coefficients())
            _c.emplace_back(x);
    }

    // Factory methods
    static Cyclotomic zero(long p) { return Cyclotomic(p); }

    static Cyclotomic one(long p) { return constant(p, 1); }

    static Cyclotomic constant(long p, Coeff v) {
        Cyclotomic r(p);
        r._c[0] = std::move(v);
        return r;
    }

    /** q^e with e reduced mod p; root_power(p, 0) is the identity. */
    static Cyclotomic root_power(long p, long e) {
        require_odd_prime(p);
        std::vector<Coeff> t(static_cast<size_t>(p));
        long em = ((e % p) + p) % p;
        t[static_cast<size_t>(em)] = 1;
        return from_exponents(p, t);
    }

    // Properties
    long prime() const { return _p; }

    const std::vector<Coeff>& coefficients() const { return _c; }

    const Coeff& operator[](long i) const { return _c.at(static_cast<size_t>(i)); }

    bool is_zero() const {
        for (const auto& x : _c)
            if (x != 0) return false;
        return true;
    }

    /** True iff the element lies in Q, i.e. only the constant coefficient is nonzero. */
    bool is_rational() const {
        for (size_t i = 1; i < _c.size(); ++i)
            if (_c[i] != 0) return false;
        return true;
    }

    // Ring operations (canonical-form results)
    Cyclotomic operator+(const Cyclotomic& other) const {
        check_same_prime(other);
        Cyclotomic r(_p);
        for (size_t i = 0; i < _c.size(); ++i)
            r._c[i] = _c[i] + other._c[i];
        return r;
    }

    Cyclotomic operator-(const Cyclotomic& other) const {
        check_same_prime(other);
        Cyclotomic r(_p);
        for (size_t i = 0; i < _c.size(); ++i)
            r._c[i] = _c[i] - other._c[i];
        return r;
    }

    Cyclotomic operator-() const {
        Cyclotomic r(_p);
        for (size_t i = 0; i < _c.size(); ++i)
            r._c[i] = -_c[i];
        return r;
    }

    Cyclotomic operator*(const Cyclotomic& other) const {
        check_same_prime(other);
        std::vector<Coeff> t(static_cast<size_t>(_p));
        for (size_t i = 0; i < _c.size(); ++i) {
            if (_c[i] == 0) continue;
            for (size_t j = 0; j < other._c.size(); ++j) {
                if (other._c[j] == 0) continue;
                t[(i + j) % static_cast<size_t>(_p)] += _c[i] * other._c[j];
            }
        }
        return from_exponents(_p, t);
    }

    Cyclotomic operator*(const Coeff& s) const {
        Cyclotomic r(_p);
        for (size_t i = 0; i < _c.size(); ++i)
            r._c[i] = _c[i] * s;
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& other) { return *this = *this + other; }
    Cyclotomic& operator-=(const Cyclotomic& other) { return *this = *this - other; }
    Cyclotomic& operator*=(const Cyclotomic& other) { return *this = *this * other; }

    /** a^n by square-and-multiply; pow(a, 0) = 1. */
    Cyclotomic pow(unsigned long n) const {
        Cyclotomic result = one(_p);
        Cyclotomic base = *this;
        while (n > 0) {
            if (n & 1) result *= base;
            base *= base;
            n >>= 1;
        }
        return result;
    }

    bool operator==(const Cyclotomic& other) const {
        return _p == other._p && _c == other._c;
    }

    bool operator!=(const Cyclotomic& other) const { return !(*this == other); }

    bool operator==(long v) const { return *this == constant(_p, Coeff(v)); }

    // String representation, e.g. "2 - q + 3*q^2"
    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < _c.size(); ++i) {
            if (_c[i] == 0) continue;
            Coeff a = _c[i];
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (i == 0) {
                os << a;
            } else {
                if (a != 1) os << a << "*";
                os << "q";
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << "0";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) {
        return os << a.str();
    }

    template <typename>
    friend class Cyclotomic;

    /** The Galois automorphism G_j: q -> q^j; requires gcd(j, p) = 1. */
    Cyclotomic galois_image(long j) const {
        long jm = ((j % _p) + _p) % _p;
        if (jm == 0)
            throw std::invalid_argument("galois: j must not be divisible by p");
        std::vector<Coeff> t(static_cast<size_t>(_p));
        for (size_t i = 0; i < _c.size(); ++i)
            t[(i * static_cast<size_t>(jm)) % static_cast<size_t>(_p)] += _c[i];
        return from_exponents(_p, t);
    }
};

using CycInt = Cyclotomic<mpz_class>;
using CycRat = Cyclotomic<mpq_class>;

/** The complex embedding target; plain double-precision complex numbers. */
using ComplexApprox = std::complex<double>;

/** q^e as a cyclotomic integer. */
inline CycInt root_power(long p, long e) { return CycInt::root_power(p, e); }

/** G_j(a), the automorphism sending q to q^j. */
template <typename Coeff>
Cyclotomic<Coeff> galois(const Cyclotomic<Coeff>& a, long j) {
    return a.galois_image(j);
}

namespace detail {
double coeff_to_double(const mpz_class& x);
double coeff_to_double(const mpq_class& x);
} // namespace detail

/** Numerical value at q = e^{2 pi i / p}, in double precision. */
template <typename Coeff>
ComplexApprox embed(const Cyclotomic<Coeff>& a) {
    constexpr double tau = 6.283185307179586476925286766559; // 2 pi
    ComplexApprox sum(0.0, 0.0);
    const double step = tau / static_cast<double>(a.prime());
    const auto& c = a.coefficients();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        double angle = step * static_cast<double>(i);
        sum += detail::coeff_to_double(c[i]) *
               ComplexApprox(std::cos(angle), std::sin(angle));
    }
    return sum;
}

/**
 * The value of `a` as a plain integer, provided `a` is rational.
 * Throws ExactnessError (with the offending coefficients) otherwise.
 */
mpz_class as_rational_integer(const CycInt& a);

/** Rational counterpart: the constant coefficient of a rational element. */
mpq_class as_rational(const CycRat& a);

/**
 * Field inverse in Q(zeta_p) via the extended Euclidean algorithm on the
 * coefficient polynomial and Phi_p(x) = 1 + x + ... + x^(p-1).
 * Throws std::invalid_argument on zero input.
 */
CycRat invert(const CycRat& a);

} // namespace cycdim
