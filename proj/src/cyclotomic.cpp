#include "cycdim/cyclotomic.hpp"

namespace cycdim {

bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

void require_odd_prime(long p) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

namespace detail {

double coeff_to_double(const mpz_class& x) { return x.get_d(); }
double coeff_to_double(const mpq_class& x) { return x.get_d(); }

} // namespace detail

mpz_class as_rational_integer(const CycInt& a) {
    if (!a.is_rational())
        throw ExactnessError("not a rational integer: " + a.str());
    return a[0];
}

mpq_class as_rational(const CycRat& a) {
    if (!a.is_rational())
        throw ExactnessError("not a rational number: " + a.str());
    return a[0];
}

// ---- polynomial helpers over Q, ascending-degree coefficient vectors ------

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& a) {
    while (a.size() > 1 && a.back() == 0)
        a.pop_back();
}

bool is_zero_poly(const Poly& a) {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    trim(a);
    size_t db = b.size() - 1; // b arrives trimmed and nonzero
    Poly q(a.size() > db ? a.size() - db : 1, mpq_class(0));
    while (a.size() > db || (a.size() == db + 1 && a.back() != 0)) {
        if (a.size() < db + 1) break;
        mpq_class coef = a.back() / b.back();
        size_t deg = a.size() - 1 - db;
        q[deg] += coef;
        for (size_t i = 0; i < b.size(); ++i)
            a[deg + i] -= coef * b[i];
        a.pop_back();
        trim(a);
        if (is_zero_poly(a)) break;
    }
    return {q, a};
}

// a - q*b
Poly sub_mul(const Poly& a, const Poly& q, const Poly& b) {
    Poly r(std::max(a.size(), q.size() + b.size() - 1), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i];
    for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] -= q[i] * b[j];
    }
    trim(r);
    return r;
}

} // namespace

CycRat invert(const CycRat& a) {
    if (a.is_zero())
        throw std::invalid_argument("cannot invert zero");
    long p = a.prime();

    // Extended Euclid on (Phi_p, A): maintain t with t*A == r (mod Phi_p).
    Poly r0(static_cast<size_t>(p), mpq_class(1)); // Phi_p = 1 + x + ... + x^(p-1)
    Poly r1(a.coefficients().begin(), a.coefficients().end());
    trim(r1);
    Poly t0{mpq_class(0)}, t1{mpq_class(1)};
    while (!is_zero_poly(r1)) {
        auto [q, rem] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly t2 = sub_mul(t0, q, t1);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // Phi_p is irreducible and deg A < deg Phi_p, so the gcd is a nonzero constant.
    if (r0.size() != 1 || r0[0] == 0)
        throw ExactnessError("field inversion: gcd with Phi_p is not a nonzero constant");

    std::vector<mpq_class> coeffs(static_cast<size_t>(p - 1), mpq_class(0));
    if (t0.size() > coeffs.size())
        throw ExactnessError("field inversion: cofactor degree out of range");
    for (size_t i = 0; i < t0.size(); ++i)
        coeffs[i] = t0[i] / r0[0];
    return CycRat(p, std::move(coeffs));
}

} // namespace cycdim
