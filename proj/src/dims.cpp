#include "cycdim/dims.hpp"

#include <algorithm>
#include <stdexcept>

#include <quadmath.h>

#include "cycdim/matrices.hpp"

namespace cycdim {

namespace {

void require_genus(long g) {
    if (g < 1)
        throw std::invalid_argument("genus must be >= 1, got " + std::to_string(g));
}

void require_gow_index(long p, long n) {
    if (n < 1 || n > p - 1)
        throw std::invalid_argument("index n must be in 1..p-1, got " + std::to_string(n));
}

void require_tqft_prime(long p) {
    require_odd_prime(p);
    if (p < 5)
        throw std::invalid_argument("TQFT routes require p >= 5, got " + std::to_string(p));
}

void require_color(long p, long c) {
    if (c < 0 || c > max_color_index(p))
        throw std::invalid_argument("color parameter c must be in 0..(p-3)/2, got " +
                                    std::to_string(c));
}

void require_float_range(long g) {
    if (g > kFloatGenusLimit)
        throw std::invalid_argument("floating-point routes are limited to g <= " +
                                    std::to_string(kFloatGenusLimit) +
                                    " (dynamic-range guard), got " + std::to_string(g));
}

// Exact quotient; a violated divisibility falsifies the formula in question.
mpz_class exact_quotient(const mpz_class& value, long divisor, const char* what) {
    if (!mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(divisor)))
        throw ExactnessError(std::string(what) + ": total " + value.get_str() +
                             " is not divisible by " + std::to_string(divisor));
    return value / divisor;
}

// ---- quad-precision helpers ------------------------------------------------
//
// The float routes evaluate their sums in IEEE binary128: the alternating
// terms grow like 4^g, and at the top of the supported range the rounded
// result must still land on the exact integer.

// Exact conversion of an integer-valued binary128 to an mpz.
mpz_class f128_to_mpz(__float128 v) {
    if (v == 0) return 0;
    bool negative = v < 0;
    if (negative) v = -v;
    int e = 0;
    __float128 m = frexpq(v, &e);        // v = m * 2^e, m in [0.5, 1)
    __float128 scaled = ldexpq(m, 113);  // integer holding the full mantissa
    __float128 hi = floorq(ldexpq(scaled, -60));
    __float128 lo = scaled - ldexpq(hi, 60);
    mpz_class z(static_cast<long>(hi));
    z <<= 60;
    z += static_cast<long>(lo);
    if (e >= 113)
        z <<= (e - 113);
    else
        z >>= (113 - e); // exact: v is an integer, so the dropped bits are zero
    return negative ? mpz_class(-z) : z;
}

Rounded round_to_integer(__float128 v) {
    __float128 nearest = rintq(v);
    return {f128_to_mpz(nearest), static_cast<double>(fabsq(v - nearest))};
}

} // namespace

long max_color_index(long p) {
    require_tqft_prime(p);
    return (p - 3) / 2;
}

mpz_class classical_dim(long g, long k) {
    require_genus(g);
    if (k < 0 || k > g)
        throw std::invalid_argument("weight k must be in 0..g, got " + std::to_string(k));
    mpz_class first, second = 0;
    mpz_bin_uiui(first.get_mpz_t(), static_cast<unsigned long>(2 * g),
                 static_cast<unsigned long>(k));
    if (k >= 2)
        mpz_bin_uiui(second.get_mpz_t(), static_cast<unsigned long>(2 * g),
                     static_cast<unsigned long>(k - 2));
    return first - second;
}

mpz_class gow_dim_matrix(long p, long g, long n) {
    require_odd_prime(p);
    require_genus(g);
    require_gow_index(p, n);
    return mat_pow(recursion_matrix(p), static_cast<unsigned long>(g)).at(n - 1, 0);
}

mpz_class gow_dim_exact(long p, long g, long n) {
    require_odd_prime(p);
    require_genus(g);
    require_gow_index(p, n);

    const CycInt two = CycInt::constant(p, 2);
    CycInt total(p);
    for (long j = 1; j <= (p - 1) / 2; ++j) {
        CycInt pre = (root_power(p, n * j) - root_power(p, -n * j)) *
                     (root_power(p, j) - root_power(p, -j));
        CycInt pair = root_power(p, j) + root_power(p, -j);
        CycInt plus_pow = (two + pair).pow(static_cast<unsigned long>(g));
        CycInt minus_pow = (two - pair).pow(static_cast<unsigned long>(g));
        CycInt bracket = (n % 2 == 0) ? plus_pow - minus_pow : plus_pow + minus_pow;
        total += pre * bracket;
    }
    mpz_class t = as_rational_integer(total); // throws if the sum left the integers
    return -exact_quotient(t, 2 * p, "closed-form dimension sum");
}

Rounded gow_dim_float(long p, long g, long n) {
    require_odd_prime(p);
    require_genus(g);
    require_gow_index(p, n);
    require_float_range(g);

    const __float128 fp = static_cast<__float128>(p);
    __float128 sum = 0;
    for (long j = 1; j <= (p - 1) / 2; ++j) {
        __float128 angle = M_PIq * static_cast<__float128>(j) / fp;
        __float128 cos_term = powq(2 * cosq(angle), 2 * g);
        __float128 sin_term = powq(2 * sinq(angle), 2 * g);
        __float128 bracket = (n % 2 == 0) ? cos_term - sin_term : cos_term + sin_term;
        sum += sinq(2 * angle * static_cast<__float128>(n)) * sinq(2 * angle) * bracket;
    }
    return round_to_integer(2 / fp * sum);
}

GowDims gow_dims(long p, long g) {
    require_odd_prime(p);
    require_genus(g);
    BigIntMatrix power = mat_pow(recursion_matrix(p), static_cast<unsigned long>(g));
    GowDims result{p, g, {}};
    long n_max = std::min(p - 1, g + 1);
    for (long n = 1; n <= n_max; ++n)
        result.by_weight[g + 1 - n] = power.at(n - 1, 0);
    return result;
}

CycRat verlinde_base(long p) {
    require_tqft_prime(p);
    CycInt qm = root_power(p, 1) - root_power(p, -1);
    return invert(CycRat(qm * qm)) * mpq_class(-p);
}

mpz_class verlinde_dim_exact(long p, long g, long c) {
    require_tqft_prime(p);
    require_genus(g);
    require_color(p, c);

    CycInt pre = (root_power(p, 2 * c + 1) - root_power(p, -(2 * c + 1))) *
                 (root_power(p, 1) - root_power(p, -1));
    CycRat summand = CycRat(pre) * verlinde_base(p).pow(static_cast<unsigned long>(g));
    CycRat total(p);
    for (long j = 1; j <= (p - 1) / 2; ++j)
        total += galois(summand, j);

    mpq_class value = as_rational(total); // throws if the Galois sum left Q
    if (value.get_den() != 1)
        throw ExactnessError("total dimension sum is not an integer: " + value.get_str());
    return -exact_quotient(value.get_num(), p, "total dimension sum");
}

Rounded verlinde_dim_float(long p, long g, long c) {
    require_tqft_prime(p);
    require_genus(g);
    require_color(p, c);
    require_float_range(g);

    const __float128 fp = static_cast<__float128>(p);
    __float128 sum = 0;
    for (long j = 1; j <= (p - 1) / 2; ++j) {
        __float128 angle = M_PIq * static_cast<__float128>(j) / fp;
        sum += sinq(angle * static_cast<__float128>(2 * c + 1)) *
               powq(sinq(angle), static_cast<__float128>(1 - 2 * g));
    }
    return round_to_integer(powq(fp / 4, static_cast<__float128>(g - 1)) * sum);
}

CycInt delta_base(long p) {
    require_tqft_prime(p);
    // ceil((p-1)/4) + sum_k (-1)^k ceil((p-2k-1)/4) (q^{2k} + q^{-2k})
    CycInt lam = CycInt::constant(p, (p + 2) / 4);
    for (long k = 1; k <= (p - 3) / 2; ++k) {
        mpz_class coeff = (p - 2 * k + 2) / 4;
        if (k % 2 != 0) coeff = -coeff;
        lam += (root_power(p, 2 * k) + root_power(p, -2 * k)) * coeff;
    }
    return lam;
}

mpz_class delta_exact(long p, long g, long c) {
    require_tqft_prime(p);
    require_genus(g);
    require_color(p, c);

    CycInt pre = (root_power(p, 2 * c + 1) - root_power(p, -(2 * c + 1))) *
                 (root_power(p, 1) - root_power(p, -1));
    CycInt summand = pre * delta_base(p).pow(static_cast<unsigned long>(g));
    if (c % 2 != 0) summand = -summand;
    CycInt total(p);
    for (long j = 1; j <= (p - 1) / 2; ++j)
        total += galois(summand, j);

    mpz_class t = as_rational_integer(total);
    return -exact_quotient(t, p, "even/odd difference sum");
}

Rounded delta_float(long p, long g, long c) {
    require_tqft_prime(p);
    require_genus(g);
    require_color(p, c);
    require_float_range(g);

    const __float128 fp = static_cast<__float128>(p);
    __float128 sum = 0;
    for (long j = 1; j <= (p - 1) / 2; ++j) {
        __float128 angle = M_PIq * static_cast<__float128>(j) / fp;
        __float128 lam = static_cast<__float128>((p + 2) / 4);
        for (long k = 1; k <= (p - 3) / 2; ++k) {
            long coeff = (p - 2 * k + 2) / 4;
            if (k % 2 != 0) coeff = -coeff;
            lam += 2 * static_cast<__float128>(coeff) *
                   cosq(2 * angle * static_cast<__float128>(k));
        }
        sum += sinq(angle * static_cast<__float128>(2 * c + 1)) * sinq(angle) *
               powq(lam, static_cast<__float128>(g));
    }
    __float128 value = 4 / fp * sum;
    if (c % 2 != 0) value = -value;
    return round_to_integer(value);
}

TqftDims even_odd_dims(long p, long g, long c) {
    TqftDims result{p, g, c, verlinde_dim_exact(p, g, c), delta_exact(p, g, c), 0, 0};
    mpz_class sum = result.total + result.delta;
    if (mpz_odd_p(sum.get_mpz_t()))
        throw ExactnessError("even/odd split: total and difference have opposite parity at p=" +
                             std::to_string(p) + " g=" + std::to_string(g) +
                             " c=" + std::to_string(c));
    result.even = sum / 2;
    result.odd = (result.total - result.delta) / 2;
    if (result.even < 0 || result.odd < 0)
        throw ExactnessError("even/odd split: negative part at p=" + std::to_string(p) +
                             " g=" + std::to_string(g) + " c=" + std::to_string(c));
    return result;
}

TupleComparison compare_dimension_tuples(long p, long g) {
    require_tqft_prime(p);
    require_genus(g);

    TupleComparison result{p, g, {}, {}, false, false, {}};

    BigIntMatrix power = mat_pow(recursion_matrix(p), static_cast<unsigned long>(g));
    for (long m = 0; m <= p - 2; ++m)
        result.gow.push_back(power.at(m, 0)); // dim V(g, g-m), n = m+1

    std::vector<mpz_class> evens, odds;
    for (long c = 0; c <= max_color_index(p); ++c) {
        TqftDims parts = even_odd_dims(p, g, c);
        evens.push_back(parts.even);
        odds.push_back(parts.odd);
    }
    result.tqft = evens;
    result.tqft.insert(result.tqft.end(), odds.rbegin(), odds.rend());

    result.ordered_match = (result.gow == result.tqft);
    std::vector<mpz_class> a = result.gow, b = result.tqft;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    result.multiset_match = (a == b);

    result.diffs.reserve(result.gow.size());
    for (size_t i = 0; i < result.gow.size(); ++i)
        result.diffs.push_back(result.gow[i] - result.tqft[i]);
    return result;
}

} // namespace cycdim
