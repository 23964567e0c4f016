#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <vector>

namespace interlace::detail {

// Product of num[...] divided by product of den[...], factors interleaved
// so the running value stays near the final magnitude.
inline double ratio_of_products(const std::vector<double>& num,
                                const std::vector<double>& den) {
    double v = 1.0;
    std::size_t i = 0, j = 0;
    while (i < num.size() || j < den.size()) {
        if (j == den.size() || (i < num.size() && v <= 1.0))
            v *= num[i++];
        else
            v /= den[j++];
    }
    return v;
}

// a! / b! as a cancelled product, for a, b >= 0.
inline double factorial_ratio(std::size_t a, std::size_t b) {
    std::vector<double> num, den;
    if (a >= b)
        for (std::size_t t = b + 1; t <= a; ++t) num.push_back(double(t));
    else
        for (std::size_t t = a + 1; t <= b; ++t) den.push_back(double(t));
    return ratio_of_products(num, den);
}

// Exponent of prime p in n! (Legendre).
inline long long prime_exponent_in_factorial(std::size_t n, std::size_t p) {
    long long e = 0;
    for (std::size_t q = p; q <= n; q *= p) {
        e += (long long)(n / q);
        if (q > n / p) break;
    }
    return e;
}

// Ratio of factorials prod a_i! / prod b_i!, evaluated by cancelling prime
// exponents. When numerator and denominator both fit exactly in binary64
// the result is correctly rounded (and exact for integer ratios); otherwise
// falls back to an interleaved product of the raw factors.
inline double factorial_product_ratio(const std::vector<std::size_t>& num_facts,
                                      const std::vector<std::size_t>& den_facts) {
    std::size_t top = 1;
    for (std::size_t a : num_facts) top = std::max(top, a);
    for (std::size_t b : den_facts) top = std::max(top, b);

    // primes up to top by trial sieve (top stays small here)
    std::vector<std::size_t> primes;
    std::vector<bool> composite(top + 1, false);
    for (std::size_t p = 2; p <= top; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::size_t q = p * p; q <= top; q += p) composite[q] = true;
    }

    const double exact_limit = 9007199254740992.0; // 2^53
    double num = 1.0, den = 1.0;
    bool exact = true;
    for (std::size_t p : primes) {
        long long e = 0;
        for (std::size_t a : num_facts) e += prime_exponent_in_factorial(a, p);
        for (std::size_t b : den_facts) e -= prime_exponent_in_factorial(b, p);
        double& side = (e > 0) ? num : den;
        for (long long t = 0; t < std::llabs(e); ++t) {
            side *= double(p);
            if (side > exact_limit) { exact = false; break; }
        }
        if (!exact) break;
    }
    if (exact) return num / den;

    std::vector<double> nf, df;
    for (std::size_t a : num_facts)
        for (std::size_t t = 2; t <= a; ++t) nf.push_back(double(t));
    for (std::size_t b : den_facts)
        for (std::size_t t = 2; t <= b; ++t) df.push_back(double(t));
    return ratio_of_products(nf, df);
}

} // namespace interlace::detail
