#pragma once

/* Exact arithmetic helpers on top of GMP: p-adic valuations and residues
 * of rationals with denominator prime to p. Everything in this library is
 * exact; there is no p-adic truncation anywhere. */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace defect2 {

using bigint = mpz_class;
using rational = mpq_class;

inline bool is_odd_prime(long p)
{
    if (p < 3 || p % 2 == 0)
        return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

inline void require_odd_prime(long p)
{
    if (!is_odd_prime(p))
        throw std::invalid_argument("p must be an odd prime");
}

inline bigint factorial(long n)
{
    bigint f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

/* nu_p of a nonzero integer. */
inline long valuation(const bigint& a, long p)
{
    if (a == 0)
        throw std::invalid_argument("valuation of zero");
    bigint r = abs(a);
    long v = 0;
    while (mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

inline long valuation(long a, long p) { return valuation(bigint(a), p); }

/* nu_p of a nonzero rational. */
inline long valuation(const rational& q, long p)
{
    if (q == 0)
        throw std::invalid_argument("valuation of zero");
    return valuation(bigint(q.get_num()), p) - valuation(bigint(q.get_den()), p);
}

inline bigint pow_p(long p, long k)
{
    if (k < 0)
        throw std::invalid_argument("pow_p: negative exponent");
    bigint r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

/* p^k as a rational, k may be negative. */
inline rational pow_p_q(long p, long k)
{
    if (k >= 0)
        return rational(pow_p(p, k));
    return rational(1, pow_p(p, -k));
}

/* Canonical representative of q modulo p^k * Z_(p), for any k in Z.
 * The representative is p^v * m with v = nu_p(q) and m the truncated p-adic
 * digit expansion of the unit part, an integer in [1, p^(k-v)).  Returns 0
 * when q lies in p^k * Z_(p).  Requires den(q) prime to p. */
inline rational padic_residue(const rational& q, long k, long p)
{
    if (q == 0)
        return rational(0);
    long v = valuation(q, p);
    if (v >= k)
        return rational(0);
    bigint num = q.get_num(), den = q.get_den();
    // strip p^v from the numerator (v >= 0 here iff num carries it)
    if (v > 0)
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pow_p(p, v).get_mpz_t());
    else if (v < 0)
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), pow_p(p, -v).get_mpz_t());
    bigint mod = pow_p(p, k - v);
    bigint deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::invalid_argument("padic_residue: denominator not prime to p");
    bigint m = (num * deninv) % mod;
    if (m < 0)
        m += mod;
    rational r = rational(m) * pow_p_q(p, v);
    r.canonicalize();
    return r;
}

/* q = p^k * c + residue with c in Z_(p); returns c. */
inline rational padic_quotient(const rational& q, long k, long p)
{
    rational c = (q - padic_residue(q, k, p)) * pow_p_q(p, -k);
    c.canonicalize();
    return c;
}

inline bool is_p_integral(const rational& q, long p)
{
    return q == 0 || valuation(q, p) >= 0;
}

inline bool is_p_unit(const rational& q, long p)
{
    return q != 0 && valuation(q, p) == 0;
}

inline std::string to_string(const rational& q)
{
    return q.get_num().get_str() + (q.get_den() == 1 ? "" : "/" + q.get_den().get_str());
}

} // namespace defect2
