#include "fcq/exactalg/integer.hpp"

namespace fcq {

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

void require_odd_prime(std::int64_t p, const char* what)
{
    if (p % 2 == 0 || !is_prime(p))
        throw AlgebraError(std::string(what) + ": p = " + std::to_string(p) + " is not an odd prime");
}

Integer binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(std::int64_t n)
{
    if (n < 0)
        throw AlgebraError("factorial of a negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer falling_factorial(std::int64_t a, std::int64_t k)
{
    Integer r = 1;
    for (std::int64_t i = 0; i < k; ++i)
        r *= Integer(static_cast<long>(a - i));
    return r;
}

Integer mod_floor(const Integer& a, std::uint32_t m)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), m);
    return r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t e, std::int64_t p)
{
    std::int64_t b = mod_floor(base, p);
    std::int64_t r = 1 % p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p)
{
    a = mod_floor(a, p);
    if (a == 0)
        throw AlgebraError("division by zero in F_" + std::to_string(p));
    return pow_mod(a, static_cast<std::uint64_t>(p - 2), p);
}

} // namespace fcq
