// Overflow-checked 64-bit integer arithmetic. Every computation in this
// library is exact; an overflow is a hard error, never a wrapped value.
#ifndef K3ZETA_CHECKED_HPP
#define K3ZETA_CHECKED_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace k3zeta {

using Int = std::int64_t;

[[noreturn]] inline void overflow_fail(const char* op)
{
    throw std::overflow_error(std::string("integer overflow in ") + op);
}

inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        overflow_fail("add");
    return r;
}

inline Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        overflow_fail("sub");
    return r;
}

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        overflow_fail("mul");
    return r;
}

inline Int checked_neg(Int a)
{
    return checked_sub(0, a);
}

inline Int checked_abs(Int a)
{
    return a < 0 ? checked_neg(a) : a;
}

// gcd of absolute values; gcd(0, 0) = 0.
inline Int gcd_nonneg(Int a, Int b)
{
    a = checked_abs(a);
    b = checked_abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Exact binomial coefficient C(n, k) for n, k >= 0.
inline Int binomial(Int n, Int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i; // always divides exactly
    }
    return r;
}

} // namespace k3zeta

#endif
