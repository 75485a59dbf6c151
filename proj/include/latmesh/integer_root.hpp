#ifndef LATMESH_INTEGER_ROOT_HPP
#define LATMESH_INTEGER_ROOT_HPP

#include <cmath>
#include <cstdint>
#include <optional>

#include <gmpxx.h>

#include "errors.hpp"

namespace latmesh {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// base^k, or nullopt if it exceeds limit.
inline std::optional<u128> ipow_checked(u64 base, unsigned k, u128 limit) {
    u128 r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (base != 0 && r > limit / base) return std::nullopt;
        r *= base;
        if (r > limit) return std::nullopt;
    }
    return r;
}

// Exact floor(n^(1/k)) for 64-bit n: float guess plus integer correction.
inline u64 iroot_u64(u64 n, unsigned k) {
    if (k == 0) throw ValidationError("iroot: k must be >= 1");
    if (k == 1 || n <= 1) return n;
    u64 r = static_cast<u64>(std::pow(static_cast<double>(n), 1.0 / k));
    if (r > 2) r -= 2;
    // walk up while (r+1)^k <= n
    while (true) {
        auto p = ipow_checked(r + 1, k, n);
        if (p && *p <= n)
            ++r;
        else
            break;
    }
    // r^k might still exceed n if the guess overshot past the +2 slack
    while (r > 0) {
        auto p = ipow_checked(r, k, n);
        if (p && *p <= n) break;
        --r;
    }
    return r;
}

// The unique r with r^k <= n < (r+1)^k, exact big-integer arithmetic.
inline mpz_class integer_kth_root(const mpz_class& n, unsigned long k) {
    if (k == 0) throw ValidationError("integer_kth_root: k must be >= 1");
    if (sgn(n) < 0) throw ValidationError("integer_kth_root: n must be >= 0");
    if (n.fits_ulong_p() && k <= 64) {
        unsigned long nv = n.get_ui();
        if (nv <= UINT64_MAX) return mpz_class(static_cast<unsigned long>(iroot_u64(nv, static_cast<unsigned>(k))));
    }
    mpz_class r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// floor((num/den)^(1/k)) for num, den > 0: equals iroot(floor(num/den), k).
inline mpz_class rational_kth_root_floor(const mpz_class& num, const mpz_class& den, unsigned long k) {
    return integer_kth_root(floor_div(num, den), k);
}

} // namespace latmesh

#endif
