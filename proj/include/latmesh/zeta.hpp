#ifndef LATMESH_ZETA_HPP
#define LATMESH_ZETA_HPP

// Riemann zeta at real s > 0, s != 1, by Euler-Maclaurin with a rigorous
// remainder bound:
//
//   zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
//           + sum_{k=1..K} B_2k/(2k)! (s)_{2k-1} N^(-s-2k+1) + R
//
//   |R| <= 2.5 |(s)_{2K+1}| (2pi)^-(2K+1) N^(-s-2K) / (s+2K)
//
// using |~B_{2K+1}(x)| <= 2 (2K+1)! zeta(2K+1) / (2pi)^{2K+1} and
// zeta(2K+1) <= zeta(3) < 1.21 for K >= 1.

#include <map>
#include <mutex>
#include <string>

#include "ball.hpp"
#include "bernoulli.hpp"

namespace latmesh {

namespace detail {

// n^(-s) for integer n >= 2 and a positive exponent ball; decreasing in s.
inline RealBall int_pow_neg(unsigned long n, const RealBall& s, mpfr_prec_t prec) {
    Mpfr slo(prec + 8), shi(prec + 8), base(prec + 8), flo(prec + 8), fhi(prec + 8);
    s.get_lo(slo);
    s.get_hi(shi);
    mpfr_set_ui(base, n, MPFR_RNDN);
    mpfr_neg(shi, shi, MPFR_RNDD);
    mpfr_neg(slo, slo, MPFR_RNDU);
    mpfr_pow(flo, base, shi, MPFR_RNDD); // n^(-s_hi)
    mpfr_pow(fhi, base, slo, MPFR_RNDU); // n^(-s_lo)
    return RealBall::from_endpoints(flo, fhi, prec);
}

} // namespace detail

// Euler-Maclaurin zeta for a ball argument. Throws PoleError if the ball
// contains 1, ValidationError unless certainly positive, PrecisionExhausted
// if the contract radius 2^-(bits-8) * max(1,|zeta|) is unreachable.
inline RealBall zeta_real(const RealBall& s, const PrecisionContext& ctx) {
    ctx.validate();
    if (s.contains_si(1)) throw PoleError("zeta_real: argument ball contains the pole s = 1");
    {
        detail::Mpfr lo(s.prec() + 8);
        s.get_lo(lo);
        if (mpfr_sgn(lo) <= 0) throw ValidationError("zeta_real: need s > 0");
    }
    const mpfr_prec_t bits = ctx.bits;
    const mpfr_prec_t wp = bits + 48;
    unsigned long K = static_cast<unsigned long>(bits / 6 + 12);

    for (int attempt = 0; attempt < 7; ++attempt, K *= 2) {
        const unsigned long N = K;
        RealBall sw = add(s, RealBall(wp), wp); // re-round s to working precision
        RealBall sum = RealBall::from_si(1, wp);
        for (unsigned long n = 2; n < N; ++n)
            sum = add(sum, detail::int_pow_neg(n, sw, wp), wp);

        RealBall Nb = RealBall::from_si(static_cast<long>(N), wp);
        RealBall sm1 = add_si(sw, -1, wp);
        RealBall Npow = detail::int_pow_neg(N, sw, wp); // N^-s
        // N^(1-s)/(s-1) = N * N^-s / (s-1)
        sum = add(sum, div(mul(Nb, Npow, wp), sm1, wp), wp);
        sum = add(sum, mul_2si(Npow, -1), wp); // + N^-s / 2

        // Bernoulli tail
        RealBall poch = sw;                 // (s)_1
        RealBall Npw = div(Npow, Nb, wp);   // N^(-s-1)
        RealBall NbSq = mul(Nb, Nb, wp);
        for (unsigned long k = 1; k <= K; ++k) {
            if (k > 1) {
                RealBall f1 = add_si(sw, static_cast<long>(2 * k - 3), wp);
                RealBall f2 = add_si(sw, static_cast<long>(2 * k - 2), wp);
                poch = mul(poch, mul(f1, f2, wp), wp);
                Npw = div(Npw, NbSq, wp);
            }
            mpq_class coeff = detail::BernoulliCache::get(2 * k);
            mpz_class fact(1);
            for (unsigned long i = 2; i <= 2 * k; ++i) fact *= i;
            coeff /= mpq_class(fact);
            coeff.canonicalize();
            RealBall term = mul(RealBall::from_mpq(coeff, wp), mul(poch, Npw, wp), wp);
            sum = add(sum, term, wp);
        }

        // remainder bound: 2.5 |(s)_{2K+1}| (2pi)^-(2K+1) N^(-s-2K) / (s+2K)
        RealBall f1 = add_si(sw, static_cast<long>(2 * K - 1), wp);
        RealBall f2 = add_si(sw, static_cast<long>(2 * K), wp);
        RealBall poch_hi = abs_ball(mul(poch, mul(f1, f2, wp), wp));
        RealBall twopi = mul_2si(pi_ball(wp), 1);
        RealBall tp_pow = pow_si(twopi, -static_cast<long>(2 * K + 1), wp);
        RealBall Ntail = div(Npw, Nb, wp); // N^(-s-2K), since Npw = N^(-s-2K+1)
        RealBall rem = mul(RealBall::from_double(2.5, wp), mul(poch_hi, mul(tp_pow, Ntail, wp), wp), wp);
        rem = div(rem, f2, wp);

        detail::Mpfr remhi(kRadPrec);
        {
            detail::Mpfr t(wp);
            rem.get_hi(t);
            mpfr_abs(t, t, MPFR_RNDU);
            mpfr_set(remhi, t, MPFR_RNDU);
        }
        RealBall result(bits);
        int tr = mpfr_set(result.mid_mut(), sum.mid(), MPFR_RNDN);
        mpfr_add(result.rad_mut(), sum.rad(), remhi, MPFR_RNDU);
        detail::rad_add_ulp(result.rad_mut(), result.mid(), tr ? tr : 1);

        // contract: radius <= 2^-(bits-8) * max(1, |zeta|)
        detail::Mpfr target(kRadPrec), mag(kRadPrec);
        detail::abs_upper(mag, result.mid());
        if (mpfr_cmp_ui(mag, 1) < 0) mpfr_set_ui(mag, 1, MPFR_RNDU);
        mpfr_mul_2si(target, mag, -(bits - 8), MPFR_RNDD);
        if (mpfr_cmp(result.rad(), target) <= 0) return result;
    }
    throw PrecisionExhausted("zeta_real: contract radius unreachable");
}

// Cached variant for exact rational arguments.
inline RealBall zeta_mpq(const mpq_class& s, const PrecisionContext& ctx) {
    static std::mutex mu;
    static std::map<std::pair<std::string, mpfr_prec_t>, RealBall> cache;
    auto key = std::make_pair(s.get_str(), ctx.bits);
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    RealBall v = zeta_real(RealBall::from_mpq(s, ctx.bits + 32), ctx);
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(key, v);
    return v;
}

} // namespace latmesh

#endif
