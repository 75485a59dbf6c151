#ifndef LATMESH_FRAC_HPP
#define LATMESH_FRAC_HPP

// Certified floor / fractional part / psi(t) = {t} - 1/2 / ||t||.
// Rational inputs are decided exactly; ball inputs escalate precision through
// a regeneration callback until the floor is certified.

#include <functional>
#include <optional>

#include "ball.hpp"

namespace latmesh {

struct FracDecomposition {
    mpz_class floor_part;
    RealBall frac; // {t} in [0,1)
    RealBall psi;  // {t} - 1/2
    RealBall dist; // ||t|| = min({t}, 1-{t})
    bool exact = false;       // decided by exact rational arithmetic
    mpq_class exact_frac{0};  // valid when exact
};

using BallFn = std::function<RealBall(mpfr_prec_t)>;

inline std::optional<mpz_class> certified_floor(const RealBall& b) {
    detail::Mpfr lo(b.prec() + 8), hi(b.prec() + 8);
    b.get_lo(lo);
    b.get_hi(hi);
    mpz_class flo, fhi;
    mpfr_get_z(flo.get_mpz_t(), lo, MPFR_RNDD);
    mpfr_get_z(fhi.get_mpz_t(), hi, MPFR_RNDD);
    if (flo == fhi) return flo;
    return std::nullopt;
}

// exact rational input
inline FracDecomposition frac_decompose(const mpq_class& t, mpfr_prec_t prec) {
    FracDecomposition out;
    out.exact = true;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    out.floor_part = q;
    mpq_class fr = t - mpq_class(q);
    fr.canonicalize();
    out.exact_frac = fr;
    mpq_class ps = fr - mpq_class(1, 2);
    mpq_class ds = (fr <= mpq_class(1, 2)) ? fr : mpq_class(1) - fr;
    out.frac = RealBall::from_mpq(fr, prec);
    out.psi = RealBall::from_mpq(ps, prec);
    out.dist = RealBall::from_mpq(ds, prec);
    return out;
}

// ball input with a regeneration callback: prec -> ball of the same value
inline FracDecomposition frac_decompose(const BallFn& gen, const PrecisionContext& ctx) {
    auto res = ctx.with_escalation([&](mpfr_prec_t p) -> std::optional<FracDecomposition> {
        RealBall b = gen(p);
        auto fl = certified_floor(b);
        if (!fl) return std::nullopt;
        FracDecomposition out;
        out.floor_part = *fl;
        out.frac = sub_z(b, *fl, p);
        out.psi = add(out.frac, RealBall::from_mpq(mpq_class(-1, 2), p), p);
        RealBall one_minus = sub(RealBall::from_si(1, p), out.frac, p);
        out.dist = min_ball(out.frac, one_minus, p);
        return out;
    });
    if (!res) throw AmbiguousFloor("frac_decompose: ball straddles an integer at max_bits");
    return *res;
}

// single-shot ball input (no regeneration available)
inline FracDecomposition frac_decompose(const RealBall& b, const PrecisionContext& ctx) {
    (void)ctx;
    auto fl = certified_floor(b);
    if (!fl) throw AmbiguousFloor("frac_decompose: ball straddles an integer");
    FracDecomposition out;
    mpfr_prec_t p = b.prec();
    out.floor_part = *fl;
    out.frac = sub_z(b, *fl, p);
    out.psi = add(out.frac, RealBall::from_mpq(mpq_class(-1, 2), p), p);
    out.dist = min_ball(out.frac, sub(RealBall::from_si(1, p), out.frac, p), p);
    return out;
}

} // namespace latmesh

#endif
