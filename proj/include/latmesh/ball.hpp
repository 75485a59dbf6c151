#ifndef LATMESH_BALL_HPP
#define LATMESH_BALL_HPP

// Midpoint-radius real arithmetic on top of MPFR. Every operation returns a
// ball that contains the exact result of applying the operation to any reals
// inside the input balls (outward rounding throughout). Radii are tracked in
// 64-bit MPFR values rounded upward, so they stay rigorous far below the
// double-precision underflow threshold.

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "errors.hpp"

namespace latmesh {

inline constexpr mpfr_prec_t kRadPrec = 64;

inline std::atomic<std::uint64_t> g_escalation_count{0};

struct PrecisionContext {
    mpfr_prec_t bits = 192;
    mpfr_prec_t max_bits = 4096;
    int escalation_factor = 2;

    void validate() const {
        if (bits < 8 || max_bits < bits || escalation_factor < 2)
            throw ValidationError("PrecisionContext: need 8 <= bits <= max_bits and escalation_factor >= 2");
    }

    mpfr_prec_t next(mpfr_prec_t p) const {
        if (p >= max_bits) return 0;
        mpfr_prec_t q = p * escalation_factor;
        return q > max_bits ? max_bits : q;
    }

    // Calls f(prec) along the escalation ladder until it returns an engaged
    // optional. Returns nullopt if even max_bits was not enough.
    template <class F>
    auto with_escalation(F&& f) const -> decltype(f(bits)) {
        validate();
        for (mpfr_prec_t p = bits;; p = next(p)) {
            if (p == 0) return {};
            auto r = f(p);
            if (r) return r;
            g_escalation_count.fetch_add(1, std::memory_order_relaxed);
        }
    }
};

namespace detail {

// RAII mpfr temporary.
struct Mpfr {
    mpfr_t x;
    explicit Mpfr(mpfr_prec_t p) { mpfr_init2(x, p); }
    ~Mpfr() { mpfr_clear(x); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    operator mpfr_ptr() { return x; }
    operator mpfr_srcptr() const { return x; }
};

inline mpfr_exp_t safe_exp(mpfr_srcptr v) {
    // Exponent for ulp bounds; zero results of inexact ops only happen on
    // underflow, which our workloads never approach, but keep a finite bound.
    if (mpfr_zero_p(v) || !mpfr_number_p(v)) return -(mpfr_exp_t(1) << 40);
    return mpfr_get_exp(v);
}

// rad += 2^(exp(mid) - prec(mid)) when the last midpoint op was inexact.
// One full ulp, generously above the true <= 0.5 ulp RNDN error.
inline void rad_add_ulp(mpfr_ptr rad, mpfr_srcptr mid, int ternary) {
    if (ternary == 0) return;
    Mpfr u(kRadPrec);
    mpfr_set_ui_2exp(u, 1, safe_exp(mid) - mpfr_get_prec(mid), MPFR_RNDU);
    mpfr_add(rad, rad, u, MPFR_RNDU);
}

// upper bound of |v| at kRadPrec
inline void abs_upper(mpfr_ptr out, mpfr_srcptr v) {
    mpfr_set(out, v, MPFR_RNDA);
    mpfr_abs(out, out, MPFR_RNDU);
}

} // namespace detail

class RealBall {
public:
    explicit RealBall(mpfr_prec_t prec = 64) {
        mpfr_init2(mid_, prec < 8 ? 8 : prec);
        mpfr_init2(rad_, kRadPrec);
        mpfr_set_zero(mid_, 1);
        mpfr_set_zero(rad_, 1);
    }
    RealBall(const RealBall& o) {
        mpfr_init2(mid_, mpfr_get_prec(o.mid_));
        mpfr_init2(rad_, kRadPrec);
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
    }
    RealBall(RealBall&& o) noexcept {
        mpfr_init2(mid_, 8);
        mpfr_init2(rad_, kRadPrec);
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
    }
    RealBall& operator=(const RealBall& o) {
        if (this != &o) {
            mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
            mpfr_set(mid_, o.mid_, MPFR_RNDN);
            mpfr_set(rad_, o.rad_, MPFR_RNDU);
        }
        return *this;
    }
    RealBall& operator=(RealBall&& o) noexcept {
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
        return *this;
    }
    ~RealBall() {
        mpfr_clear(mid_);
        mpfr_clear(rad_);
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(mid_); }
    mpfr_srcptr mid() const { return mid_; }
    mpfr_srcptr rad() const { return rad_; }
    mpfr_ptr mid_mut() { return mid_; }
    mpfr_ptr rad_mut() { return rad_; }

    bool is_exact() const { return mpfr_zero_p(rad_); }
    bool is_finite() const { return mpfr_number_p(mid_) && mpfr_number_p(rad_); }

    static RealBall from_si(long v, mpfr_prec_t prec) {
        RealBall b(prec);
        int t = mpfr_set_si(b.mid_, v, MPFR_RNDN);
        detail::rad_add_ulp(b.rad_, b.mid_, t);
        return b;
    }
    static RealBall from_mpz(const mpz_class& v, mpfr_prec_t prec) {
        RealBall b(prec);
        int t = mpfr_set_z(b.mid_, v.get_mpz_t(), MPFR_RNDN);
        detail::rad_add_ulp(b.rad_, b.mid_, t);
        return b;
    }
    static RealBall from_mpq(const mpq_class& v, mpfr_prec_t prec) {
        RealBall b(prec);
        int t = mpfr_set_q(b.mid_, v.get_mpq_t(), MPFR_RNDN);
        detail::rad_add_ulp(b.rad_, b.mid_, t);
        return b;
    }
    static RealBall from_double(double v, mpfr_prec_t prec) {
        RealBall b(prec);
        int t = mpfr_set_d(b.mid_, v, MPFR_RNDN);
        detail::rad_add_ulp(b.rad_, b.mid_, t);
        return b;
    }
    // Ball covering the exact rational interval [lo, hi].
    static RealBall from_mpq_interval(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec) {
        RealBall b(prec);
        mpq_class mid2 = lo + hi;        // 2*mid
        mpq_class wid = hi - lo;         // 2*rad
        int t = mpfr_set_q(b.mid_, mid2.get_mpq_t(), MPFR_RNDN);
        mpfr_div_2ui(b.mid_, b.mid_, 1, MPFR_RNDN);
        mpfr_set_q(b.rad_, wid.get_mpq_t(), MPFR_RNDU);
        mpfr_div_2ui(b.rad_, b.rad_, 1, MPFR_RNDU);
        detail::rad_add_ulp(b.rad_, b.mid_, t ? t : 1);
        return b;
    }
    // Ball from endpoints already rounded outward (takes ownership of values).
    static RealBall from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
        RealBall b(prec);
        int t = mpfr_add(b.mid_, lo, hi, MPFR_RNDN);
        mpfr_div_2ui(b.mid_, b.mid_, 1, MPFR_RNDN);
        detail::Mpfr w(kRadPrec);
        mpfr_sub(w, hi, lo, MPFR_RNDU);
        mpfr_div_2ui(w, w, 1, MPFR_RNDU);
        if (mpfr_sgn(w) < 0) mpfr_set_zero(w, 1);
        mpfr_set(b.rad_, w, MPFR_RNDU);
        detail::rad_add_ulp(b.rad_, b.mid_, t ? t : 1);
        return b;
    }

    void get_lo(mpfr_ptr out) const { mpfr_sub(out, mid_, rad_, MPFR_RNDD); }
    void get_hi(mpfr_ptr out) const { mpfr_add(out, mid_, rad_, MPFR_RNDU); }

    double mid_d() const { return mpfr_get_d(mid_, MPFR_RNDN); }
    double rad_d() const { return mpfr_get_d(rad_, MPFR_RNDU); }
    double lo_d() const {
        detail::Mpfr t(prec());
        get_lo(t);
        return mpfr_get_d(t, MPFR_RNDD);
    }
    double hi_d() const {
        detail::Mpfr t(prec());
        get_hi(t);
        return mpfr_get_d(t, MPFR_RNDU);
    }

    bool contains_zero() const {
        detail::Mpfr a(kRadPrec);
        detail::abs_upper(a, mid_);
        // 0 in ball iff |mid| <= rad; compare |mid| lower bound against rad
        detail::Mpfr l(kRadPrec);
        mpfr_set(l, mid_, MPFR_RNDZ);
        mpfr_abs(l, l, MPFR_RNDD);
        return mpfr_cmp(l, rad_) <= 0;
    }
    bool contains_mpq(const mpq_class& q) const {
        detail::Mpfr lo(prec() + 8), hi(prec() + 8);
        get_lo(lo);
        get_hi(hi);
        return mpfr_cmp_q(lo, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi, q.get_mpq_t()) >= 0;
    }
    bool contains_si(long v) const { return contains_mpq(mpq_class(v)); }

    // +1 if certainly > 0, -1 if certainly < 0, 0 if exactly zero, nullopt otherwise.
    std::optional<int> sign_certain() const {
        if (mpfr_zero_p(mid_) && is_exact()) return 0;
        if (!contains_zero()) return mpfr_sgn(mid_) > 0 ? 1 : -1;
        return std::nullopt;
    }

    std::string str(int digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Re", digits - 1, mid_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }
    std::string rad_str() const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.2Re", rad_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    mpfr_t mid_;
    mpfr_t rad_;
};

// ---------------------------------------------------------------------------
// arithmetic

inline RealBall add(const RealBall& a, const RealBall& b, mpfr_prec_t prec) {
    RealBall r(prec);
    int t = mpfr_add(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    mpfr_add(r.rad_mut(), a.rad(), b.rad(), MPFR_RNDU);
    detail::rad_add_ulp(r.rad_mut(), r.mid(), t);
    return r;
}

inline RealBall sub(const RealBall& a, const RealBall& b, mpfr_prec_t prec) {
    RealBall r(prec);
    int t = mpfr_sub(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    mpfr_add(r.rad_mut(), a.rad(), b.rad(), MPFR_RNDU);
    detail::rad_add_ulp(r.rad_mut(), r.mid(), t);
    return r;
}

inline RealBall neg(const RealBall& a) {
    RealBall r(a);
    mpfr_neg(r.mid_mut(), r.mid(), MPFR_RNDN);
    return r;
}

inline RealBall abs_ball(const RealBall& a) {
    if (!a.contains_zero()) {
        RealBall r(a);
        mpfr_abs(r.mid_mut(), r.mid(), MPFR_RNDN);
        return r;
    }
    // hull of [0, |mid|+rad]
    detail::Mpfr hi(a.prec() + 8), lo(a.prec() + 8);
    detail::Mpfr am(a.prec());
    mpfr_abs(am, a.mid(), MPFR_RNDN);
    mpfr_add(hi, am, a.rad(), MPFR_RNDU);
    mpfr_set_zero(lo, 1);
    return RealBall::from_endpoints(lo, hi, a.prec());
}

inline RealBall mul(const RealBall& a, const RealBall& b, mpfr_prec_t prec) {
    RealBall r(prec);
    int t = mpfr_mul(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    detail::Mpfr am(kRadPrec), bm(kRadPrec), u(kRadPrec);
    detail::abs_upper(am, a.mid());
    detail::abs_upper(bm, b.mid());
    // rad = |a|*rb + |b|*ra + ra*rb
    mpfr_mul(u, am, b.rad(), MPFR_RNDU);
    mpfr_set(r.rad_mut(), u, MPFR_RNDU);
    mpfr_mul(u, bm, a.rad(), MPFR_RNDU);
    mpfr_add(r.rad_mut(), r.rad(), u, MPFR_RNDU);
    mpfr_mul(u, a.rad(), b.rad(), MPFR_RNDU);
    mpfr_add(r.rad_mut(), r.rad(), u, MPFR_RNDU);
    detail::rad_add_ulp(r.rad_mut(), r.mid(), t);
    return r;
}

inline RealBall div(const RealBall& a, const RealBall& b, mpfr_prec_t prec) {
    // |b| must certifiably exceed its radius
    detail::Mpfr blo(kRadPrec);
    mpfr_set(blo, b.mid(), MPFR_RNDZ);
    mpfr_abs(blo, blo, MPFR_RNDD);
    mpfr_sub(blo, blo, b.rad(), MPFR_RNDD);
    if (mpfr_sgn(blo) <= 0)
        throw Error("ball division: divisor contains zero");
    RealBall r(prec);
    int t = mpfr_div(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    // rad = (ra + (|mid|+ulp)*rb) / (|b|-rb)
    detail::Mpfr mm(kRadPrec), num(kRadPrec);
    detail::abs_upper(mm, r.mid());
    mpfr_mul(num, mm, b.rad(), MPFR_RNDU);
    mpfr_add(num, num, a.rad(), MPFR_RNDU);
    mpfr_div(r.rad_mut(), num, blo, MPFR_RNDU);
    detail::rad_add_ulp(r.rad_mut(), r.mid(), t ? t : 1);
    return r;
}

inline RealBall add_si(const RealBall& a, long v, mpfr_prec_t prec) {
    RealBall r(prec);
    int t = mpfr_add_si(r.mid_mut(), a.mid(), v, MPFR_RNDN);
    mpfr_set(r.rad_mut(), a.rad(), MPFR_RNDU);
    detail::rad_add_ulp(r.rad_mut(), r.mid(), t);
    return r;
}

inline RealBall sub_z(const RealBall& a, const mpz_class& v, mpfr_prec_t prec) {
    RealBall r(prec);
    int t = mpfr_sub_z(r.mid_mut(), a.mid(), v.get_mpz_t(), MPFR_RNDN);
    mpfr_set(r.rad_mut(), a.rad(), MPFR_RNDU);
    detail::rad_add_ulp(r.rad_mut(), r.mid(), t);
    return r;
}

inline RealBall mul_si(const RealBall& a, long v, mpfr_prec_t prec) {
    RealBall r(prec);
    int t = mpfr_mul_si(r.mid_mut(), a.mid(), v, MPFR_RNDN);
    mpfr_mul_si(r.rad_mut(), a.rad(), v < 0 ? -v : v, MPFR_RNDU);
    detail::rad_add_ulp(r.rad_mut(), r.mid(), t);
    return r;
}

inline RealBall div_si(const RealBall& a, long v, mpfr_prec_t prec) {
    if (v == 0) throw Error("ball div_si by zero");
    RealBall r(prec);
    int t = mpfr_div_si(r.mid_mut(), a.mid(), v, MPFR_RNDN);
    mpfr_div_si(r.rad_mut(), a.rad(), v < 0 ? -v : v, MPFR_RNDU);
    detail::rad_add_ulp(r.rad_mut(), r.mid(), t);
    return r;
}

inline RealBall mul_2si(const RealBall& a, long e) {
    RealBall r(a);
    mpfr_mul_2si(r.mid_mut(), r.mid(), e, MPFR_RNDN);
    mpfr_mul_2si(r.rad_mut(), r.rad(), e, MPFR_RNDU);
    return r;
}

inline RealBall square(const RealBall& a, mpfr_prec_t prec) { return mul(a, a, prec); }

// ---------------------------------------------------------------------------
// monotone functions via endpoint rounding

namespace detail {

template <class Apply>
RealBall monotone_incr(const RealBall& x, mpfr_prec_t prec, Apply&& ap) {
    Mpfr lo(prec + 8), hi(prec + 8), flo(prec + 8), fhi(prec + 8);
    x.get_lo(lo);
    x.get_hi(hi);
    ap(flo, static_cast<mpfr_srcptr>(lo), MPFR_RNDD);
    ap(fhi, static_cast<mpfr_srcptr>(hi), MPFR_RNDU);
    return RealBall::from_endpoints(flo, fhi, prec);
}

template <class Apply>
RealBall monotone_decr(const RealBall& x, mpfr_prec_t prec, Apply&& ap) {
    Mpfr lo(prec + 8), hi(prec + 8), flo(prec + 8), fhi(prec + 8);
    x.get_lo(lo);
    x.get_hi(hi);
    ap(flo, static_cast<mpfr_srcptr>(hi), MPFR_RNDD);
    ap(fhi, static_cast<mpfr_srcptr>(lo), MPFR_RNDU);
    return RealBall::from_endpoints(flo, fhi, prec);
}

inline void require_positive_lo(const RealBall& x, const char* op) {
    Mpfr lo(x.prec() + 8);
    x.get_lo(lo);
    if (mpfr_sgn(lo) <= 0) throw Error(std::string(op) + ": ball not certainly positive");
}

} // namespace detail

inline RealBall sqrt_ball(const RealBall& x, mpfr_prec_t prec) {
    detail::Mpfr lo(prec + 8), hi(prec + 8), flo(prec + 8), fhi(prec + 8);
    x.get_lo(lo);
    x.get_hi(hi);
    if (mpfr_sgn(hi) < 0) throw Error("sqrt of negative ball");
    if (mpfr_sgn(lo) < 0) mpfr_set_zero(lo, 1); // caller asserts the true value is >= 0
    mpfr_sqrt(flo, lo, MPFR_RNDD);
    mpfr_sqrt(fhi, hi, MPFR_RNDU);
    return RealBall::from_endpoints(flo, fhi, prec);
}

inline RealBall rootn(const RealBall& x, unsigned long k, mpfr_prec_t prec) {
    if (k == 0) throw Error("rootn with k = 0");
    detail::require_positive_lo(x, "rootn");
    return detail::monotone_incr(x, prec, [k](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) {
        mpfr_rootn_ui(o, i, k, r);
    });
}

inline RealBall log_ball(const RealBall& x, mpfr_prec_t prec) {
    detail::require_positive_lo(x, "log");
    return detail::monotone_incr(x, prec, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) {
        mpfr_log(o, i, r);
    });
}

inline RealBall exp_ball(const RealBall& x, mpfr_prec_t prec) {
    return detail::monotone_incr(x, prec, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) {
        mpfr_exp(o, i, r);
    });
}

inline RealBall pow_si(const RealBall& x, long n, mpfr_prec_t prec) {
    if (n == 0) return RealBall::from_si(1, prec);
    detail::require_positive_lo(x, "pow_si");
    auto ap = [n](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_pow_si(o, i, n, r); };
    return n > 0 ? detail::monotone_incr(x, prec, ap) : detail::monotone_decr(x, prec, ap);
}

// x^(p/q) for x certainly positive
inline RealBall pow_mpq(const RealBall& x, const mpq_class& e, mpfr_prec_t prec) {
    detail::require_positive_lo(x, "pow_mpq");
    unsigned long q = mpz_get_ui(e.get_den().get_mpz_t());
    if (!e.get_den().fits_ulong_p()) throw Error("pow_mpq: denominator too large");
    if (!e.get_num().fits_slong_p()) throw Error("pow_mpq: numerator too large");
    long p = e.get_num().get_si();
    RealBall root = (q == 1) ? x : rootn(x, q, prec + 16);
    return pow_si(root, p, prec);
}

// x^e for x certainly positive and arbitrary ball exponent (corner method)
inline RealBall pow_ball(const RealBall& x, const RealBall& e, mpfr_prec_t prec) {
    detail::require_positive_lo(x, "pow_ball");
    detail::Mpfr xlo(prec + 8), xhi(prec + 8), elo(prec + 8), ehi(prec + 8);
    x.get_lo(xlo);
    x.get_hi(xhi);
    e.get_lo(elo);
    e.get_hi(ehi);
    detail::Mpfr cand(prec + 8), best_lo(prec + 8), best_hi(prec + 8);
    bool first = true;
    mpfr_srcptr xs[2] = {xlo, xhi};
    mpfr_srcptr es[2] = {elo, ehi};
    for (auto xv : xs)
        for (auto ev : es) {
            mpfr_pow(cand, xv, ev, MPFR_RNDD);
            if (first || mpfr_cmp(cand, best_lo) < 0) mpfr_set(best_lo, cand, MPFR_RNDD);
            mpfr_pow(cand, xv, ev, MPFR_RNDU);
            if (first || mpfr_cmp(cand, best_hi) > 0) mpfr_set(best_hi, cand, MPFR_RNDU);
            first = false;
        }
    return RealBall::from_endpoints(best_lo, best_hi, prec);
}

// ---------------------------------------------------------------------------
// trig: cos(2*pi*t) and sin(2*pi*t) with mod-1 argument reduction

namespace detail {

template <bool Sin>
RealBall trig2pi(const RealBall& t, mpfr_prec_t prec) {
    Mpfr quarter(kRadPrec);
    mpfr_set_d(quarter, 0.25, MPFR_RNDN);
    if (!mpfr_number_p(t.mid()) || mpfr_cmp(t.rad(), quarter) >= 0) {
        Mpfr lo(prec), hi(prec);
        mpfr_set_si(lo, -1, MPFR_RNDD);
        mpfr_set_si(hi, 1, MPFR_RNDU);
        return RealBall::from_endpoints(lo, hi, prec);
    }
    // v = mid - nearest integer, exactly representable reduction error tracked
    mpz_class n;
    mpfr_get_z(n.get_mpz_t(), t.mid(), MPFR_RNDN);
    Mpfr v(prec + 16);
    int tv = mpfr_sub_z(v, t.mid(), n.get_mpz_t(), MPFR_RNDN);
    Mpfr pi(prec + 16), w(prec + 16), c(prec + 16);
    mpfr_const_pi(pi, MPFR_RNDN);
    int tw = mpfr_mul(w, v, pi, MPFR_RNDN);
    tw |= mpfr_mul_2ui(w, w, 1, MPFR_RNDN);
    int tc = Sin ? mpfr_sin(c, w, MPFR_RNDN) : mpfr_cos(c, w, MPFR_RNDN);

    RealBall r(prec);
    int tr = mpfr_set(r.mid_mut(), c, MPFR_RNDN);
    // |d/dv| <= 2*pi < 6.30; pi rounding and |v| <= 0.51 contribute < 2 ulp each
    Mpfr err(kRadPrec), u(kRadPrec);
    mpfr_set(err, t.rad(), MPFR_RNDU);
    if (tv) {
        mpfr_set_ui_2exp(u, 1, safe_exp(v) - mpfr_get_prec(v), MPFR_RNDU);
        mpfr_add(err, err, u, MPFR_RNDU);
    }
    mpfr_mul_d(err, err, 6.30, MPFR_RNDU);
    if (tw) {
        mpfr_set_ui_2exp(u, 2, safe_exp(w) - mpfr_get_prec(w), MPFR_RNDU);
        mpfr_add(err, err, u, MPFR_RNDU);
    }
    mpfr_set(r.rad_mut(), err, MPFR_RNDU);
    detail::rad_add_ulp(r.rad_mut(), r.mid(), tc | tr | 1);
    return r;
}

} // namespace detail

inline RealBall cos2pi(const RealBall& t, mpfr_prec_t prec) { return detail::trig2pi<false>(t, prec); }
inline RealBall sin2pi(const RealBall& t, mpfr_prec_t prec) { return detail::trig2pi<true>(t, prec); }

inline RealBall pi_ball(mpfr_prec_t prec) {
    detail::Mpfr lo(prec), hi(prec);
    mpfr_const_pi(lo, MPFR_RNDD);
    mpfr_const_pi(hi, MPFR_RNDU);
    return RealBall::from_endpoints(lo, hi, prec);
}

// ---------------------------------------------------------------------------
// lattice of balls

inline RealBall min_ball(const RealBall& a, const RealBall& b, mpfr_prec_t prec) {
    detail::Mpfr alo(prec + 8), ahi(prec + 8), blo(prec + 8), bhi(prec + 8);
    a.get_lo(alo);
    a.get_hi(ahi);
    b.get_lo(blo);
    b.get_hi(bhi);
    detail::Mpfr lo(prec + 8), hi(prec + 8);
    mpfr_min(lo, alo, blo, MPFR_RNDD);
    mpfr_min(hi, ahi, bhi, MPFR_RNDU);
    return RealBall::from_endpoints(lo, hi, prec);
}

inline RealBall max_ball(const RealBall& a, const RealBall& b, mpfr_prec_t prec) {
    detail::Mpfr alo(prec + 8), ahi(prec + 8), blo(prec + 8), bhi(prec + 8);
    a.get_lo(alo);
    a.get_hi(ahi);
    b.get_lo(blo);
    b.get_hi(bhi);
    detail::Mpfr lo(prec + 8), hi(prec + 8);
    mpfr_max(lo, alo, blo, MPFR_RNDD);
    mpfr_max(hi, ahi, bhi, MPFR_RNDU);
    return RealBall::from_endpoints(lo, hi, prec);
}

inline RealBall hull(const RealBall& a, const RealBall& b, mpfr_prec_t prec) {
    detail::Mpfr alo(prec + 8), ahi(prec + 8), blo(prec + 8), bhi(prec + 8);
    a.get_lo(alo);
    a.get_hi(ahi);
    b.get_lo(blo);
    b.get_hi(bhi);
    detail::Mpfr lo(prec + 8), hi(prec + 8);
    mpfr_min(lo, alo, blo, MPFR_RNDD);
    mpfr_max(hi, ahi, bhi, MPFR_RNDU);
    return RealBall::from_endpoints(lo, hi, prec);
}

// ---------------------------------------------------------------------------
// comparisons

inline bool certainly_lt(const RealBall& a, const RealBall& b) {
    detail::Mpfr ahi(a.prec() + 8), blo(b.prec() + 8);
    a.get_hi(ahi);
    b.get_lo(blo);
    return mpfr_cmp(ahi, blo) < 0;
}

inline bool certainly_gt(const RealBall& a, const RealBall& b) { return certainly_lt(b, a); }

inline bool certainly_le(const RealBall& a, const RealBall& b) {
    detail::Mpfr ahi(a.prec() + 8), blo(b.prec() + 8);
    a.get_hi(ahi);
    b.get_lo(blo);
    return mpfr_cmp(ahi, blo) <= 0;
}

inline bool overlaps(const RealBall& a, const RealBall& b) {
    return !certainly_lt(a, b) && !certainly_lt(b, a);
}

// refined interval is contained in coarse (nested-precision check)
inline bool contained_in(const RealBall& inner, const RealBall& outer) {
    detail::Mpfr ilo(inner.prec() + 8), ihi(inner.prec() + 8);
    detail::Mpfr olo(outer.prec() + 8), ohi(outer.prec() + 8);
    inner.get_lo(ilo);
    inner.get_hi(ihi);
    outer.get_lo(olo);
    outer.get_hi(ohi);
    return mpfr_cmp(olo, ilo) <= 0 && mpfr_cmp(ihi, ohi) <= 0;
}

// operators: result precision = max of operand precisions
inline mpfr_prec_t op_prec(const RealBall& a, const RealBall& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
}
inline RealBall operator+(const RealBall& a, const RealBall& b) { return add(a, b, op_prec(a, b)); }
inline RealBall operator-(const RealBall& a, const RealBall& b) { return sub(a, b, op_prec(a, b)); }
inline RealBall operator*(const RealBall& a, const RealBall& b) { return mul(a, b, op_prec(a, b)); }
inline RealBall operator/(const RealBall& a, const RealBall& b) { return div(a, b, op_prec(a, b)); }
inline RealBall operator-(const RealBall& a) { return neg(a); }

} // namespace latmesh

#endif
