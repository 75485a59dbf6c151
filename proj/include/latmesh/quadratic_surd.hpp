#ifndef LATMESH_QUADRATIC_SURD_HPP
#define LATMESH_QUADRATIC_SURD_HPP

// Exact arithmetic in Q(sqrt(d)) for a fixed positive nonsquare d.
// Values are p + q*sqrt(d) with rational p, q; +,-,*,/ stay exact, sign and
// floor are decided exactly, and irrationality is certified by q != 0.

#include <string>

#include <gmpxx.h>

#include "ball.hpp"
#include "errors.hpp"

namespace latmesh {

inline bool is_perfect_square(const mpz_class& d) {
    return mpz_perfect_square_p(d.get_mpz_t()) != 0;
}

class Surd {
public:
    Surd() : p_(0), q_(0), d_(2) {}
    Surd(mpq_class p, mpq_class q, mpz_class d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
        if (d_ <= 0 || is_perfect_square(d_))
            throw ValidationError("Surd: d must be a positive nonsquare integer");
        p_.canonicalize();
        q_.canonicalize();
    }
    static Surd rational(const mpq_class& p, const mpz_class& d = mpz_class(2)) { return Surd(p, 0, d); }
    static Surd sqrt_of(const mpz_class& d) { return Surd(0, 1, d); }

    const mpq_class& p() const { return p_; }
    const mpq_class& q() const { return q_; }
    const mpz_class& d() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }

    Surd operator+(const Surd& o) const { return raw(p_ + o.p_, q_ + o.q_, same(o)); }
    Surd operator-(const Surd& o) const { return raw(p_ - o.p_, q_ - o.q_, same(o)); }
    Surd operator-() const { return raw(-p_, -q_, d_); }
    Surd operator*(const Surd& o) const {
        const mpz_class& d = same(o);
        return raw(p_ * o.p_ + q_ * o.q_ * mpq_class(d), p_ * o.q_ + q_ * o.p_, d);
    }
    Surd operator/(const Surd& o) const {
        const mpz_class& d = same(o);
        mpq_class nrm = o.p_ * o.p_ - o.q_ * o.q_ * mpq_class(d);
        if (nrm == 0) throw Error("Surd: division by zero");
        Surd conj = raw(o.p_, -o.q_, d);
        Surd num = *this * conj;
        return raw(num.p_ / nrm, num.q_ / nrm, d);
    }
    Surd operator+(const mpq_class& r) const { return raw(p_ + r, q_, d_); }
    Surd operator-(const mpq_class& r) const { return raw(p_ - r, q_, d_); }
    Surd operator*(const mpq_class& r) const { return raw(p_ * r, q_ * r, d_); }

    // exact sign of p + q*sqrt(d)
    int sign() const {
        int sp = sgn(p_), sq = sgn(q_);
        if (sq == 0) return sp;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        // opposite signs: compare p^2 vs q^2 d
        mpq_class lhs = p_ * p_, rhs = q_ * q_ * mpq_class(d_);
        int c = cmp(lhs, rhs);
        if (c == 0) throw Error("Surd: d turned out square"); // impossible for nonsquare d
        // |p| > |q|sqrt(d) => sign of p, else sign of q
        return c > 0 ? sp : sq;
    }

    int cmp_mpq(const mpq_class& r) const { return (*this - r).sign(); }
    bool operator==(const Surd& o) const { return p_ == o.p_ && q_ == o.q_ && d_ == o.d_; }
    bool operator<(const Surd& o) const { return (*this - o).sign() < 0; }

    // exact floor via a ball estimate corrected by exact comparisons
    mpz_class floor() const {
        if (is_rational()) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), p_.get_num().get_mpz_t(), p_.get_den().get_mpz_t());
            return q;
        }
        RealBall b = to_ball(128);
        mpz_class n;
        mpfr_get_z(n.get_mpz_t(), b.mid(), MPFR_RNDD);
        while (cmp_mpq(mpq_class(n)) < 0) --n;
        while (cmp_mpq(mpq_class(n + 1)) >= 0) ++n;
        return n;
    }

    RealBall to_ball(mpfr_prec_t prec) const {
        RealBall root = sqrt_ball(RealBall::from_mpz(d_, prec + 8), prec + 8);
        return add(RealBall::from_mpq(p_, prec + 8), mul(RealBall::from_mpq(q_, prec + 8), root, prec + 8), prec);
    }

    std::string str() const {
        if (is_rational()) return p_.get_str();
        std::string s;
        if (p_ != 0) s += p_.get_str() + "+";
        if (q_ != 1) s += q_.get_str() + "*";
        s += "sqrt(" + d_.get_str() + ")";
        return s;
    }

private:
    Surd(int) {} // uninitialized tag
    static Surd raw(mpq_class p, mpq_class q, mpz_class d) {
        Surd s(0);
        s.p_ = std::move(p);
        s.q_ = std::move(q);
        s.d_ = std::move(d);
        s.p_.canonicalize();
        s.q_.canonicalize();
        return s;
    }
    const mpz_class& same(const Surd& o) const {
        if (is_rational()) return o.d_;
        if (o.is_rational()) return d_;
        if (d_ != o.d_) throw ValidationError("Surd: mixed radicands");
        return d_;
    }

    mpq_class p_, q_;
    mpz_class d_;
};

} // namespace latmesh

#endif
