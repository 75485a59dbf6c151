#ifndef LATMESH_EXPONENT_PAIR_HPP
#define LATMESH_EXPONENT_PAIR_HPP

// The exponent pair (a, b), 1 <= a < b, in one of three flavors:
//   IntegerCoprime — exact integers with gcd(a,b) = 1
//   QuadraticSurd  — exact elements of Q(sqrt(d)) with a/b certified irrational
//   Decimal        — decimal strings with stated precision, a/b irrationality
//                    asserted by the user (reports carry a warning)
// plus every derived constant the paper's formulas need.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "ball.hpp"
#include "decimal_real.hpp"
#include "errors.hpp"
#include "integer_root.hpp"
#include "quadratic_surd.hpp"
#include "zeta.hpp"

namespace latmesh {

enum class PairKind { IntegerCoprime, QuadraticSurd, Decimal };

// Which of the two symmetric roles (a,b) or (b,a) an operation evaluates.
enum class Order { AB, BA };

class ExponentPair {
public:
    static ExponentPair integers(long a, long b) {
        if (a < 1 || b < 1) throw ValidationError("ExponentPair: need a, b >= 1");
        if (a >= b) throw ValidationError("ExponentPair: need a < b (a = b is rejected)");
        if (std::gcd(a, b) != 1)
            throw ValidationError("ExponentPair: integer pair must be coprime; reduce first");
        ExponentPair p;
        p.kind_ = PairKind::IntegerCoprime;
        p.ia_ = a;
        p.ib_ = b;
        return p;
    }

    static ExponentPair surds(const Surd& a, const Surd& b) {
        if (a.cmp_mpq(1) < 0) throw ValidationError("ExponentPair: need a >= 1");
        if (!(a < b)) throw ValidationError("ExponentPair: need a < b");
        Surd ratio = a / b;
        if (ratio.is_rational())
            throw ValidationError("ExponentPair: a/b is rational; enter the reduced pair as integers");
        ExponentPair p;
        p.kind_ = PairKind::QuadraticSurd;
        p.sa_ = a;
        p.sb_ = b;
        return p;
    }

    static ExponentPair decimals(const DecimalReal& a, const DecimalReal& b) {
        if (a.lo() < 1) throw ValidationError("ExponentPair: need a >= 1 (certified by stated digits)");
        if (!(a.hi() < b.lo()))
            throw ValidationError("ExponentPair: need a < b certified by the stated digits");
        ExponentPair p;
        p.kind_ = PairKind::Decimal;
        p.da_ = a;
        p.db_ = b;
        return p;
    }

    PairKind kind() const { return kind_; }
    bool is_integer_kind() const { return kind_ == PairKind::IntegerCoprime; }

    long ia() const { need(PairKind::IntegerCoprime); return ia_; }
    long ib() const { need(PairKind::IntegerCoprime); return ib_; }
    const Surd& sa() const { need(PairKind::QuadraticSurd); return sa_; }
    const Surd& sb() const { need(PairKind::QuadraticSurd); return sb_; }
    const DecimalReal& da() const { need(PairKind::Decimal); return da_; }
    const DecimalReal& db() const { need(PairKind::Decimal); return db_; }

    // true when the irrationality of a/b is certified (surd kind); decimal
    // kind relies on the user's assertion.
    bool ratio_irrational_certified() const { return kind_ == PairKind::QuadraticSurd; }
    bool diagonal_only() const { return kind_ != PairKind::IntegerCoprime; }

    RealBall a_ball(mpfr_prec_t prec) const {
        switch (kind_) {
            case PairKind::IntegerCoprime: return RealBall::from_si(ia_, prec);
            case PairKind::QuadraticSurd: return sa_.to_ball(prec);
            default: return da_.to_ball(prec);
        }
    }
    RealBall b_ball(mpfr_prec_t prec) const {
        switch (kind_) {
            case PairKind::IntegerCoprime: return RealBall::from_si(ib_, prec);
            case PairKind::QuadraticSurd: return sb_.to_ball(prec);
            default: return db_.to_ball(prec);
        }
    }
    RealBall exp_first(Order o, mpfr_prec_t prec) const { return o == Order::AB ? a_ball(prec) : b_ball(prec); }
    RealBall exp_second(Order o, mpfr_prec_t prec) const { return o == Order::AB ? b_ball(prec) : a_ball(prec); }

    // ---- derived constants ----
    RealBall theta(mpfr_prec_t prec) const { // 1/(a+b)
        mpfr_prec_t wp = prec + 16;
        return div(RealBall::from_si(1, wp), add(a_ball(wp), b_ball(wp), wp), prec);
    }
    RealBall e_h(mpfr_prec_t prec) const { // (a+2b)/(2(a+b))
        mpfr_prec_t wp = prec + 16;
        RealBall a = a_ball(wp), b = b_ball(wp);
        return div(add(a, mul_2si(b, 1), wp), mul_2si(add(a, b, wp), 1), prec);
    }
    RealBall e_r(mpfr_prec_t prec) const { // (2a+b)/(2(a+b))
        mpfr_prec_t wp = prec + 16;
        RealBall a = a_ball(wp), b = b_ball(wp);
        return div(add(mul_2si(a, 1), b, wp), mul_2si(add(a, b, wp), 1), prec);
    }
    RealBall c1(mpfr_prec_t prec) const { // a^(b/(2(a+b))) b^(a/(2(a+b))) (a+b)^(-1/2)
        mpfr_prec_t wp = prec + 32;
        RealBall a = a_ball(wp), b = b_ball(wp);
        RealBall s = add(a, b, wp);
        RealBall half_inv = div(RealBall::from_si(1, wp), mul_2si(s, 1), wp);
        RealBall t1 = pow_ball(a, mul(b, half_inv, wp), wp);
        RealBall t2 = pow_ball(b, mul(a, half_inv, wp), wp);
        RealBall t3 = div(RealBall::from_si(1, wp), sqrt_ball(s, wp), wp);
        return mul(mul(t1, t2, wp), t3, prec);
    }
    RealBall c2(mpfr_prec_t prec) const { // (a/b)^(b/(a+b)) + (b/a)^(a/(a+b))
        mpfr_prec_t wp = prec + 32;
        RealBall a = a_ball(wp), b = b_ball(wp);
        RealBall th = div(RealBall::from_si(1, wp), add(a, b, wp), wp);
        RealBall t1 = pow_ball(div(a, b, wp), mul(b, th, wp), wp);
        RealBall t2 = pow_ball(div(b, a, wp), mul(a, th, wp), wp);
        return add(t1, t2, prec);
    }
    RealBall sigma1(mpfr_prec_t prec) const { return mul_2si(e_h(prec), 1); } // (a+2b)/(a+b)
    RealBall sigma2(mpfr_prec_t prec) const { return mul_2si(e_r(prec), 1); } // (2a+b)/(a+b)
    RealBall kappa(mpfr_prec_t prec) const { // (a^2+ab+b^2)/(a+b)
        mpfr_prec_t wp = prec + 16;
        RealBall a = a_ball(wp), b = b_ball(wp);
        RealBall num = add(add(mul(a, a, wp), mul(a, b, wp), wp), mul(b, b, wp), wp);
        return div(num, add(a, b, wp), prec);
    }

    // exact rational versions, IntegerCoprime only
    mpq_class theta_q() const { return mpq_class(1, ia() + ib()); }
    mpq_class e_h_q() const { return canon(mpq_class(ia() + 2 * ib(), 2 * (ia() + ib()))); }
    mpq_class e_r_q() const { return canon(mpq_class(2 * ia() + ib(), 2 * (ia() + ib()))); }
    mpq_class sigma1_q() const { return canon(mpq_class(ia() + 2 * ib(), ia() + ib())); }
    mpq_class sigma2_q() const { return canon(mpq_class(2 * ia() + ib(), ia() + ib())); }
    mpq_class kappa_q() const {
        long a = ia(), b = ib();
        return canon(mpq_class(a * a + a * b + b * b, a + b));
    }

    // ---- h^a r^b ----
    mpz_class value_exact(std::uint64_t h, std::uint64_t r) const {
        need(PairKind::IntegerCoprime);
        mpz_class hh(static_cast<unsigned long>(h)), rr(static_cast<unsigned long>(r)), vh, vr;
        mpz_pow_ui(vh.get_mpz_t(), hh.get_mpz_t(), static_cast<unsigned long>(ia_));
        mpz_pow_ui(vr.get_mpz_t(), rr.get_mpz_t(), static_cast<unsigned long>(ib_));
        return vh * vr;
    }

    RealBall value_ball(std::uint64_t h, std::uint64_t r, mpfr_prec_t prec, Order o = Order::AB) const {
        if (o == Order::BA) std::swap(h, r);
        if (kind_ == PairKind::IntegerCoprime)
            return RealBall::from_mpz(value_exact(h, r), prec);
        mpfr_prec_t wp = prec + 16;
        RealBall vh = pow_exp_side(h, /*first=*/true, wp);
        RealBall vr = pow_exp_side(r, /*first=*/false, wp);
        return mul(vh, vr, prec);
    }

    // (h^a r^b)^(1/(a+b))
    RealBall value_root_ball(std::uint64_t h, std::uint64_t r, mpfr_prec_t prec) const {
        if (kind_ == PairKind::IntegerCoprime) {
            mpz_class n = value_exact(h, r);
            return rootn(RealBall::from_mpz(n, prec + 16), static_cast<unsigned long>(ia_ + ib_), prec);
        }
        mpfr_prec_t wp = prec + 16;
        return pow_ball(value_ball(h, r, wp), theta(wp), prec);
    }

    std::string describe() const {
        switch (kind_) {
            case PairKind::IntegerCoprime:
                return "int:" + std::to_string(ia_) + ":" + std::to_string(ib_);
            case PairKind::QuadraticSurd:
                return "surd:" + sa_.str() + ":" + sb_.str();
            default:
                return "decimal:" + da_.text() + ":" + db_.text();
        }
    }

private:
    void need(PairKind k) const {
        if (kind_ != k) throw ValidationError("ExponentPair: operation requires a different pair kind");
    }
    static mpq_class canon(mpq_class q) {
        q.canonicalize();
        return q;
    }
    // h^a (first = true) or r^b (first = false) for non-integer kinds
    RealBall pow_exp_side(std::uint64_t v, bool first, mpfr_prec_t prec) const {
        if (v == 1) return RealBall::from_si(1, prec);
        RealBall base = RealBall::from_mpz(mpz_class(static_cast<unsigned long>(v)), prec);
        if (kind_ == PairKind::QuadraticSurd) {
            const Surd& e = first ? sa_ : sb_;
            if (e.is_rational()) return pow_mpq(base, e.p(), prec);
            return pow_ball(base, e.to_ball(prec), prec);
        }
        const DecimalReal& e = first ? da_ : db_;
        return pow_ball(base, e.to_ball(prec), prec);
    }

    PairKind kind_ = PairKind::IntegerCoprime;
    long ia_ = 1, ib_ = 2;
    Surd sa_, sb_;
    DecimalReal da_, db_;
};

// ---------------------------------------------------------------------------
// parsing: "2", "sqrt(2)", "1/2+3/4*sqrt(5)", "1.41421356"

namespace detail {

inline bool parse_rational(const std::string& s, mpq_class& out) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+') return false;
    try {
        out = mpq_class(s);
        out.canonicalize();
        return true;
    } catch (...) {
        return false;
    }
}

} // namespace detail

// Parses one exponent. Integers stay integers; sqrt syntax gives surds;
// a decimal point gives a DecimalReal.
struct ParsedExponent {
    enum class Kind { Integer, SurdVal, DecimalVal } kind;
    long int_val = 0;
    Surd surd;
    DecimalReal dec;
};

inline ParsedExponent parse_exponent(const std::string& text) {
    ParsedExponent out{ParsedExponent::Kind::Integer};
    auto pos = text.find("sqrt(");
    if (pos != std::string::npos) {
        if (text.back() != ')') throw ValidationError("parse_exponent: missing ')' in '" + text + "'");
        std::string dstr = text.substr(pos + 5, text.size() - pos - 6);
        mpz_class d(dstr);
        mpq_class coeff(1), shift(0);
        std::string head = text.substr(0, pos);
        if (!head.empty()) {
            if (head.back() == '*') head.pop_back();
            // optional "p+" / "p-" prefix before the coefficient
            auto split = head.find_last_of("+-");
            if (split != std::string::npos && split > 0) {
                if (!detail::parse_rational(head.substr(0, split), shift))
                    throw ValidationError("parse_exponent: bad rational part in '" + text + "'");
                std::string c = head.substr(split);
                if (c == "+" || c == "-") c += "1";
                if (!detail::parse_rational(c, coeff))
                    throw ValidationError("parse_exponent: bad surd coefficient in '" + text + "'");
            } else if (!head.empty()) {
                if (!detail::parse_rational(head, coeff))
                    throw ValidationError("parse_exponent: bad surd coefficient in '" + text + "'");
            }
        }
        out.kind = ParsedExponent::Kind::SurdVal;
        out.surd = Surd(shift, coeff, d);
        return out;
    }
    if (text.find('.') != std::string::npos) {
        out.kind = ParsedExponent::Kind::DecimalVal;
        out.dec = DecimalReal(text);
        return out;
    }
    mpq_class q;
    if (!detail::parse_rational(text, q)) throw ValidationError("parse_exponent: cannot parse '" + text + "'");
    if (q.get_den() != 1)
        throw ValidationError("parse_exponent: rational exponents must be pre-reduced to an integer pair");
    if (!q.get_num().fits_slong_p()) throw ValidationError("parse_exponent: integer too large");
    out.int_val = q.get_num().get_si();
    return out;
}

inline ExponentPair make_pair(const std::string& a_text, const std::string& b_text) {
    ParsedExponent a = parse_exponent(a_text), b = parse_exponent(b_text);
    auto k = [](const ParsedExponent& e) { return e.kind; };
    if (k(a) == ParsedExponent::Kind::Integer && k(b) == ParsedExponent::Kind::Integer)
        return ExponentPair::integers(a.int_val, b.int_val);
    if (k(a) == ParsedExponent::Kind::DecimalVal || k(b) == ParsedExponent::Kind::DecimalVal) {
        if (k(a) == ParsedExponent::Kind::SurdVal || k(b) == ParsedExponent::Kind::SurdVal)
            throw ValidationError("make_pair: cannot mix surd and decimal exponents");
        DecimalReal da = k(a) == ParsedExponent::Kind::DecimalVal ? a.dec : DecimalReal::exact(mpq_class(a.int_val));
        DecimalReal db = k(b) == ParsedExponent::Kind::DecimalVal ? b.dec : DecimalReal::exact(mpq_class(b.int_val));
        return ExponentPair::decimals(da, db);
    }
    // at least one surd; promote integers into the same field
    mpz_class d = k(a) == ParsedExponent::Kind::SurdVal ? a.surd.d() : b.surd.d();
    Surd sa = k(a) == ParsedExponent::Kind::SurdVal ? a.surd : Surd::rational(mpq_class(a.int_val), d);
    Surd sb = k(b) == ParsedExponent::Kind::SurdVal ? b.surd : Surd::rational(mpq_class(b.int_val), d);
    return ExponentPair::surds(sa, sb);
}

} // namespace latmesh

#endif
