#ifndef LATMESH_DECIMAL_REAL_HPP
#define LATMESH_DECIMAL_REAL_HPP

// A real given as a decimal string with a stated precision: the value is only
// known to lie in [center - eps, center + eps] with eps = 10^-digits / 2.
// Irrationality of such inputs is user-asserted, never certified.

#include <cctype>
#include <string>

#include <gmpxx.h>

#include "ball.hpp"
#include "errors.hpp"

namespace latmesh {

class DecimalReal {
public:
    DecimalReal() = default;

    // "3.14159" -> center 314159/100000, stated digits = fractional digits
    explicit DecimalReal(const std::string& text) : text_(text) {
        std::string s = text;
        bool negative = false;
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
        std::string ipart, fpart;
        for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) ipart += s[i];
        if (i < s.size() && s[i] == '.') {
            for (++i; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) fpart += s[i];
        }
        if (i != s.size() || ipart.empty())
            throw ValidationError("DecimalReal: cannot parse '" + text + "'");
        mpz_class num(ipart + fpart);
        mpz_class den(1);
        for (std::size_t k = 0; k < fpart.size(); ++k) den *= 10;
        center_ = mpq_class(num, den);
        center_.canonicalize();
        if (negative) center_ = -center_;
        eps_ = mpq_class(1, 2 * den);
        digits_ = fpart.size();
    }

    // exactly-known rational (zero uncertainty), e.g. an integer exponent
    // paired with a decimal one
    static DecimalReal exact(const mpq_class& v) {
        DecimalReal d;
        d.center_ = v;
        d.center_.canonicalize();
        d.eps_ = 0;
        d.digits_ = 0;
        d.text_ = v.get_str();
        return d;
    }

    const mpq_class& center() const { return center_; }
    mpq_class lo() const { return center_ - eps_; }
    mpq_class hi() const { return center_ + eps_; }
    std::size_t digits() const { return digits_; }
    const std::string& text() const { return text_; }

    RealBall to_ball(mpfr_prec_t prec) const {
        return RealBall::from_mpq_interval(lo(), hi(), prec);
    }

private:
    std::string text_;
    mpq_class center_{0};
    mpq_class eps_{0};
    std::size_t digits_ = 0;
};

} // namespace latmesh

#endif
