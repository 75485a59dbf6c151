#ifndef LATMESH_CONTINUED_FRACTION_HPP
#define LATMESH_CONTINUED_FRACTION_HPP

// Continued-fraction convergents p/q. Quadratic surds run on exact field
// arithmetic so every partial quotient is certified; decimal inputs track the
// stated uncertainty interval and stop when the endpoints disagree on the
// next partial quotient.

#include <utility>
#include <vector>

#include "decimal_real.hpp"
#include "errors.hpp"
#include "quadratic_surd.hpp"

namespace latmesh {

struct Convergent {
    mpz_class p;
    mpz_class q;
};

inline std::vector<Convergent> cf_convergents(const Surd& alpha, std::size_t count) {
    if (alpha.is_rational())
        throw ValidationError("cf_convergents: quadratic-surd input must be irrational");
    std::vector<Convergent> out;
    out.reserve(count);
    mpz_class pm1(1), pm2(0), qm1(0), qm2(1); // p_{-1}=1, p_{-2}=0, q_{-1}=0, q_{-2}=1
    Surd x = alpha;
    for (std::size_t k = 0; k < count; ++k) {
        mpz_class a = x.floor();
        mpz_class p = a * pm1 + pm2;
        mpz_class q = a * qm1 + qm2;
        out.push_back({p, q});
        pm2 = pm1; pm1 = p;
        qm2 = qm1; qm1 = q;
        x = Surd::rational(mpq_class(1), x.d()) / (x - mpq_class(a));
    }
    return out;
}

inline std::vector<Convergent> cf_convergents(const DecimalReal& alpha, std::size_t count) {
    std::vector<Convergent> out;
    out.reserve(count);
    mpz_class pm1(1), pm2(0), qm1(0), qm2(1);
    mpq_class lo = alpha.lo(), hi = alpha.hi();
    for (std::size_t k = 0; k < count; ++k) {
        mpz_class flo, fhi;
        mpz_fdiv_q(flo.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
        mpz_fdiv_q(fhi.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
        if (flo != fhi)
            throw PrecisionExhausted("cf_convergents: stated decimal digits cannot certify partial quotient " +
                                     std::to_string(k));
        mpz_class a = flo;
        mpz_class p = a * pm1 + pm2;
        mpz_class q = a * qm1 + qm2;
        out.push_back({p, q});
        pm2 = pm1; pm1 = p;
        qm2 = qm1; qm1 = q;
        mpq_class rlo = lo - mpq_class(a), rhi = hi - mpq_class(a);
        if (rlo == 0)
            throw PrecisionExhausted("cf_convergents: interval endpoint hit an exact rational");
        // 1/x reverses the interval
        lo = 1 / rhi;
        hi = 1 / rlo;
    }
    return out;
}

} // namespace latmesh

#endif
