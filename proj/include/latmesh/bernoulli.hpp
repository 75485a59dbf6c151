#ifndef LATMESH_BERNOULLI_HPP
#define LATMESH_BERNOULLI_HPP

#include <mutex>
#include <vector>

#include <gmpxx.h>

namespace latmesh {
namespace detail {

// Exact Bernoulli numbers (B_1 = -1/2 convention), grown on demand.
// B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j
class BernoulliCache {
public:
    static mpq_class get(unsigned long n) {
        static BernoulliCache inst;
        std::lock_guard<std::mutex> lk(inst.mu_);
        inst.grow(n);
        return inst.b_[n];
    }

private:
    BernoulliCache() { b_ = {mpq_class(1)}; }

    void grow(unsigned long n) {
        while (b_.size() <= n) {
            unsigned long m = b_.size();
            mpq_class acc(0);
            mpz_class binom(1); // C(m+1, 0)
            for (unsigned long j = 0; j < m; ++j) {
                acc += mpq_class(binom) * b_[j];
                // C(m+1, j+1) = C(m+1, j) * (m+1-j) / (j+1)
                binom *= (m + 1 - j);
                binom /= (j + 1);
            }
            mpq_class bm = -acc / mpq_class(m + 1);
            bm.canonicalize();
            b_.push_back(bm);
        }
    }

    std::mutex mu_;
    std::vector<mpq_class> b_;
};

} // namespace detail
} // namespace latmesh

#endif
