#include <mutex>
#include <vector>

#include <rademacher/specfun/specfun.hpp>

namespace rademacher::specfun
{

namespace
{

std::mutex cache_mutex;
std::vector<mpq_class> cache{mpq_class(1)};

} // namespace

mpq_class bernoulli(unsigned n)
{
    std::lock_guard lock(cache_mutex);
    // B_m = -1/(m+1) sum_{k<m} binom(m+1, k) B_k
    while (cache.size() <= n) {
        const unsigned m = static_cast<unsigned>(cache.size());
        mpq_class acc = 0;
        mpz_class binom = 1; // binom(m+1, 0)
        for (unsigned k = 0; k < m; ++k) {
            if (sgn(cache[k]) != 0) {
                acc += binom * cache[k];
            }
            binom *= m + 1 - k;
            binom /= k + 1;
        }
        mpq_class b = -acc / (m + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[n];
}

} // namespace rademacher::specfun
