#ifndef ITP_RNG_HPP
#define ITP_RNG_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace itp {

// Seedable random stream. mt19937_64 output is pinned by the standard and
// the bounded draws below are hand-rolled (rejection sampling), so a given
// seed reproduces the exact same trajectory on any platform/compiler.
//
// Every stochastic component of the suite documents its draw order in terms
// of these primitives; that order is part of the reproducibility contract.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform integer in [lo, hi], both inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(bounded(span));
    }

    // Uniform index in [0, n); n must be positive.
    std::size_t uniform_index(std::size_t n) { return static_cast<std::size_t>(bounded(n)); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    // Fisher-Yates; consumes size()-1 bounded draws.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = uniform_index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    // Unbiased bounded draw via rejection.
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0)
            return eng_();
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    std::mt19937_64 eng_;
};

} // namespace itp

#endif
