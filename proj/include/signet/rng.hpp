#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace signet {

/// Deterministic xoshiro256** generator. Every consumer of randomness in the
/// toolkit derives its own generator from (root seed, stream name) so that
/// adding a consumer never perturbs the draws seen by the others, and results
/// are reproducible across platforms (std:: distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) { init(seed); }

    Rng(std::uint64_t seed, std::string_view stream) {
        init(seed ^ (0x9e3779b97f4a7c15ULL * fnv1a(stream)));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Unbiased integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    bool bernoulli(double p) { return u01() < p; }

    /// Integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Kumaraswamy(a, b) variate on [0, 1]; a Beta-shaped two-parameter family
    /// with a closed-form inverse CDF.
    double kumaraswamy(double a, double b) {
        const double u = u01();
        return std::pow(1.0 - std::pow(1.0 - u, 1.0 / b), 1.0 / a);
    }

    /// Geometric number of failures (>= 0) with the given mean.
    std::uint32_t geometric(double mean) {
        if (mean <= 0.0) return 0;
        const double p = 1.0 / (1.0 + mean);
        const double k = std::floor(std::log1p(-u01()) / std::log1p(-p));
        return k < 0.0 ? 0u : static_cast<std::uint32_t>(k);
    }

    std::uint32_t binomial(std::uint32_t n, double p) {
        std::uint32_t k = 0;
        for (std::uint32_t i = 0; i < n; ++i) k += bernoulli(p) ? 1u : 0u;
        return k;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

    static std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix(std::uint64_t& state) {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    void init(std::uint64_t seed) {
        std::uint64_t st = seed;
        for (auto& s : s_) s = splitmix(st);
    }

    std::uint64_t s_[4];
};

}  // namespace signet
