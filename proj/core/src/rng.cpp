#include "roomest/rng.hpp"

#include <cmath>

namespace roomest {

std::uint64_t Rng::next_below(std::uint64_t n) {
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t limit = n * ((~0ull) / n);
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % n;
}

double Rng::normal() {
    // Box-Muller, cosine branch only.
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

void Rng::unit_sphere(double& x, double& y, double& z) {
    z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 6.283185307179586476925286766559);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    x = r * std::cos(phi);
    y = r * std::sin(phi);
}

void Rng::shuffle(std::vector<std::size_t>& idx) {
    for (std::size_t i = idx.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(next_below(i));
        std::swap(idx[i - 1], idx[j]);
    }
}

}  // namespace roomest
