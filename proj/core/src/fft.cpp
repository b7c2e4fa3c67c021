#include "roomest/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "roomest/errors.hpp"

namespace roomest {

namespace {

// FFTW planning is not thread-safe; execution of independent plans is.
// Plans use FFTW_ESTIMATE|FFTW_UNALIGNED so the chosen codelets (and hence
// the rounding) do not depend on timing or buffer alignment.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

std::vector<std::complex<double>> rfft(const std::vector<double>& x, int n) {
    if (n <= 0) throw DomainError("rfft: size must be positive");
    std::vector<double> in(static_cast<std::size_t>(n), 0.0);
    const std::size_t copy = std::min<std::size_t>(x.size(), static_cast<std::size_t>(n));
    std::copy(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(copy), in.begin());
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n / 2 + 1));

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_r2c_1d(n, in.data(), reinterpret_cast<fftw_complex*>(out.data()),
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

std::vector<double> irfft(const std::vector<std::complex<double>>& spec, int n) {
    if (n <= 0) throw DomainError("irfft: size must be positive");
    if (spec.size() != static_cast<std::size_t>(n / 2 + 1))
        throw DomainError("irfft: spectrum length does not match n");
    std::vector<std::complex<double>> in(spec);  // FFTW c2r destroys its input
    std::vector<double> out(static_cast<std::size_t>(n));

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(in.data()), out.data(),
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    const double scale = 1.0 / n;
    for (auto& v : out) v *= scale;
    return out;
}

std::vector<double> fft_convolve(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw DomainError("fft_convolve: empty input");
    const std::size_t out_len = a.size() + b.size() - 1;
    std::size_t n = 1;
    while (n < out_len) n <<= 1;
    auto fa = rfft(a, static_cast<int>(n));
    const auto fb = rfft(b, static_cast<int>(n));
    for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
    auto full = irfft(fa, static_cast<int>(n));
    full.resize(out_len);
    return full;
}

std::vector<double> direct_convolve(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw DomainError("direct_convolve: empty input");
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace roomest
