#pragma once

#include <array>
#include <vector>

namespace roomest {

/// Second-order section, direct form II transposed.
struct Biquad {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;  // numerator
    double a1 = 0.0, a2 = 0.0;            // denominator (a0 == 1)
};

/// Cascade of biquad sections.
struct SosFilter {
    std::vector<Biquad> sections;

    std::vector<double> apply(const std::vector<double>& x) const;
    /// Forward-backward (zero-phase) application with zero padding of
    /// `pad` samples on both ends to absorb edge transients.
    std::vector<double> apply_zero_phase(const std::vector<double>& x, int pad) const;
    /// Magnitude response at normalized angular frequency w (rad/sample).
    double magnitude(double w) const;
};

/// Butterworth band-pass of total order 2*prototype_order (two biquads for
/// the default prototype_order=2), gain-normalized at the band centre.
SosFilter butter_bandpass(double lo_hz, double hi_hz, double fs, int prototype_order = 2);

/// Octave band-pass filter around one of the six band centres, applied
/// forward-backward (zero phase). Band edges are center/sqrt(2) and
/// center*sqrt(2); throws DomainError if the upper edge reaches Nyquist.
std::vector<double> octave_filter(const std::vector<double>& x, double center_hz, double fs);

/// Windowed-sinc (Blackman) low-pass FIR with unit DC gain; odd tap count.
std::vector<double> design_lowpass_fir(int taps, double cutoff_hz, double fs);

/// 48 kHz -> 16 kHz: anti-alias low-pass at 7.2 kHz followed by 3:1
/// decimation, group-delay compensated. Output length ceil(N/3).
std::vector<double> resample_48k_to_16k(const std::vector<double>& x, double fs_in);

}  // namespace roomest
