#pragma once

#include <string>
#include <vector>

namespace roomest {

/// Multichannel audio buffer, channel-major (samples[ch][n]), float32
/// payload matching the on-disk format.
struct AudioBuffer {
    double fs = 0.0;
    std::vector<std::vector<float>> samples;

    int channels() const { return static_cast<int>(samples.size()); }
    std::size_t frames() const { return samples.empty() ? 0 : samples[0].size(); }
};

/// Writes an IEEE float32 WAV file.
void write_wav(const std::string& path, const AudioBuffer& audio);

/// Reads PCM16, PCM24, PCM32 or IEEE float32 WAV (values scaled to [-1,1]
/// for integer formats).
AudioBuffer read_wav(const std::string& path);

}  // namespace roomest
