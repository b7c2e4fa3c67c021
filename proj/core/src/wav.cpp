#include "roomest/wav.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "roomest/errors.hpp"

namespace roomest {

namespace {

void put_u32(std::string& s, std::uint32_t v) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>((v >> 16) & 0xff));
    s.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::string& s, std::uint16_t v) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
}

std::uint32_t get_u32(const char* p) {
    return static_cast<std::uint8_t>(p[0]) | (static_cast<std::uint8_t>(p[1]) << 8) |
           (static_cast<std::uint8_t>(p[2]) << 16) |
           (static_cast<std::uint32_t>(static_cast<std::uint8_t>(p[3])) << 24);
}

std::uint16_t get_u16(const char* p) {
    return static_cast<std::uint16_t>(static_cast<std::uint8_t>(p[0]) |
                                      (static_cast<std::uint8_t>(p[1]) << 8));
}

}  // namespace

void write_wav(const std::string& path, const AudioBuffer& audio) {
    const int ch = audio.channels();
    if (ch < 1) throw DomainError("write_wav: no channels");
    const std::size_t n = audio.frames();
    for (const auto& c : audio.samples)
        if (c.size() != n) throw DomainError("write_wav: channel length mismatch");

    const std::uint32_t data_bytes = static_cast<std::uint32_t>(n * ch * 4);
    std::string hdr;
    hdr.reserve(58);
    hdr += "RIFF";
    put_u32(hdr, 4 + 26 + 12 + 8 + data_bytes);  // fmt(ext) + fact + data header
    hdr += "WAVE";
    hdr += "fmt ";
    put_u32(hdr, 18);
    put_u16(hdr, 3);  // IEEE float
    put_u16(hdr, static_cast<std::uint16_t>(ch));
    put_u32(hdr, static_cast<std::uint32_t>(audio.fs));
    put_u32(hdr, static_cast<std::uint32_t>(audio.fs) * ch * 4);
    put_u16(hdr, static_cast<std::uint16_t>(ch * 4));
    put_u16(hdr, 32);
    put_u16(hdr, 0);  // cbSize
    hdr += "fact";
    put_u32(hdr, 4);
    put_u32(hdr, static_cast<std::uint32_t>(n));
    hdr += "data";
    put_u32(hdr, data_bytes);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out.write(hdr.data(), static_cast<std::streamsize>(hdr.size()));

    std::vector<float> interleaved(static_cast<std::size_t>(ch) * n);
    for (std::size_t i = 0; i < n; ++i)
        for (int c = 0; c < ch; ++c) interleaved[i * ch + c] = audio.samples[c][i];
    out.write(reinterpret_cast<const char*>(interleaved.data()),
              static_cast<std::streamsize>(interleaved.size() * sizeof(float)));
    if (!out) throw IoError("write failure: " + path);
}

AudioBuffer read_wav(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.size() < 44 || bytes.compare(0, 4, "RIFF") != 0 || bytes.compare(8, 4, "WAVE") != 0)
        throw IoError("not a RIFF/WAVE file: " + path);

    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t rate = 0;
    std::size_t data_off = 0, data_len = 0;
    std::size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const std::string id = bytes.substr(pos, 4);
        const std::uint32_t len = get_u32(bytes.data() + pos + 4);
        const std::size_t body = pos + 8;
        if (id == "fmt ") {
            if (len < 16 || body + 16 > bytes.size()) throw IoError("truncated fmt chunk: " + path);
            format = get_u16(bytes.data() + body);
            channels = get_u16(bytes.data() + body + 2);
            rate = get_u32(bytes.data() + body + 4);
            bits = get_u16(bytes.data() + body + 14);
            if (format == 0xFFFE && len >= 40)  // WAVE_FORMAT_EXTENSIBLE: subformat GUID
                format = get_u16(bytes.data() + body + 24);
        } else if (id == "data") {
            data_off = body;
            data_len = std::min<std::size_t>(len, bytes.size() - body);
        }
        pos = body + len + (len & 1);  // chunks are word-aligned
    }
    if (channels == 0 || data_off == 0) throw IoError("missing fmt/data chunk: " + path);

    const int bytes_per = bits / 8;
    if (bytes_per == 0) throw IoError("bad bit depth: " + path);
    const std::size_t total = data_len / (static_cast<std::size_t>(bytes_per) * channels);

    AudioBuffer audio;
    audio.fs = rate;
    audio.samples.assign(channels, std::vector<float>(total));
    const char* p = bytes.data() + data_off;
    for (std::size_t i = 0; i < total; ++i) {
        for (int c = 0; c < channels; ++c) {
            const char* sp = p + (i * channels + c) * bytes_per;
            float v = 0.0f;
            if (format == 3 && bits == 32) {
                std::uint32_t u = get_u32(sp);
                std::memcpy(&v, &u, 4);
            } else if (format == 1 && bits == 16) {
                v = static_cast<float>(static_cast<std::int16_t>(get_u16(sp))) / 32768.0f;
            } else if (format == 1 && bits == 24) {
                std::int32_t u = (static_cast<std::uint8_t>(sp[0])) |
                                 (static_cast<std::uint8_t>(sp[1]) << 8) |
                                 (static_cast<std::int32_t>(static_cast<std::int8_t>(sp[2])) << 16);
                v = static_cast<float>(u) / 8388608.0f;
            } else if (format == 1 && bits == 32) {
                v = static_cast<float>(static_cast<std::int32_t>(get_u32(sp))) / 2147483648.0f;
            } else {
                throw IoError("unsupported WAV format (fmt=" + std::to_string(format) +
                              ", bits=" + std::to_string(bits) + "): " + path);
            }
            audio.samples[c][i] = v;
        }
    }
    return audio;
}

}  // namespace roomest
