#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "roomest/rng.hpp"

namespace roomest {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

/// The six octave bands used throughout: 125 Hz .. 4 kHz, each centre
/// double the previous.
namespace bands {
inline constexpr int kCount = 6;
inline constexpr std::array<double, kCount> kCenters = {125.0, 250.0, 500.0, 1000.0, 2000.0, 4000.0};
}  // namespace bands

/// Shoebox surface indexing. Areas depend on (L, W, H) = (length, width,
/// height) with the room spanning [0,L] x [0,W] x [0,H].
enum Surface : int {
    kWallX0 = 0,  // x = 0 plane, area W*H
    kWallX1 = 1,  // x = L plane, area W*H
    kWallY0 = 2,  // y = 0 plane, area L*H
    kWallY1 = 3,  // y = W plane, area L*H
    kFloor = 4,   // z = 0 plane, area L*W
    kCeiling = 5  // z = H plane, area L*W
};
inline constexpr int kSurfaces = 6;

/// Shoebox room: geometry, per-surface per-band absorption, one scattering
/// coefficient shared by all surfaces and bands, and the seed it was
/// sampled from.
struct RoomSpec {
    std::uint64_t id = 0;
    double length = 0.0, width = 0.0, height = 0.0;
    /// absorption[surface][band], each in (0, 1].
    std::array<std::array<double, bands::kCount>, kSurfaces> absorption{};
    double scattering = 0.0;
    std::uint64_t seed = 0;

    double volume() const { return length * width * height; }
    double surface_area() const {
        return 2.0 * (length * width + length * height + width * height);
    }
    std::array<double, kSurfaces> surface_areas() const {
        const double wh = width * height, lh = length * height, lw = length * width;
        return {wh, wh, lh, lh, lw, lw};
    }
    /// True if p lies strictly inside, at least margin from every surface.
    bool contains(const Vec3& p, double margin = 0.0) const {
        return p.x >= margin && p.x <= length - margin && p.y >= margin &&
               p.y <= width - margin && p.z >= margin && p.z <= height - margin;
    }
};

/// The 14 ground-truth targets of one room, in the fixed serialization
/// order [abar(125)..abar(4k), rt60(125)..rt60(4k), S, V].
struct RoomAnnotation {
    std::uint64_t room_id = 0;
    std::array<double, bands::kCount> mean_absorption{};
    std::array<double, bands::kCount> rt60{};
    double surface = 0.0;
    double volume = 0.0;

    static constexpr int kTargets = 14;
    std::array<double, kTargets> targets() const;
    static RoomAnnotation from_targets(std::uint64_t room_id, const std::array<double, kTargets>& t);
};

/// Sampling ranges for the reflectivity-biased absorption draw: with
/// probability reflective_prob a surface gets a frequency-independent
/// profile below reflective_threshold, otherwise per-band uniform draws
/// from [absorbent_lo, absorbent_hi].
struct AbsorptionRanges {
    double absorbent_lo = 0.12;
    double absorbent_hi = 0.70;
    double reflective_min = 0.01;
    double reflective_threshold = 0.12;
    double reflective_prob = 0.5;

    void validate() const;  // throws ConfigError on out-of-range bounds
};

/// Geometric sampling ranges for rooms.
struct RoomRanges {
    double length_lo = 3.0, length_hi = 10.0;
    double width_lo = 3.0, width_hi = 10.0;
    double height_lo = 2.5, height_hi = 4.0;
    double scattering_lo = 0.2, scattering_hi = 1.0;
};

/// Draws the 6x6 absorption matrix with the reflectivity-biased strategy.
std::array<std::array<double, bands::kCount>, kSurfaces> sample_absorption(
    Rng& rng, const AbsorptionRanges& ranges);

/// Draws a full room: dimensions, scattering, absorption.
RoomSpec sample_room(Rng& rng, const AbsorptionRanges& ranges, const RoomRanges& geo = {});

/// Area-weighted mean of values, sum(v_i * a_i) / sum(a_i).
double area_weighted_mean(const std::vector<double>& values, const std::vector<double>& areas);

/// Area-weighted mean absorption abar(b) of a room in one band.
double mean_absorption(const RoomSpec& room, int band);

/// Sabine's relation rt60 = 0.16 * V / (abar * S). Throws DomainError for
/// non-positive inputs (the relation blows up as abar -> 0).
double sabine_rt60(double volume_m3, double surface_m2, double mean_abs);

/// Assembles the 14-target annotation from room geometry and measured
/// per-band reverberation times.
RoomAnnotation annotate_room(const RoomSpec& room, const std::array<double, bands::kCount>& measured_rt60);

/// One JSON line per room: {"id", "dims", "alpha", "scattering", "seed"}.
std::string room_to_json(const RoomSpec& room);
RoomSpec room_from_json(const std::string& line);
void write_rooms_jsonl(const std::string& path, const std::vector<RoomSpec>& rooms);
std::vector<RoomSpec> read_rooms_jsonl(const std::string& path);

}  // namespace roomest
