#include "roomest/geometry.hpp"

#include <fstream>

#include "json.hpp"
#include "roomest/errors.hpp"

namespace roomest {

std::array<double, RoomAnnotation::kTargets> RoomAnnotation::targets() const {
    std::array<double, kTargets> t{};
    for (int b = 0; b < bands::kCount; ++b) t[b] = mean_absorption[b];
    for (int b = 0; b < bands::kCount; ++b) t[bands::kCount + b] = rt60[b];
    t[12] = surface;
    t[13] = volume;
    return t;
}

RoomAnnotation RoomAnnotation::from_targets(std::uint64_t room_id,
                                            const std::array<double, kTargets>& t) {
    RoomAnnotation a;
    a.room_id = room_id;
    for (int b = 0; b < bands::kCount; ++b) a.mean_absorption[b] = t[b];
    for (int b = 0; b < bands::kCount; ++b) a.rt60[b] = t[bands::kCount + b];
    a.surface = t[12];
    a.volume = t[13];
    return a;
}

void AbsorptionRanges::validate() const {
    if (!(absorbent_lo > 0.0 && absorbent_lo < absorbent_hi && absorbent_hi < 1.0))
        throw ConfigError("absorbent range must satisfy 0 < lo < hi < 1");
    if (!(reflective_min > 0.0 && reflective_min < reflective_threshold))
        throw ConfigError("reflective range must satisfy 0 < min < threshold");
    if (!(reflective_prob >= 0.0 && reflective_prob <= 1.0))
        throw ConfigError("reflective probability must be in [0,1]");
}

std::array<std::array<double, bands::kCount>, kSurfaces> sample_absorption(
    Rng& rng, const AbsorptionRanges& ranges) {
    ranges.validate();
    std::array<std::array<double, bands::kCount>, kSurfaces> alpha{};
    for (int i = 0; i < kSurfaces; ++i) {
        if (rng.bernoulli(ranges.reflective_prob)) {
            // Frequency-independent reflective profile, below the threshold.
            const double a = rng.uniform(ranges.reflective_min, ranges.reflective_threshold);
            for (int b = 0; b < bands::kCount; ++b) alpha[i][b] = a;
        } else {
            for (int b = 0; b < bands::kCount; ++b)
                alpha[i][b] = rng.uniform(ranges.absorbent_lo, ranges.absorbent_hi);
        }
    }
    return alpha;
}

RoomSpec sample_room(Rng& rng, const AbsorptionRanges& ranges, const RoomRanges& geo) {
    RoomSpec room;
    room.length = rng.uniform(geo.length_lo, geo.length_hi);
    room.width = rng.uniform(geo.width_lo, geo.width_hi);
    room.height = rng.uniform(geo.height_lo, geo.height_hi);
    room.scattering = rng.uniform(geo.scattering_lo, geo.scattering_hi);
    room.absorption = sample_absorption(rng, ranges);
    return room;
}

double area_weighted_mean(const std::vector<double>& values, const std::vector<double>& areas) {
    if (values.size() != areas.size() || values.empty())
        throw DomainError("area_weighted_mean: size mismatch or empty input");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        num += values[i] * areas[i];
        den += areas[i];
    }
    if (den <= 0.0) throw DomainError("area_weighted_mean: non-positive total area");
    return num / den;
}

double mean_absorption(const RoomSpec& room, int band) {
    if (band < 0 || band >= bands::kCount) throw DomainError("mean_absorption: band out of range");
    const auto areas = room.surface_areas();
    double num = 0.0;
    for (int i = 0; i < kSurfaces; ++i) num += room.absorption[i][band] * areas[i];
    return num / room.surface_area();
}

double sabine_rt60(double volume_m3, double surface_m2, double mean_abs) {
    if (volume_m3 <= 0.0 || surface_m2 <= 0.0)
        throw DomainError("sabine_rt60: volume and surface must be positive");
    if (mean_abs <= 0.0 || mean_abs > 1.0)
        throw DomainError("sabine_rt60: mean absorption must be in (0,1]");
    return 0.16 * volume_m3 / (mean_abs * surface_m2);
}

RoomAnnotation annotate_room(const RoomSpec& room,
                             const std::array<double, bands::kCount>& measured_rt60) {
    RoomAnnotation a;
    a.room_id = room.id;
    for (int b = 0; b < bands::kCount; ++b) {
        if (!(measured_rt60[b] > 0.0) || !std::isfinite(measured_rt60[b]))
            throw DomainError("annotate_room: missing or invalid rt60 in band " + std::to_string(b));
        a.mean_absorption[b] = mean_absorption(room, b);
        a.rt60[b] = measured_rt60[b];
    }
    a.surface = room.surface_area();
    a.volume = room.volume();
    return a;
}

std::string room_to_json(const RoomSpec& room) {
    nlohmann::json j;
    j["id"] = room.id;
    j["dims"] = {room.length, room.width, room.height};
    auto alpha = nlohmann::json::array();
    for (int i = 0; i < kSurfaces; ++i) {
        auto row = nlohmann::json::array();
        for (int b = 0; b < bands::kCount; ++b) row.push_back(room.absorption[i][b]);
        alpha.push_back(row);
    }
    j["alpha"] = alpha;
    j["scattering"] = room.scattering;
    j["seed"] = room.seed;
    return j.dump();
}

RoomSpec room_from_json(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("room record parse failure: ") + e.what());
    }
    RoomSpec room;
    try {
        room.id = j.at("id").get<std::uint64_t>();
        room.length = j.at("dims").at(0).get<double>();
        room.width = j.at("dims").at(1).get<double>();
        room.height = j.at("dims").at(2).get<double>();
        for (int i = 0; i < kSurfaces; ++i)
            for (int b = 0; b < bands::kCount; ++b)
                room.absorption[i][b] = j.at("alpha").at(i).at(b).get<double>();
        room.scattering = j.at("scattering").get<double>();
        room.seed = j.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("room record missing field: ") + e.what());
    }
    return room;
}

void write_rooms_jsonl(const std::string& path, const std::vector<RoomSpec>& rooms) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    for (const auto& r : rooms) out << room_to_json(r) << "\n";
    if (!out) throw IoError("write failure: " + path);
}

std::vector<RoomSpec> read_rooms_jsonl(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::vector<RoomSpec> rooms;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        rooms.push_back(room_from_json(line));
    }
    return rooms;
}

}  // namespace roomest
