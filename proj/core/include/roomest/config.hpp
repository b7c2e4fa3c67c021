#pragma once

#include <cstdint>
#include <string>

#include "roomest/geometry.hpp"

namespace roomest {

/// Simulator parameters shared by all RIR synthesis calls.
struct SimConfig {
    int max_order = 10;       // image-source reflection order
    int n_rays = 2000;        // diffuse-rain ray count
    double fs = 48000.0;      // simulation sample rate
    double speed_of_sound = 343.0;
    double rir_cap_s = 5.0;   // hard cap on RIR length
    double min_surface_distance = 0.30;
    double aperture = 0.225;  // two-microphone array width
    double rain_receiver_radius = 0.1;  // near-field clamp for diffuse deposits
};

/// Dataset generation parameters.
struct DatasetConfig {
    int rooms = 200;
    int positions = 5;
    double mix_seconds = 3.0;
    double fs_mix = 16000.0;
    double snr_static_lo = 70.0, snr_static_hi = 90.0;   // dB
    double snr_diffuse_lo = 30.0, snr_diffuse_hi = 60.0; // dB
    double babble_gate_ms = 50.0;  // late-part gate after direct arrival
    std::string corpus_dir;        // empty => synthetic speech mode
    bool synthetic_speech = true;
    double train_fraction = 0.8, val_fraction = 0.1;  // remainder is test
};

/// Network architecture and training hyper-parameters.
struct TrainConfig {
    int conv_channels = 8;
    int conv_hidden = 16;
    int kernel = 11;
    int sc_pool_bins = 104;
    int ic_pool_bins = 52;
    int dense1 = 96;
    int dense2 = 48;
    bool use_ic = true;
    double dropout_conv = 0.2;
    double dropout_dense = 0.4;
    double var_floor = 1e-6;
    double lr = 1e-4;
    double beta1 = 0.9, beta2 = 0.999, adam_eps = 1e-8;
    int batch_size = 120;
    int max_epochs = 150;
    int patience = 15;
};

struct RunConfig {
    std::uint64_t master_seed = 1234;
    int threads = 1;
    SimConfig sim;
    DatasetConfig dataset;
    TrainConfig train;
    AbsorptionRanges absorption;
    RoomRanges room_ranges;

    void validate() const;  // throws ConfigError
};

/// Parses a `key = value` config file ('#' starts a comment). Unknown keys
/// are rejected so typos fail loudly. Returns defaults overlaid with the
/// file contents.
RunConfig load_config(const std::string& path);

/// Applies one key=value pair to the config (same keys as the file format).
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

}  // namespace roomest
