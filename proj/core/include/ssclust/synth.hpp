#pragma once

#include <cstdint>

#include "ssclust/types.hpp"

namespace ssclust {

// Desk-scale generator. Classes are separable only jointly: stable and
// seasonal lakes share the blob shape family (they differ in dynamics), while
// rivers and farms share the level-process family (they differ in shape).
struct SynthConfig {
    int per_class = 100;       // entities per class (4 classes)
    int grid_h = 48;           // raw stack grid, deliberately non-square
    int grid_w = 40;
    int series_len = 36;       // months per stack
    int season_period = 12;
    double flip_prob = 0.003;  // per-pixel per-frame binary noise
    double level_noise = 0.04; // white noise on the fill-level process

    void validate() const;
};

// Deterministic in (config, seed); raw stacks are synthesized per entity and
// run through the same modality extraction as loaded data.
Dataset generate_synthetic(const SynthConfig& config, std::uint64_t seed);

// Same templates, but returns raw stacks (for exercising preprocess / I/O).
std::vector<WaterBodyStack> generate_synthetic_stacks(const SynthConfig& config, std::uint64_t seed,
                                                      LabelStore* labels_out);

}  // namespace ssclust
