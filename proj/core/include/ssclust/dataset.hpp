#pragma once

#include <cstdint>
#include <filesystem>
#include <utility>

#include "ssclust/types.hpp"

namespace ssclust {

// Temporal mean on the original grid, zero-padded to square (extra row/column
// to bottom/right), then nearest-neighbor resized to 64x64.
FractionMap compute_fraction_map(const WaterBodyStack& stack);

// Per-frame water-pixel count normalized by its maximum, computed on the
// original non-resized frames. An all-land stack yields all zeros; the
// optional flag reports that case (a warning is also printed).
SurfaceAreaSeries compute_surface_area_series(const WaterBodyStack& stack, bool* all_land = nullptr);

// Helpers exposed for tests: symmetric zero-pad to square and the
// pixel-center nearest-neighbor resampler used by compute_fraction_map.
Matrix pad_to_square(const Matrix& m);
Matrix resize_nearest(const Matrix& m, int out_h, int out_w);

// Per class, labeled entities split as evenly as possible (odd count: extra
// to train); unlabeled entities shuffled by seed and halved (extra to train).
std::pair<Dataset, Dataset> split_dataset(const Dataset& dataset, std::uint64_t seed);

// Loads a dataset from a manifest. Each record's path (resolved against
// root_path) either names a stack container (3-d array, binary values) or a
// base `p` with modality caches `p.fm` and `p.ts` next to it.
Dataset load_dataset(const std::filesystem::path& root_path, const std::filesystem::path& manifest_path);

// Writes modality caches (`<id>.fm`, `<id>.ts`) plus a manifest into out_dir.
void save_modalities(const std::filesystem::path& out_dir, const Dataset& dataset);

// Writes one stack container per entity (`<id>.stk`) plus a manifest.
void save_stacks(const std::filesystem::path& out_dir, const std::vector<WaterBodyStack>& stacks,
                 const LabelStore& labels);

void save_labels(const std::filesystem::path& path, const LabelStore& labels);
LabelStore load_labels(const std::filesystem::path& path, int num_classes = kDefaultNumClasses);

}  // namespace ssclust
