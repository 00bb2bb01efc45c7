#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace ssclust {

// Dense-array container: magic "SSCLUST1", u32 ndim, u64 dims[ndim],
// then row-major float32 payload (little-endian).
inline constexpr char kArrayMagic[8] = {'S', 'S', 'C', 'L', 'U', 'S', 'T', '1'};

struct DenseArray {
    std::vector<std::uint64_t> dims;
    std::vector<float> data;

    std::size_t numel() const {
        std::size_t n = 1;
        for (auto d : dims) n *= static_cast<std::size_t>(d);
        return n;
    }
};

void save_array(const std::filesystem::path& path, const DenseArray& arr);
DenseArray load_array(const std::filesystem::path& path);

// One manifest record: entity id, a path (stack file or modality-cache base)
// and an optional class label ("_" when unlabeled).
struct ManifestEntry {
    std::string entity_id;
    std::string path;
    std::string label;  // empty = unlabeled
};

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const std::vector<ManifestEntry>& entries);

}  // namespace ssclust
