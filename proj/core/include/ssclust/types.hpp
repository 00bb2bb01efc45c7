#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssclust {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

constexpr int kFractionMapSize = 64;
constexpr int kDefaultNumClasses = 4;

inline const std::vector<std::string>& default_class_names() {
    static const std::vector<std::string> names = {"Farm", "River", "StableLake", "SeasonalLake"};
    return names;
}

// Raw per-entity spatiotemporal stack: T binary land/water maps of H x W.
// Frames are stored row-major, frame-major; every value must be 0 or 1.
struct WaterBodyStack {
    std::string entity_id;
    int T = 0;
    int H = 0;
    int W = 0;
    std::vector<std::uint8_t> frames;  // T*H*W values in {0,1}

    std::uint8_t at(int t, int y, int x) const {
        return frames[static_cast<std::size_t>(t) * H * W + static_cast<std::size_t>(y) * W + x];
    }
    std::uint8_t& at(int t, int y, int x) {
        return frames[static_cast<std::size_t>(t) * H * W + static_cast<std::size_t>(y) * W + x];
    }
    void validate() const;
};

// Spatial modality: 64x64 per-pixel temporal water fraction in [0,1].
struct FractionMap {
    Matrix pixels;  // kFractionMapSize x kFractionMapSize, row = y
};

// Temporal modality: per-month water area normalized by its maximum, in [0,1].
struct SurfaceAreaSeries {
    Vector values;
};

enum class Provenance { seed, augmented };

// Partial class assignments over entity ids, with label provenance.
class LabelStore {
public:
    LabelStore() : LabelStore(kDefaultNumClasses) {}
    explicit LabelStore(int num_classes, std::vector<std::string> class_names = {});

    int num_classes() const { return num_classes_; }
    const std::vector<std::string>& class_names() const { return class_names_; }
    int class_index(const std::string& name) const;

    void set(const std::string& entity_id, int cls, Provenance prov = Provenance::seed);
    bool contains(const std::string& entity_id) const { return assignments_.count(entity_id) > 0; }
    int label_of(const std::string& entity_id) const;
    std::optional<int> try_label_of(const std::string& entity_id) const;
    Provenance provenance_of(const std::string& entity_id) const;

    std::size_t size() const { return assignments_.size(); }
    bool empty() const { return assignments_.empty(); }

    // Sorted by entity id for deterministic iteration.
    const std::map<std::string, int>& assignments() const { return assignments_; }
    std::vector<std::string> ids_with_provenance(Provenance prov) const;
    std::vector<int> class_counts() const;

private:
    int num_classes_;
    std::vector<std::string> class_names_;
    std::map<std::string, int> assignments_;
    std::map<std::string, Provenance> provenance_;
};

struct EntityRecord {
    std::string id;
    FractionMap fm;
    SurfaceAreaSeries sas;
};

// A materialized two-modality dataset plus (possibly partial) labels.
struct Dataset {
    std::vector<EntityRecord> entities;
    LabelStore labels;
    int series_len = 0;  // dataset-level T; all series share it

    const EntityRecord& entity(std::size_t i) const { return entities[i]; }
    std::size_t size() const { return entities.size(); }
    int find_index(const std::string& id) const;  // -1 if absent
    void validate() const;
};

}  // namespace ssclust
