#include "ssclust/types.hpp"

#include <algorithm>
#include <unordered_set>

namespace ssclust {

void WaterBodyStack::validate() const {
    if (T < 1 || H < 1 || W < 1) {
        throw std::invalid_argument("stack '" + entity_id + "': T, H, W must all be >= 1 (got T=" +
                                    std::to_string(T) + ", H=" + std::to_string(H) + ", W=" + std::to_string(W) + ")");
    }
    if (frames.size() != static_cast<std::size_t>(T) * H * W) {
        throw std::invalid_argument("stack '" + entity_id + "': frame buffer size does not match T*H*W");
    }
    for (std::uint8_t v : frames) {
        if (v != 0 && v != 1) {
            throw std::invalid_argument("stack '" + entity_id + "': non-binary pixel value " + std::to_string(int(v)));
        }
    }
}

LabelStore::LabelStore(int num_classes, std::vector<std::string> class_names)
    : num_classes_(num_classes), class_names_(std::move(class_names)) {
    if (num_classes_ <= 0) throw std::invalid_argument("LabelStore: num_classes must be positive");
    if (class_names_.empty()) {
        if (num_classes_ == kDefaultNumClasses) {
            class_names_ = default_class_names();
        } else {
            for (int c = 0; c < num_classes_; ++c) class_names_.push_back("class" + std::to_string(c));
        }
    }
    if (static_cast<int>(class_names_.size()) != num_classes_) {
        throw std::invalid_argument("LabelStore: class_names size does not match num_classes");
    }
}

int LabelStore::class_index(const std::string& name) const {
    for (int c = 0; c < num_classes_; ++c) {
        if (class_names_[c] == name) return c;
    }
    // Also accept a plain class index.
    try {
        std::size_t pos = 0;
        int v = std::stoi(name, &pos);
        if (pos == name.size() && v >= 0 && v < num_classes_) return v;
    } catch (...) {
    }
    throw std::invalid_argument("LabelStore: unknown class '" + name + "'");
}

void LabelStore::set(const std::string& entity_id, int cls, Provenance prov) {
    if (cls < 0 || cls >= num_classes_) {
        throw std::invalid_argument("LabelStore: class index " + std::to_string(cls) + " out of range for '" +
                                    entity_id + "'");
    }
    assignments_[entity_id] = cls;
    provenance_[entity_id] = prov;
}

int LabelStore::label_of(const std::string& entity_id) const {
    auto it = assignments_.find(entity_id);
    if (it == assignments_.end()) throw std::out_of_range("LabelStore: no label for '" + entity_id + "'");
    return it->second;
}

std::optional<int> LabelStore::try_label_of(const std::string& entity_id) const {
    auto it = assignments_.find(entity_id);
    if (it == assignments_.end()) return std::nullopt;
    return it->second;
}

Provenance LabelStore::provenance_of(const std::string& entity_id) const {
    auto it = provenance_.find(entity_id);
    if (it == provenance_.end()) throw std::out_of_range("LabelStore: no label for '" + entity_id + "'");
    return it->second;
}

std::vector<std::string> LabelStore::ids_with_provenance(Provenance prov) const {
    std::vector<std::string> out;
    for (const auto& [id, p] : provenance_) {
        if (p == prov) out.push_back(id);
    }
    return out;
}

std::vector<int> LabelStore::class_counts() const {
    std::vector<int> counts(num_classes_, 0);
    for (const auto& [id, cls] : assignments_) counts[cls]++;
    return counts;
}

int Dataset::find_index(const std::string& id) const {
    for (std::size_t i = 0; i < entities.size(); ++i) {
        if (entities[i].id == id) return static_cast<int>(i);
    }
    return -1;
}

void Dataset::validate() const {
    std::unordered_set<std::string> ids;
    for (const auto& e : entities) {
        if (!ids.insert(e.id).second) throw std::invalid_argument("Dataset: duplicate entity id '" + e.id + "'");
        if (e.fm.pixels.rows() != kFractionMapSize || e.fm.pixels.cols() != kFractionMapSize) {
            throw std::invalid_argument("Dataset: entity '" + e.id + "' fraction map is not 64x64");
        }
        if (series_len > 0 && e.sas.values.size() != series_len) {
            throw std::invalid_argument("Dataset: entity '" + e.id + "' series length mismatch");
        }
    }
    for (const auto& [id, cls] : labels.assignments()) {
        if (ids.find(id) == ids.end()) {
            throw std::invalid_argument("Dataset: label references unknown entity '" + id + "'");
        }
    }
}

}  // namespace ssclust
