#include "ssclust/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <random>

#include "ssclust/array_io.hpp"
#include "ssclust/rng.hpp"

namespace ssclust {

Matrix pad_to_square(const Matrix& m) {
    const int h = static_cast<int>(m.rows());
    const int w = static_cast<int>(m.cols());
    const int side = std::max(h, w);
    if (h == w) return m;
    Matrix out = Matrix::Zero(side, side);
    // Symmetric split; the extra row/column goes to bottom/right.
    const int top = (side - h) / 2;
    const int left = (side - w) / 2;
    out.block(top, left, h, w) = m;
    return out;
}

Matrix resize_nearest(const Matrix& m, int out_h, int out_w) {
    const int in_h = static_cast<int>(m.rows());
    const int in_w = static_cast<int>(m.cols());
    Matrix out(out_h, out_w);
    const double sy = static_cast<double>(in_h) / out_h;
    const double sx = static_cast<double>(in_w) / out_w;
    for (int y = 0; y < out_h; ++y) {
        // Pixel-center mapping, clamped to the source grid.
        int src_y = std::min(static_cast<int>((y + 0.5) * sy), in_h - 1);
        for (int x = 0; x < out_w; ++x) {
            int src_x = std::min(static_cast<int>((x + 0.5) * sx), in_w - 1);
            out(y, x) = m(src_y, src_x);
        }
    }
    return out;
}

FractionMap compute_fraction_map(const WaterBodyStack& stack) {
    stack.validate();
    Matrix mean = Matrix::Zero(stack.H, stack.W);
    for (int t = 0; t < stack.T; ++t) {
        for (int y = 0; y < stack.H; ++y) {
            for (int x = 0; x < stack.W; ++x) {
                mean(y, x) += stack.at(t, y, x);
            }
        }
    }
    mean /= static_cast<double>(stack.T);
    FractionMap fm;
    fm.pixels = resize_nearest(pad_to_square(mean), kFractionMapSize, kFractionMapSize);
    return fm;
}

SurfaceAreaSeries compute_surface_area_series(const WaterBodyStack& stack, bool* all_land) {
    stack.validate();
    Vector counts(stack.T);
    for (int t = 0; t < stack.T; ++t) {
        long c = 0;
        const std::uint8_t* frame = stack.frames.data() + static_cast<std::size_t>(t) * stack.H * stack.W;
        for (int i = 0; i < stack.H * stack.W; ++i) c += frame[i];
        counts[t] = static_cast<double>(c);
    }
    const double maxc = counts.maxCoeff();
    if (all_land) *all_land = (maxc == 0.0);
    SurfaceAreaSeries sas;
    if (maxc == 0.0) {
        std::cerr << "[ssclust] warning: stack '" << stack.entity_id
                  << "' contains no water pixels; emitting an all-zero series\n";
        sas.values = Vector::Zero(stack.T);
    } else {
        sas.values = counts / maxc;
    }
    return sas;
}

namespace {

Dataset subset_by_index(const Dataset& src, const std::vector<std::size_t>& idx) {
    Dataset out;
    out.series_len = src.series_len;
    out.labels = LabelStore(src.labels.num_classes(), src.labels.class_names());
    for (std::size_t i : idx) {
        out.entities.push_back(src.entities[i]);
        const auto& id = src.entities[i].id;
        if (auto cls = src.labels.try_label_of(id)) {
            out.labels.set(id, *cls, src.labels.provenance_of(id));
        }
    }
    return out;
}

}  // namespace

std::pair<Dataset, Dataset> split_dataset(const Dataset& dataset, std::uint64_t seed) {
    const int C = dataset.labels.num_classes();
    std::vector<std::vector<std::size_t>> per_class(C);
    std::vector<std::size_t> unlabeled;
    for (std::size_t i = 0; i < dataset.entities.size(); ++i) {
        if (auto cls = dataset.labels.try_label_of(dataset.entities[i].id)) {
            per_class[*cls].push_back(i);
        } else {
            unlabeled.push_back(i);
        }
    }

    std::vector<std::size_t> train_idx, test_idx;
    for (int c = 0; c < C; ++c) {
        auto rng = make_rng(seed, {0xC1A55u, static_cast<std::uint64_t>(c)});
        auto& pool = per_class[c];
        std::shuffle(pool.begin(), pool.end(), rng);
        const std::size_t n_train = (pool.size() + 1) / 2;  // odd count: extra to train
        for (std::size_t i = 0; i < pool.size(); ++i) {
            (i < n_train ? train_idx : test_idx).push_back(pool[i]);
        }
    }
    {
        auto rng = make_rng(seed, {0x0FFBEu});
        std::shuffle(unlabeled.begin(), unlabeled.end(), rng);
        const std::size_t n_train = (unlabeled.size() + 1) / 2;
        for (std::size_t i = 0; i < unlabeled.size(); ++i) {
            (i < n_train ? train_idx : test_idx).push_back(unlabeled[i]);
        }
    }
    std::sort(train_idx.begin(), train_idx.end());
    std::sort(test_idx.begin(), test_idx.end());
    return {subset_by_index(dataset, train_idx), subset_by_index(dataset, test_idx)};
}

namespace {

WaterBodyStack stack_from_array(const std::string& id, const std::filesystem::path& path) {
    DenseArray arr = load_array(path);
    if (arr.dims.size() != 3) {
        throw std::runtime_error(path.string() + ": expected a 3-d stack array, got " +
                                 std::to_string(arr.dims.size()) + "-d");
    }
    WaterBodyStack st;
    st.entity_id = id;
    st.T = static_cast<int>(arr.dims[0]);
    st.H = static_cast<int>(arr.dims[1]);
    st.W = static_cast<int>(arr.dims[2]);
    st.frames.resize(arr.data.size());
    for (std::size_t i = 0; i < arr.data.size(); ++i) {
        float v = arr.data[i];
        if (v != 0.0f && v != 1.0f) {
            throw std::runtime_error(path.string() + ": non-binary frame value " + std::to_string(v));
        }
        st.frames[i] = static_cast<std::uint8_t>(v);
    }
    st.validate();
    return st;
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& root_path, const std::filesystem::path& manifest_path) {
    auto entries = read_manifest(manifest_path);
    Dataset ds;
    ds.labels = LabelStore(kDefaultNumClasses);
    for (const auto& e : entries) {
        const auto base = root_path / e.path;
        EntityRecord rec;
        rec.id = e.entity_id;
        if (std::filesystem::exists(base)) {
            WaterBodyStack st = stack_from_array(e.entity_id, base);
            rec.fm = compute_fraction_map(st);
            rec.sas = compute_surface_area_series(st);
        } else {
            const auto fm_path = base.string() + ".fm";
            const auto ts_path = base.string() + ".ts";
            if (!std::filesystem::exists(fm_path) || !std::filesystem::exists(ts_path)) {
                throw std::runtime_error("manifest entry '" + e.entity_id + "': neither stack file '" +
                                         base.string() + "' nor modality caches '" + fm_path + "' / '" + ts_path +
                                         "' exist");
            }
            DenseArray fm = load_array(fm_path);
            if (fm.dims.size() != 2 || fm.dims[0] != kFractionMapSize || fm.dims[1] != kFractionMapSize) {
                throw std::runtime_error(fm_path + ": expected a 64x64 fraction map");
            }
            rec.fm.pixels = Matrix(kFractionMapSize, kFractionMapSize);
            for (int y = 0; y < kFractionMapSize; ++y) {
                for (int x = 0; x < kFractionMapSize; ++x) {
                    rec.fm.pixels(y, x) = fm.data[static_cast<std::size_t>(y) * kFractionMapSize + x];
                }
            }
            DenseArray ts = load_array(ts_path);
            if (ts.dims.size() != 1) throw std::runtime_error(ts_path + ": expected a 1-d series");
            rec.sas.values = Vector(ts.dims[0]);
            for (std::size_t i = 0; i < ts.data.size(); ++i) rec.sas.values[static_cast<long>(i)] = ts.data[i];
        }
        if (ds.series_len == 0) {
            ds.series_len = static_cast<int>(rec.sas.values.size());
        } else if (rec.sas.values.size() != ds.series_len) {
            throw std::runtime_error("entity '" + e.entity_id + "': series length " +
                                     std::to_string(rec.sas.values.size()) + " differs from dataset T=" +
                                     std::to_string(ds.series_len));
        }
        ds.entities.push_back(std::move(rec));
        if (!e.label.empty()) {
            ds.labels.set(e.entity_id, ds.labels.class_index(e.label));
        }
    }
    ds.validate();
    return ds;
}

void save_modalities(const std::filesystem::path& out_dir, const Dataset& dataset) {
    std::filesystem::create_directories(out_dir);
    std::vector<ManifestEntry> entries;
    for (const auto& e : dataset.entities) {
        DenseArray fm;
        fm.dims = {kFractionMapSize, kFractionMapSize};
        fm.data.resize(fm.numel());
        for (int y = 0; y < kFractionMapSize; ++y) {
            for (int x = 0; x < kFractionMapSize; ++x) {
                fm.data[static_cast<std::size_t>(y) * kFractionMapSize + x] = static_cast<float>(e.fm.pixels(y, x));
            }
        }
        save_array(out_dir / (e.id + ".fm"), fm);

        DenseArray ts;
        ts.dims = {static_cast<std::uint64_t>(e.sas.values.size())};
        ts.data.resize(ts.numel());
        for (long i = 0; i < e.sas.values.size(); ++i) ts.data[static_cast<std::size_t>(i)] = static_cast<float>(e.sas.values[i]);
        save_array(out_dir / (e.id + ".ts"), ts);

        ManifestEntry me;
        me.entity_id = e.id;
        me.path = e.id;
        if (auto cls = dataset.labels.try_label_of(e.id)) me.label = dataset.labels.class_names()[*cls];
        entries.push_back(std::move(me));
    }
    write_manifest(out_dir / "manifest.tsv", entries);
}

void save_stacks(const std::filesystem::path& out_dir, const std::vector<WaterBodyStack>& stacks,
                 const LabelStore& labels) {
    std::filesystem::create_directories(out_dir);
    std::vector<ManifestEntry> entries;
    for (const auto& st : stacks) {
        DenseArray arr;
        arr.dims = {static_cast<std::uint64_t>(st.T), static_cast<std::uint64_t>(st.H),
                    static_cast<std::uint64_t>(st.W)};
        arr.data.resize(st.frames.size());
        for (std::size_t i = 0; i < st.frames.size(); ++i) arr.data[i] = static_cast<float>(st.frames[i]);
        save_array(out_dir / (st.entity_id + ".stk"), arr);
        ManifestEntry me;
        me.entity_id = st.entity_id;
        me.path = st.entity_id + ".stk";
        if (auto cls = labels.try_label_of(st.entity_id)) me.label = labels.class_names()[*cls];
        entries.push_back(std::move(me));
    }
    write_manifest(out_dir / "manifest.tsv", entries);
}

void save_labels(const std::filesystem::path& path, const LabelStore& labels) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    for (const auto& [id, cls] : labels.assignments()) {
        out << id << '\t' << labels.class_names()[cls] << '\t'
            << (labels.provenance_of(id) == Provenance::seed ? "seed" : "augmented") << '\n';
    }
}

LabelStore load_labels(const std::filesystem::path& path, int num_classes) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path.string() + ": cannot open labels file");
    LabelStore store(num_classes);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string id, cls, prov;
        if (!std::getline(ss, id, '\t') || !std::getline(ss, cls, '\t')) {
            throw std::runtime_error(path.string() + ": malformed labels line " + std::to_string(lineno));
        }
        std::getline(ss, prov, '\t');
        store.set(id, store.class_index(cls),
                  prov == "augmented" ? Provenance::augmented : Provenance::seed);
    }
    return store;
}

}  // namespace ssclust
