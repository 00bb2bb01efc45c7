#include "ssclust/array_io.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ssclust {

namespace {

[[noreturn]] void io_fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error(path.string() + ": " + what);
}

}  // namespace

void save_array(const std::filesystem::path& path, const DenseArray& arr) {
    if (arr.data.size() != arr.numel()) {
        throw std::invalid_argument("save_array: payload size does not match dims");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) io_fail(path, "cannot open for writing");
    out.write(kArrayMagic, sizeof(kArrayMagic));
    std::uint32_t ndim = static_cast<std::uint32_t>(arr.dims.size());
    out.write(reinterpret_cast<const char*>(&ndim), sizeof(ndim));
    out.write(reinterpret_cast<const char*>(arr.dims.data()), ndim * sizeof(std::uint64_t));
    out.write(reinterpret_cast<const char*>(arr.data.data()), arr.data.size() * sizeof(float));
    if (!out) io_fail(path, "write failed");
}

DenseArray load_array(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) io_fail(path, "cannot open");
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kArrayMagic, sizeof(magic)) != 0) {
        io_fail(path, "not an SSCLUST1 array (bad magic)");
    }
    std::uint32_t ndim = 0;
    in.read(reinterpret_cast<char*>(&ndim), sizeof(ndim));
    if (!in || ndim == 0 || ndim > 8) io_fail(path, "bad ndim");
    DenseArray arr;
    arr.dims.resize(ndim);
    in.read(reinterpret_cast<char*>(arr.dims.data()), ndim * sizeof(std::uint64_t));
    if (!in) io_fail(path, "truncated header");
    std::size_t n = arr.numel();
    if (n > (1ull << 31)) io_fail(path, "array too large");
    arr.data.resize(n);
    in.read(reinterpret_cast<char*>(arr.data.data()), n * sizeof(float));
    if (!in) io_fail(path, "truncated payload");
    return arr;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) io_fail(path, "cannot open manifest");
    std::vector<ManifestEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        ManifestEntry e;
        std::string label;
        if (!std::getline(ss, e.entity_id, '\t') || !std::getline(ss, e.path, '\t') || !std::getline(ss, label, '\t')) {
            io_fail(path, "malformed manifest line " + std::to_string(lineno) + ": '" + line + "'");
        }
        e.label = (label == "_") ? "" : label;
        entries.push_back(std::move(e));
    }
    return entries;
}

void write_manifest(const std::filesystem::path& path, const std::vector<ManifestEntry>& entries) {
    std::ofstream out(path);
    if (!out) io_fail(path, "cannot open for writing");
    for (const auto& e : entries) {
        out << e.entity_id << '\t' << e.path << '\t' << (e.label.empty() ? "_" : e.label) << '\n';
    }
    if (!out) io_fail(path, "write failed");
}

}  // namespace ssclust
