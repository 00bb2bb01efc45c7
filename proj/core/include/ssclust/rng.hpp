#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace ssclust {

// splitmix64 finalizer, used to derive independent seed streams from a base
// seed plus a path of context values (epoch, batch index, entity index, ...).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = mix64(base);
    for (std::uint64_t p : path) s = mix64(s ^ mix64(p));
    return s;
}

inline std::mt19937_64 make_rng(std::uint64_t base, std::initializer_list<std::uint64_t> path = {}) {
    return std::mt19937_64(derive_seed(base, path));
}

}  // namespace ssclust
