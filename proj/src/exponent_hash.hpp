#pragma once

#include <cstddef>
#include <cstdint>

#include "clusterlab/laurent.hpp"

namespace clusterlab::detail {

inline std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

struct ExponentHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = e.size();
    for (auto v : e) h = hash_combine(h, static_cast<std::size_t>(static_cast<std::uint32_t>(v)));
    return h;
  }
};

}  // namespace clusterlab::detail
