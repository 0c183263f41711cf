#include "landscape_qubo/rng.hpp"

namespace lq {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt0, std::uint64_t salt1,
                       std::uint64_t salt2) {
  std::uint64_t state = seed;
  std::uint64_t out = splitmix64(state);
  state ^= salt0;
  out ^= splitmix64(state);
  state ^= salt1;
  out ^= splitmix64(state);
  state ^= salt2;
  out ^= splitmix64(state);
  return out;
}

}  // namespace lq
