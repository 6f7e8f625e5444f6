#pragma once

#include <cstdint>
#include <random>

namespace dap {

/// Deterministic random source. All sampling in the engine goes through this
/// wrapper so that a (seed, trials) pair always reproduces the same run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
  }

  /// Derive an independent stream, e.g. one per trial.
  Rng fork(std::uint64_t salt) { return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

 private:
  std::mt19937_64 eng_;
};

/// FNV-1a, used to mix theorem/model identifiers into per-run seeds.
inline std::uint64_t hash_str(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace dap
