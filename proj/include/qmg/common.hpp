// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmg {

// --- error taxonomy -------------------------------------------------------

struct SyntaxError : std::runtime_error {
  std::size_t offset;
  SyntaxError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (at byte " + std::to_string(byte_offset) +
                           ")"),
        offset(byte_offset) {}
};

struct ValenceError : std::runtime_error {
  int atom_index;
  ValenceError(const std::string& what, int atom)
      : std::runtime_error(what + " (atom " + std::to_string(atom) + ")"),
        atom_index(atom) {}
};

struct AromaticityError : std::runtime_error {
  int atom_index;
  AromaticityError(const std::string& what, int atom)
      : std::runtime_error(what + " (atom " + std::to_string(atom) + ")"),
        atom_index(atom) {}
};

struct WidthMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenerationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyGraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyBatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyList : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- deterministic hashing -------------------------------------------------

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t seed = kFnvOffset) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

inline std::uint64_t fnv1a(const std::string& s,
                           std::uint64_t seed = kFnvOffset) {
  return fnv1a(s.data(), s.size(), seed);
}

// splitmix64; used wherever a well-mixed stateless hash of integers is needed
// (fingerprint environments, seed derivation). Stable across platforms.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

// Derives an independent RNG stream from a master seed and a stream label,
// so that adding a consumer never shifts the draws of another.
inline std::mt19937_64 seeded_rng(std::uint64_t seed, const std::string& stream) {
  return std::mt19937_64(hash_combine(mix64(seed), fnv1a(stream)));
}

}  // namespace qmg
