#pragma once

#include <cstdint>

#include "zomd/types.hpp"

namespace zomd {

/// Counter-based random stream. A draw is a pure function of
/// (root, stream, counter), so identical triples reproduce identical values
/// and distinct (root, stream) pairs give independent-looking sequences.
class SeedStream {
 public:
  SeedStream() : SeedStream(0, 0) {}
  SeedStream(std::uint64_t root, std::uint64_t stream);

  std::uint64_t root() const { return root_; }
  std::uint64_t stream() const { return stream_; }
  std::uint64_t counter() const { return counter_; }

  /// Child stream with a derived stream id and counter 0.
  SeedStream fork(std::uint64_t child) const;

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double next_double();
  /// Uniform on (0, 1].
  double next_double_open();
  /// Standard normal via Box-Muller (two uniforms per call, no caching,
  /// so consumption is deterministic and platform-independent).
  double next_gaussian();

 private:
  std::uint64_t root_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t base_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace zomd
