#pragma once

#include <cstdint>
#include <random>

namespace densreg {

// Seeded random stream. Identical (seed, stream_id) pairs reproduce the
// identical draw sequence; all transforms below are implemented explicitly
// (no std::*_distribution) so sequences are bit-stable across platforms.
//
// A stream is cheap to copy but must not be shared across concurrent
// callers; derive independent substreams with split() instead.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  // Uniform on the open interval (0, 1).
  double uniform();

  // Standard normal via Box-Muller with a cached spare.
  double normal();

  // Exponential with unit rate.
  double exponential();

  // Gamma(shape, rate), shape > 0, rate > 0.
  double gamma(double shape, double rate);

  // Inverse-gamma(shape, scale): 1/X with X ~ Gamma(shape, rate = scale^-1)
  // reciprocal identity, i.e. scale / Gamma(shape, 1).
  double inverse_gamma(double shape, double scale);

  // Derive a statistically independent stream for substream `n`.
  RngStream split(std::uint64_t n) const;

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_ = 0;
  std::uint64_t stream_id_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace densreg
