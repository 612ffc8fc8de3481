#include "densreg/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace densreg {

namespace {
constexpr std::uint64_t kStreamSalt = 0x9e3779b97f4a7c15ULL;  // golden ratio
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id & 0xffffffffu),
                    static_cast<std::uint32_t>(stream_id >> 32),
                    static_cast<std::uint32_t>(kStreamSalt & 0xffffffffu)};
  engine_.seed(seq);
}

double RngStream::uniform() {
  // 53-bit mantissa, shifted into (0, 1).
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_normal_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

double RngStream::exponential() { return -std::log(uniform()); }

double RngStream::gamma(double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0)) {
    throw std::invalid_argument("gamma: shape and rate must be positive");
  }
  // Marsaglia-Tsang squeeze; boost shape < 1 with the u^(1/shape) identity.
  double boost = 1.0;
  if (shape < 1.0) {
    boost = std::pow(uniform(), 1.0 / shape);
    shape += 1.0;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) {
      return boost * d * v / rate;
    }
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return boost * d * v / rate;
    }
  }
}

double RngStream::inverse_gamma(double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw std::invalid_argument("inverse_gamma: parameters must be positive");
  }
  return scale / gamma(shape, 1.0);
}

RngStream RngStream::split(std::uint64_t n) const {
  // Mix the substream index into a fresh stream id.
  std::uint64_t sid = stream_id_ ^ (kStreamSalt * (n + 1));
  sid ^= sid >> 29;
  sid *= 0xbf58476d1ce4e5b9ULL;
  sid ^= sid >> 32;
  return RngStream(seed_, sid);
}

}  // namespace densreg
