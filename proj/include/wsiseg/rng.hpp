#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace wsiseg {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Deterministic RNG with hand-rolled distributions. std:: distributions are
/// implementation-defined, which would break frozen test expectations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // decorrelate small nearby seeds
    next();
    next();
  }

  /// Derive an independent stream, e.g. per worker or per object.
  Rng fork(std::uint64_t salt) const {
    std::uint64_t s = state_ ^ (0x632be59bd9b4e019ull * (salt + 1));
    return Rng(s);
  }

  std::uint64_t next() { return splitmix64(state_); }

  /// uniform in [0, 1)
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// uniform integer in [0, n), n > 0
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  int range(int lo, int hi_inclusive) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi_inclusive - lo + 1)));
  }

  /// standard normal via Box-Muller
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  /// Fisher-Yates, deterministic across platforms.
  template <class Vec>
  void shuffle(Vec& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Hash of a lattice point, for value noise.
inline double lattice_hash(std::int64_t ix, std::int64_t iy, std::uint64_t seed) {
  std::uint64_t s = seed;
  s ^= 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(ix) * 0xff51afd7ed558ccdull;
  s ^= 0x94d049bb133111ebull + static_cast<std::uint64_t>(iy) * 0xc4ceb9fe1a85ec53ull;
  std::uint64_t z = s;
  return (splitmix64(z) >> 11) * 0x1.0p-53;
}

inline double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

/// Single-octave value noise in [0, 1], lattice spacing `cell` pixels.
inline double value_noise(double x, double y, double cell, std::uint64_t seed) {
  double fx = x / cell, fy = y / cell;
  std::int64_t ix = static_cast<std::int64_t>(std::floor(fx));
  std::int64_t iy = static_cast<std::int64_t>(std::floor(fy));
  double tx = smoothstep(fx - ix), ty = smoothstep(fy - iy);
  double v00 = lattice_hash(ix, iy, seed), v10 = lattice_hash(ix + 1, iy, seed);
  double v01 = lattice_hash(ix, iy + 1, seed), v11 = lattice_hash(ix + 1, iy + 1, seed);
  double a = v00 + (v10 - v00) * tx;
  double b = v01 + (v11 - v01) * tx;
  return a + (b - a) * ty;
}

/// Multi-octave value noise in [-1, 1], frequency doubling, amplitude halving.
inline double fractal_noise(double x, double y, double base_cell, int octaves, std::uint64_t seed) {
  double sum = 0.0, amp = 1.0, norm = 0.0, cell = base_cell;
  for (int o = 0; o < octaves; ++o) {
    sum += amp * (2.0 * value_noise(x, y, cell, seed + 0x51ed2700 * o) - 1.0);
    norm += amp;
    amp *= 0.5;
    cell *= 0.5;
  }
  return sum / norm;
}

/// Periodic 1-D noise on [0, 2pi), for wobbly closed boundaries.
inline double ring_noise(double theta, int harmonics, std::uint64_t seed, Rng rng_seeded) {
  // evaluated via a small Fourier series with deterministic coefficients
  double v = 0.0;
  for (int k = 1; k <= harmonics; ++k) {
    double ak = rng_seeded.uniform(-1.0, 1.0) / k;
    double bk = rng_seeded.uniform(-1.0, 1.0) / k;
    v += ak * std::cos(k * theta) + bk * std::sin(k * theta);
  }
  return v;
}

}  // namespace wsiseg
