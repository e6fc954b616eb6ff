#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "denjoy/cantor.hpp"

namespace denjoy {

/// Seeded deterministic source of full-precision uniform samples.
class Sampler {
 public:
  Sampler(std::uint64_t seed, int bits) : engine_(seed), bits_(bits) {}

  /// Uniform on [0,1) with every fractional bit random.
  Fixed unit();
  CirclePoint point() { return CirclePoint(unit()); }
  std::uint64_t next() { return engine_(); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
  int bits_;
};

/// Test points for sweeps, cycling through three families: Lebesgue-uniform
/// points (almost all inside gaps), images a(x) of uniform x (points of the
/// Cantor set, almost all inaccessible), and gap endpoints.
std::vector<CirclePoint> mixed_samples(const CantorApprox& cantor, int count, std::uint64_t seed);

/// Images a(x) of uniform x only.
std::vector<CirclePoint> cantor_samples(const CantorApprox& cantor, int count, std::uint64_t seed);

}  // namespace denjoy
