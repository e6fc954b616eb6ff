#include "denjoy/sampling.hpp"

namespace denjoy {

Fixed Sampler::unit() {
  BigInt raw = 0;
  int have = 0;
  while (have < bits_) {
    raw = (raw << 64) | BigInt(engine_());
    have += 64;
  }
  raw >>= (have - bits_);
  return Fixed::from_raw(std::move(raw), bits_);
}

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  return dist(engine_);
}

std::vector<CirclePoint> mixed_samples(const CantorApprox& cantor, int count, std::uint64_t seed) {
  Sampler sampler(seed, cantor.bits());
  std::vector<CirclePoint> out;
  out.reserve(static_cast<std::size_t>(count));
  const auto& entries = cantor.entries();
  for (int s = 0; s < count; ++s) {
    switch (s % 3) {
      case 0:
        out.push_back(sampler.point());
        break;
      case 1:
        out.push_back(cantor.jump(sampler.point()));
        break;
      default: {
        const auto& e = entries[static_cast<std::size_t>(sampler.integer(0, static_cast<std::int64_t>(entries.size()) - 1))];
        out.push_back(CirclePoint(sampler.next() & 1 ? e.right : e.left));
        break;
      }
    }
  }
  return out;
}

std::vector<CirclePoint> cantor_samples(const CantorApprox& cantor, int count, std::uint64_t seed) {
  Sampler sampler(seed, cantor.bits());
  std::vector<CirclePoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) out.push_back(cantor.jump(sampler.point()));
  return out;
}

}  // namespace denjoy
