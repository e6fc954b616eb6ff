#include "denjoy/cantor.hpp"

#include <algorithm>
#include <sstream>

#include "denjoy/errors.hpp"

namespace denjoy {

std::ostream& operator<<(std::ostream& os, const OrbitIndex& idx) {
  return os << "(" << idx.k << "," << idx.n << ")";
}

Fixed golden_tau(int bits) {
  return (Fixed::sqrt(Fixed::from_int(5, bits)) - Fixed::from_int(1, bits)) / 2;
}

Fixed sqrt2_minus_one(int bits) {
  return Fixed::sqrt(Fixed::from_int(2, bits)) - Fixed::from_int(1, bits);
}

CantorParams CantorParams::defaults(int bits) {
  return CantorParams{2, golden_tau(bits), Fixed(bits), GapSchedule(bits), 128};
}

CantorApprox::CantorApprox(CantorParams params)
    : params_(std::move(params)), density_(params_.bits()), resolution_(params_.bits()) {
  const int bits = params_.bits();
  if (params_.m < 1) throw std::invalid_argument("m must be >= 1");
  if (params_.depth < 0) throw std::invalid_argument("depth must be >= 0");
  if (params_.phi.bits() != bits || params_.schedule.bits() != bits) {
    throw std::invalid_argument("parameters carry mixed precisions");
  }
  const Fixed zero(bits);
  const Fixed one = Fixed::from_int(1, bits);
  if (!(zero < params_.tau && params_.tau < one)) throw std::invalid_argument("tau must lie in (0,1)");

  const std::int64_t L = params_.depth;
  level_length_.reserve(static_cast<std::size_t>(L) + 2);
  for (std::int64_t n = 0; n <= L + 1; ++n) level_length_.push_back(params_.schedule.gap_length(n, params_.m));

  const std::size_t count = static_cast<std::size_t>(params_.m) * static_cast<std::size_t>(2 * L + 1);
  entries_.reserve(count);
  for (int k = 0; k < params_.m; ++k) {
    for (std::int64_t n = -L; n <= L; ++n) {
      const OrbitIndex idx{k, n};
      entries_.push_back(GapEntry{idx, raw_base(idx), Fixed(bits), Fixed(bits), gap_length(idx)});
    }
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const GapEntry& a, const GapEntry& b) { return a.base < b.base; });

  const Fixed tol = comparison_tolerance(bits);
  for (std::size_t i = 0; i < entries_.size() && entries_.size() > 1; ++i) {
    const GapEntry& a = entries_[i];
    const GapEntry& b = entries_[(i + 1) % entries_.size()];
    if (dist_T(CirclePoint(a.base), CirclePoint(b.base)) < tol) {
      std::ostringstream msg;
      msg << "base points " << a.index << " and " << b.index << " coincide at " << bits << "-bit precision";
      throw PrecisionCollision(msg.str());
    }
  }

  Fixed placed(bits);
  for (const GapEntry& e : entries_) placed += e.length;
  density_ = one - placed;
  const Fixed tail = params_.schedule.tail_bound(L);
  if (tail < Fixed::from_raw(BigInt(1) << 64, bits)) {
    throw DepthExceeded("depth " + std::to_string(L) + " leaves less residual mass than " +
                        std::to_string(bits) + "-bit precision resolves");
  }
  // Positions are within `tail` of the limit; images under the map add the
  // unresolved remainder on each side.
  resolution_ = tail * 4;

  Fixed prefix(bits);
  for (GapEntry& e : entries_) {
    e.left = prefix + density_ * e.base;
    e.right = e.left + e.length;
    prefix += e.length;
  }

  slot_of_.assign(count, 0);
  for (std::size_t i = 0; i < entries_.size(); ++i) slot_of_[key(entries_[i].index)] = i;
}

std::size_t CantorApprox::key(const OrbitIndex& idx) const {
  return static_cast<std::size_t>(idx.k) * static_cast<std::size_t>(2 * params_.depth + 1) +
         static_cast<std::size_t>(idx.n + params_.depth);
}

bool CantorApprox::in_model(const OrbitIndex& idx) const {
  return idx.k >= 0 && idx.k < params_.m && idx.n >= -params_.depth && idx.n <= params_.depth;
}

const GapEntry& CantorApprox::entry(const OrbitIndex& idx) const {
  if (!in_model(idx)) {
    std::ostringstream msg;
    msg << "orbit index " << idx << " outside model depth " << params_.depth;
    throw DepthExceeded(msg.str());
  }
  return entries_[slot_of_[key(idx)]];
}

Fixed CantorApprox::raw_base(const OrbitIndex& idx) const {
  const int bits = params_.bits();
  return (params_.phi + Fixed::from_ratio(idx.k, params_.m, bits) + params_.tau * idx.n).frac();
}

CirclePoint CantorApprox::base_point(const OrbitIndex& idx) const {
  if (idx.k < 0 || idx.k >= params_.m) throw std::invalid_argument("orbit index k out of range");
  return CirclePoint(raw_base(idx));
}

Fixed CantorApprox::gap_length(const OrbitIndex& idx) const {
  const std::int64_t level = idx.n < 0 ? -idx.n : idx.n;
  if (level < static_cast<std::int64_t>(level_length_.size())) return level_length_[static_cast<std::size_t>(level)];
  return params_.schedule.gap_length(level, params_.m);
}

Fixed CantorApprox::require_tolerance(double eps) const {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  Fixed tol = Fixed::from_double(eps, bits());
  if (tol < resolution_) {
    throw DepthExceeded("eps " + format_sci(eps) + " is finer than the model resolution " +
                        format_sci(resolution_.to_double()) + " at depth " + std::to_string(depth()));
  }
  return tol;
}

CirclePoint CantorApprox::gap_left_endpoint(const OrbitIndex& idx, double eps) const {
  require_tolerance(eps);
  if (in_model(idx)) return CirclePoint(entry(idx).left);
  return CirclePoint(embed(base_point(idx).angle()));
}

Arc CantorApprox::gap(const OrbitIndex& idx, double eps) const {
  const CirclePoint left = gap_left_endpoint(idx, eps);
  return Arc(left, rotate(left, gap_length(idx)));
}

std::vector<Arc> CantorApprox::stage(int j, double eps) const {
  require_tolerance(eps);
  if (j < 0) throw std::invalid_argument("stage index must be >= 0");
  if (j > params_.depth) {
    throw DepthExceeded("stage " + std::to_string(j) + " beyond depth " + std::to_string(params_.depth));
  }
  if (j == 0) return {Arc::full_circle(CirclePoint(bits()))};

  std::vector<const GapEntry*> removed;
  for (const GapEntry& e : entries_) {
    if (e.index.n > -j && e.index.n < j) removed.push_back(&e);
  }
  std::vector<Arc> arcs;
  arcs.reserve(removed.size());
  for (std::size_t i = 0; i < removed.size(); ++i) {
    const GapEntry* cur = removed[i];
    const GapEntry* next = removed[(i + 1) % removed.size()];
    arcs.emplace_back(CirclePoint(cur->right), CirclePoint(next->left));
  }
  return arcs;
}

CantorApprox::Location CantorApprox::locate(const Fixed& y) const {
  auto it = std::upper_bound(entries_.begin(), entries_.end(), y,
                             [](const Fixed& v, const GapEntry& e) { return v < e.left; });
  const std::ptrdiff_t slot = (it - entries_.begin()) - 1;
  if (slot >= 0 && y <= entries_[static_cast<std::size_t>(slot)].right) return {true, slot};
  return {false, slot};
}

Fixed CantorApprox::collapse(const Fixed& y) const {
  const Location loc = locate(y);
  if (loc.in_gap) return entries_[static_cast<std::size_t>(loc.slot)].base;
  const int bits = params_.bits();
  Fixed prev_base(bits);
  Fixed prev_right(bits);
  if (loc.slot >= 0) {
    prev_base = entries_[static_cast<std::size_t>(loc.slot)].base;
    prev_right = entries_[static_cast<std::size_t>(loc.slot)].right;
  }
  const std::size_t next = static_cast<std::size_t>(loc.slot + 1);
  const Fixed next_base = next < entries_.size() ? entries_[next].base : Fixed::from_int(1, bits);
  const Fixed x = prev_base + (y - prev_right) / density_;
  return min(max(x, prev_base), next_base);
}

Fixed CantorApprox::embed(const Fixed& x) const {
  auto it = std::upper_bound(entries_.begin(), entries_.end(), x,
                             [](const Fixed& v, const GapEntry& e) { return v < e.base; });
  if (it == entries_.begin()) return density_ * x;
  const GapEntry& prev = *(it - 1);
  if (prev.base == x) return prev.left;
  const Fixed y = prev.right + density_ * (x - prev.base);
  return it == entries_.end() ? y : min(y, it->left);
}

CirclePoint CantorApprox::cantor_function(const CirclePoint& y, double eps) const {
  require_tolerance(eps);
  return CirclePoint(collapse(y.angle()));
}

Classification CantorApprox::classify(const CirclePoint& y, double eps) const {
  const Fixed tol = require_tolerance(eps);
  const Location loc = locate(y.angle());
  if (loc.in_gap) {
    const GapEntry& e = entries_[static_cast<std::size_t>(loc.slot)];
    if (e.length >= tol) return InGap{e.index};
  }
  return NearCantor{};
}

Fixed CantorApprox::measure_remaining(int N) const {
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  Fixed remaining = Fixed::from_int(1, bits());
  for (std::int64_t n = -N; n <= N; ++n) remaining -= params_.schedule.weight(n);
  return remaining;
}

int CantorApprox::truncation_depth(double eps) const {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const Fixed half = Fixed::from_double(eps, bits()) / 2;
  if (half.is_zero()) throw DepthExceeded("eps below fixed-point resolution");
  int N = 0;
  while (params_.schedule.tail_bound(N) > half) ++N;
  return N;
}

}  // namespace denjoy
