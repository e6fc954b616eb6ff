#include "denjoy/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include <json.hpp>

#include "denjoy/errors.hpp"
#include "denjoy/planar.hpp"
#include "denjoy/sampling.hpp"

namespace denjoy {

using nlohmann::json;

namespace {

struct Outcome {
  double residual;
  double bound;
  bool pass;
};

Outcome within(const Fixed& residual, double bound) {
  const double r = residual.to_double();
  return {r, bound, r <= bound};
}

Outcome exact_count(std::int64_t violations) {
  return {static_cast<double>(violations), 0.0, violations == 0};
}

class Runner {
 public:
  Runner(VerifyReport& report, bool timings) : report_(report), timings_(timings) {}

  void run(const std::string& name, const std::function<Outcome()>& check) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = check();
    const auto stop = std::chrono::steady_clock::now();
    CheckResult r{name, o.residual, o.bound, o.pass, 0.0};
    if (timings_) r.duration_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    report_.checks.push_back(r);
  }

 private:
  VerifyReport& report_;
  bool timings_;
};

// Model gaps with |n| <= limit, over all k.
std::vector<OrbitIndex> shallow_indices(const CantorApprox& c, int limit) {
  std::vector<OrbitIndex> out;
  for (int k = 0; k < c.m(); ++k) {
    for (std::int64_t n = -limit; n <= limit; ++n) out.push_back({k, n});
  }
  return out;
}

void cantor_suite(Runner& run, const CantorApprox& c, const VerifyOptions& opt) {
  const int bits = c.bits();
  const int J = std::min(4, c.depth());
  const double eps = opt.eps;

  run.run("cantor.arc_count", [&] {
    std::int64_t bad = 0;
    for (int j = 1; j <= J; ++j) {
      if (c.stage(j, eps).size() != static_cast<std::size_t>(c.m() * (2 * j - 1))) ++bad;
    }
    return exact_count(bad);
  });

  run.run("cantor.nesting", [&] {
    std::int64_t bad = 0;
    const Fixed tol = comparison_tolerance(bits);
    for (int j = 1; j < std::min(J + 1, c.depth()); ++j) {
      const auto outer = c.stage(j, eps);
      const auto inner = c.stage(j + 1, eps);
      for (const Arc& b : inner) {
        const bool nested = std::any_of(outer.begin(), outer.end(), [&](const Arc& a) {
          return arc_contains(a, b.from()) && arc_contains(a, b.to()) &&
                 ccw_distance(a.from(), b.from()) + b.length() <= a.length() + tol;
        });
        if (!nested) ++bad;
      }
      // Endpoints of a stage persist into every later stage.
      for (const Arc& a : outer) {
        const bool kept = std::any_of(inner.begin(), inner.end(), [&](const Arc& b) { return b.from() == a.from(); });
        if (!kept) ++bad;
      }
    }
    return exact_count(bad);
  });

  run.run("cantor.symmetry", [&] {
    Fixed worst(bits);
    for (const GapEntry& e : c.entries()) {
      const GapEntry& ref = c.entry({0, e.index.n});
      const CirclePoint expect = rotate_fraction(CirclePoint(ref.left), e.index.k, c.m());
      worst = max(worst, dist_T(CirclePoint(e.left), expect));
      worst = max(worst, dist_T(CirclePoint(e.right), rotate(expect, ref.length)));
    }
    for (int j = 1; j <= J; ++j) {
      const auto arcs = c.stage(j, eps);
      const std::size_t shift = arcs.size() / static_cast<std::size_t>(c.m());
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& image = arcs[(i + shift) % arcs.size()];
        worst = max(worst, dist_T(rotate_fraction(arcs[i].from(), 1, c.m()), image.from()));
        worst = max(worst, dist_T(rotate_fraction(arcs[i].to(), 1, c.m()), image.to()));
      }
    }
    return within(worst, 2 * eps);
  });

  run.run("cantor.order", [&] {
    const auto idx = shallow_indices(c, J);
    std::vector<CirclePoint> mids;
    std::vector<CirclePoint> bases;
    for (const OrbitIndex& i : idx) {
      mids.push_back(c.gap(i, eps).midpoint());
      bases.push_back(c.base_point(i));
    }
    std::int64_t bad = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        for (std::size_t d = b + 1; d < idx.size(); ++d) {
          if (cyclic_order(mids[a], mids[b], mids[d]) != cyclic_order(bases[a], bases[b], bases[d])) ++bad;
        }
      }
    }
    return exact_count(bad);
  });

  run.run("cantor.disjoint", [&] {
    const auto& es = c.entries();
    std::int64_t bad = 0;
    for (std::size_t i = 0; i + 1 < es.size(); ++i) {
      if (!(es[i].right < es[i + 1].left)) ++bad;
    }
    if (!(es.back().right < es.front().left + Fixed::from_int(1, bits))) ++bad;
    return exact_count(bad);
  });

  run.run("cantor.measure", [&] {
    // Σ over every gap must be 1, so what the model leaves uncovered is
    // bounded by the tail of a mass-1 schedule.
    const GapSchedule full(c.params().schedule.ratio(), Fixed::from_int(1, bits));
    const double bound = (full.tail_bound(c.depth()) + comparison_tolerance(bits)).to_double();
    return within(c.measure_remaining(c.depth()).abs(), bound);
  });

  run.run("cantor.measure_decreasing", [&] {
    std::int64_t bad = 0;
    Fixed prev = c.measure_remaining(0);
    for (int N = 1; N <= std::min(20, c.depth()); ++N) {
      const Fixed cur = c.measure_remaining(N);
      if (!(cur < prev)) ++bad;
      prev = cur;
    }
    return exact_count(bad);
  });
}

void denjoy_suite(Runner& run, const DenjoyMap& f, const VerifyOptions& opt) {
  const CantorApprox& c = f.cantor();
  const int bits = c.bits();
  const double eps = opt.eps;
  const double cmp = comparison_tolerance(bits).to_double();

  run.run("denjoy.lift", [&] {
    auto samples = mixed_samples(c, opt.samples, opt.seed);
    std::vector<Fixed> xs;
    for (const auto& s : samples) xs.push_back(s.angle());
    std::sort(xs.begin(), xs.end());
    const Fixed one = Fixed::from_int(1, bits);
    Fixed worst(bits);
    Fixed prev_lift(bits);
    bool first = true;
    for (const Fixed& x : xs) {
      const Fixed F = f.lift_eval(x, eps);
      worst = max(worst, (f.lift_eval(x + one, eps) - F - one).abs());
      if (!first && F < prev_lift) worst = max(worst, prev_lift - F);
      prev_lift = F;
      first = false;
    }
    return within(worst, cmp);
  });

  run.run("denjoy.equivariance", [&] { return within(f.equivariance_residual(opt.samples, eps, opt.seed), 4 * eps); });

  run.run("denjoy.semiconjugacy",
          [&] { return within(f.semiconjugacy_residual(opt.samples, eps, opt.seed), 4 * eps); });

  run.run("denjoy.rotation_number", [&] {
    Sampler sampler(opt.seed ^ 0x5151, bits);
    double worst = 0.0;
    double bound = 1.0;
    bool pass = true;
    for (int s = 0; s < 5; ++s) {
      const RotationEstimate est = f.rotation_number(sampler.point(), opt.rotation_steps, eps, opt.budget);
      const double r = (est.estimate - f.tau()).abs().to_double();
      pass = pass && r <= est.bound;
      worst = std::max(worst, r);
      bound = std::min(bound, est.bound);
    }
    return Outcome{worst, bound, pass};
  });

  run.run("denjoy.gap_dynamics", [&] {
    Fixed worst(bits);
    for (const GapEntry& e : c.entries()) {
      if (e.index.n >= c.depth()) continue;
      const GapEntry& next = c.entry({e.index.k, e.index.n + 1});
      worst = max(worst, dist_T(f.eval(CirclePoint(e.left), eps), CirclePoint(next.left)));
      worst = max(worst, dist_T(f.eval(CirclePoint(e.right), eps), CirclePoint(next.right)));
    }
    return within(worst, 2 * eps);
  });

  run.run("denjoy.slopes", [&] {
    Fixed worst(bits);
    std::int64_t unit_slopes = 0;
    for (const GapEntry& e : c.entries()) {
      if (e.index.n >= c.depth()) continue;
      const Fixed s = f.slope(e.index);
      const Fixed expect = c.params().schedule.level_ratio(e.index.n);
      worst = max(worst, (s - expect).abs() / expect);
      if (s == Fixed::from_int(1, bits)) ++unit_slopes;
    }
    Outcome o = within(worst, eps);
    o.pass = o.pass && unit_slopes == 0;
    return o;
  });

  run.run("denjoy.aperiodicity", [&] {
    // Uniform samples: almost surely inside a gap, hence wandering.
    Sampler sampler(opt.seed ^ 0xa9e7, bits);
    constexpr int kPoints = 100;
    constexpr int kPeriod = 50;
    double closest = 1.0;
    double worst_bound = 0.0;
    bool pass = true;
    for (int s = 0; s < kPoints; ++s) {
      const CirclePoint y = sampler.point();
      const OrbitTrace t = f.orbit(y, kPeriod, eps, opt.budget);
      const double threshold = 10.0 * t.error_bound;
      worst_bound = std::max(worst_bound, threshold);
      for (int q = 1; q <= kPeriod; ++q) {
        const double d = dist_T(t.points[static_cast<std::size_t>(q)], y).to_double();
        closest = std::min(closest, d);
        pass = pass && d > threshold;
      }
    }
    // Reported as a margin: bound must stay below the closest return.
    return Outcome{closest, worst_bound, pass};
  });
}

void planar_suite(Runner& run, const AdmissibleMap& h, const VerifyOptions& opt) {
  const CantorApprox& c = h.circle_map().cantor();
  const int bits = c.bits();
  const double eps = opt.eps;
  const Fixed half = Fixed::from_ratio(1, 2, bits);
  const Fixed quarter = Fixed::from_ratio(1, 4, bits);
  const Fixed one = Fixed::from_int(1, bits);
  const double cmp = comparison_tolerance(bits).to_double();

  run.run("planar.seams", [&] {
    Fixed worst(bits);
    for (const CirclePoint& theta : mixed_samples(c, opt.samples, opt.seed)) {
      const Fixed pi = h.bump(theta, eps).value;
      worst = max(worst, (h.radial(theta, half, eps) - quarter).abs());
      // Outer branch ρ/2 + 1/2 - Π continued down to ρ = 1.
      const Fixed outer = one - pi;
      worst = max(worst, (h.radial_with(pi, one) - outer).abs());
      worst = max(worst, (h.radial_with(pi, one + Fixed::ulp(bits)) - outer).abs());
      // Middle branch continued down to ρ = 1/2.
      worst = max(worst, (h.radial_with(pi, half + Fixed::ulp(bits)) - quarter).abs());
    }
    return within(worst, cmp);
  });

  run.run("planar.equivariance",
          [&] { return within(h.planar_equivariance_residual(opt.samples, eps, opt.seed), 6 * eps); });

  run.run("planar.stability", [&] {
    Sampler sampler(opt.seed ^ 0x57ab, bits);
    Fixed worst(bits);
    for (int s = 0; s < 10; ++s) {
      const PlanarTrace t = h.planar_orbit({sampler.point(), half}, 60, eps, opt.budget);
      Fixed expect = half;
      for (const PlanarPoint& p : t.points) {
        worst = max(worst, (p.rho - expect).abs());
        expect = expect / 2;
      }
    }
    return Outcome{worst.to_double(), 0.0, worst.is_zero()};
  });

  run.run("planar.invariant_circle", [&] {
    double worst = 0.0;
    double bound = 0.0;
    bool pass = true;
    for (const CirclePoint& theta : cantor_samples(c, std::min(opt.samples, 100), opt.seed)) {
      const BumpValue b = h.bump(theta, eps);
      const Fixed r = (h.radial(theta, one, eps) - one).abs();
      pass = pass && r <= b.error_bound;
      worst = std::max(worst, r.to_double());
      bound = std::max(bound, b.error_bound.to_double());
    }
    return Outcome{worst, bound, pass};
  });

  run.run("planar.radial_monotone", [&] {
    std::int64_t bad = 0;
    for (const CirclePoint& theta : mixed_samples(c, std::min(opt.samples, 200), opt.seed)) {
      Fixed prev = h.radial(theta, Fixed(bits), eps);
      for (int i = 1; i <= 48; ++i) {
        const Fixed cur = h.radial(theta, Fixed::from_ratio(i, 16, bits), eps);
        if (!(prev < cur)) ++bad;
        prev = cur;
      }
    }
    return exact_count(bad);
  });
}

// Recurrence of Cantor points: closest return of the orbit to its start.
// Return times are unbounded, so this is reported, never thresholded.
void recurrence_diagnostic(VerifyReport& report, const DenjoyMap& f, const VerifyOptions& opt) {
  constexpr int kPoints = 20;
  constexpr int kSteps = 1000;
  double worst = 0.0;
  double sum = 0.0;
  for (const CirclePoint& y : cantor_samples(f.cantor(), kPoints, opt.seed ^ 0x5ecu)) {
    const OrbitTrace t = f.orbit(y, kSteps, opt.eps, opt.budget);
    double closest = 1.0;
    for (int q = 1; q <= kSteps; ++q) {
      closest = std::min(closest, dist_T(t.points[static_cast<std::size_t>(q)], y).to_double());
    }
    worst = std::max(worst, closest);
    sum += closest;
  }
  report.diagnostics["recurrence.max_closest_return"] = worst;
  report.diagnostics["recurrence.mean_closest_return"] = sum / kPoints;
  report.diagnostics["recurrence.points"] = kPoints;
  report.diagnostics["recurrence.steps"] = kSteps;
}

}  // namespace

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string VerifyReport::to_json() const {
  json arr = json::array();
  for (const CheckResult& c : checks) {
    json j = {{"name", c.name}, {"residual", c.residual}, {"bound", c.bound}, {"pass", c.pass}};
    if (options.timings) j["duration_ms"] = c.duration_ms;
    arr.push_back(j);
  }
  json suites = json::array();
  if (options.cantor) suites.push_back("cantor");
  if (options.denjoy) suites.push_back("denjoy");
  if (options.planar) suites.push_back("planar");
  json doc = {
      {"schema", kVerifySchema},
      {"pass", pass},
      {"checks", arr},
      {"diagnostics", diagnostics},
      {"metadata",
       {{"config_hash", config_hash},
        {"seed", options.seed},
        {"eps", options.eps},
        {"samples", options.samples},
        {"rotation_steps", options.rotation_steps},
        {"rng", "mt19937_64"},
        {"suites", suites}}},
  };
  return doc.dump(2) + "\n";
}

VerifyReport run_verify(const BuildConfig& config, const VerifyOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("samples must be >= 1");
  VerifyReport report;
  report.options = options;
  report.config_hash = config_hash(config);

  const auto cantor = std::make_shared<const CantorApprox>(to_cantor_params(config));
  cantor->require_tolerance(options.eps);
  const DenjoyMap f(cantor);
  Runner run(report, options.timings);

  if (options.cantor) cantor_suite(run, *cantor, options);
  if (options.denjoy) {
    denjoy_suite(run, f, options);
    recurrence_diagnostic(report, f, options);
  }
  if (options.planar) {
    const AdmissibleMap h(f, default_pi_coefficient, Fixed::from_decimal(config.pi_cap, config.precision_bits));
    planar_suite(run, h, options);
  }
  report.pass = !report.checks.empty() &&
                std::all_of(report.checks.begin(), report.checks.end(), [](const CheckResult& c) { return c.pass; });
  return report;
}

}  // namespace denjoy
