#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "sir/io.hpp"

namespace sir {

namespace {

std::string window_text(Interval iv) {
  return "[" + std::to_string(iv.s) + "," + std::to_string(iv.e) + "]";
}

}  // namespace

SynthResult generate_synthetic(const SynthSpec& spec, double tau) {
  if (spec.n < 1) throw SpecError("synthetic spec: n must be >= 1");
  if (!(spec.planted_margin > 0.0))
    throw SpecError("synthetic spec: planted_margin must be positive");
  if (spec.background_amplitude < 0.0)
    throw SpecError("synthetic spec: background_amplitude must be >= 0");
  if (!(spec.background_amplitude < tau))
    throw SpecError("synthetic spec: background_amplitude must be below tau");

  std::vector<PlantedWindow> planted = spec.planted;
  std::sort(planted.begin(), planted.end(),
            [](const PlantedWindow& a, const PlantedWindow& b) {
              return a.window.s < b.window.s;
            });
  long long total_planted = 0;
  for (std::size_t i = 0; i < planted.size(); ++i) {
    const Interval iv = planted[i].window;
    if (iv.s < 0 || iv.e < iv.s || iv.e >= spec.n)
      throw SpecError("synthetic spec: window " + window_text(iv) +
                      " outside [0," + std::to_string(spec.n - 1) + "]");
    if (i > 0 && iv.s <= planted[i - 1].window.e)
      throw SpecError("synthetic spec: windows " +
                      window_text(planted[i - 1].window) + " and " +
                      window_text(iv) + " overlap");
    total_planted += iv.length();
  }

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> magnitude(0.5, 1.5);
  std::uniform_real_distribution<double> product(-spec.background_amplitude * 0.999,
                                                 spec.background_amplitude * 0.999);
  std::bernoulli_distribution flip(0.5);

  std::vector<double> x(static_cast<std::size_t>(spec.n));
  std::vector<double> y(static_cast<std::size_t>(spec.n));
  for (int t = 0; t < spec.n; ++t) {
    double xt = magnitude(rng);
    if (flip(rng)) xt = -xt;
    x[t] = xt;
    y[t] = spec.background_amplitude == 0.0 ? 0.0 : product(rng) / xt;
  }

  // Suppressor flanks: strong enough to outweigh the combined planted excess
  // so no strong interval can cross a window edge.
  const double guard =
      static_cast<double>(total_planted) * spec.planted_margin +
      std::abs(tau) + 1.0;
  const double strong = tau + spec.planted_margin;

  auto inside_window = [&](int t) {
    for (const PlantedWindow& w : planted)
      if (w.window.contains(t)) return true;
    return false;
  };

  for (const PlantedWindow& w : planted) {
    for (int t = w.window.s; t <= w.window.e; ++t) {
      x[t] = 1.0;
      y[t] = w.polarity >= 0 ? strong : -strong;
    }
    for (const int t : {w.window.s - 1, w.window.e + 1}) {
      if (t < 0 || t >= spec.n || inside_window(t)) continue;
      x[t] = 1.0;
      y[t] = w.polarity >= 0 ? -guard : guard;
    }
  }

  return SynthResult{TimeSeriesPair(std::move(x), std::move(y)),
                     std::move(planted)};
}

}  // namespace sir
