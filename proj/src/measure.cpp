#include "mhilb/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mhilb/specfun.hpp"

namespace mhilb {

Measure::Measure(std::vector<Atom> atoms, std::vector<Piece> pieces)
    : atoms_(std::move(atoms)), pieces_(std::move(pieces)) {
  for (const Atom& a : atoms_) {
    if (!(std::isfinite(a.t) && a.t > 0.0 && a.t < 1.0)) {
      throw std::domain_error("Measure: atom positions must lie strictly inside (0, 1)");
    }
    if (!(std::isfinite(a.w) && a.w > 0.0)) {
      throw std::domain_error("Measure: atom weights must be positive");
    }
  }
  for (const Piece& p : pieces_) {
    if (!(std::isfinite(p.a) && std::isfinite(p.b) && p.a >= 0.0 && p.a < p.b && p.b <= 1.0)) {
      throw std::domain_error("Measure: pieces need 0 <= a < b <= 1");
    }
    if (!(std::isfinite(p.c) && p.c >= 0.0)) {
      throw std::domain_error("Measure: piece density must be >= 0");
    }
  }
  std::sort(pieces_.begin(), pieces_.end(),
            [](const Piece& x, const Piece& y) { return x.a < y.a; });
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i].a < pieces_[i - 1].b) {
      throw std::domain_error("Measure: pieces must not overlap");
    }
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& x, const Atom& y) { return x.t < y.t; });
}

double Measure::total_mass() const {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.w;
  for (const Piece& p : pieces_) m += p.c * (p.b - p.a);
  return m;
}

Measure Measure::lebesgue() {
  return Measure({}, {Piece{0.0, 1.0, 1.0}});
}

double moment(const Measure& measure, double gamma, std::int64_t n) {
  if (!(std::isfinite(gamma) && gamma > 0.0)) {
    throw std::domain_error("moment: gamma must be positive");
  }
  if (n < 2) throw std::domain_error("moment: n must be >= 2");
  const double L = std::log(static_cast<double>(n));
  double m = 0.0;
  for (const Atom& a : measure.atoms()) {
    m += a.w * std::pow(a.t, L - 1.0) * std::pow(1.0 - a.t, gamma - 1.0);
  }
  if (!measure.pieces().empty()) {
    const double full = beta_fn(L, gamma);
    for (const Piece& p : measure.pieces()) {
      if (p.c == 0.0) continue;
      m += p.c * full * (reg_inc_beta(p.b, L, gamma) - reg_inc_beta(p.a, L, gamma));
    }
  }
  return m;
}

double tail_mass(const Measure& measure, double t) {
  if (!(t >= 0.0 && t < 1.0)) {
    throw std::domain_error("tail_mass: t must lie in [0, 1)");
  }
  double m = 0.0;
  for (const Atom& a : measure.atoms()) {
    if (a.t >= t) m += a.w;
  }
  for (const Piece& p : measure.pieces()) {
    const double lo = std::max(p.a, t);
    if (lo < p.b) m += p.c * (p.b - lo);
  }
  return m;
}

double weighted_tail_mass(const Measure& measure, double gamma, double t) {
  if (!(std::isfinite(gamma) && gamma > 0.0)) {
    throw std::domain_error("weighted_tail_mass: gamma must be positive");
  }
  if (!(t >= 0.0 && t < 1.0)) {
    throw std::domain_error("weighted_tail_mass: t must lie in [0, 1)");
  }
  double m = 0.0;
  for (const Atom& a : measure.atoms()) {
    if (a.t >= t) m += a.w * std::pow(1.0 - a.t, gamma - 1.0);
  }
  for (const Piece& p : measure.pieces()) {
    const double lo = std::max(p.a, t);
    if (lo < p.b) {
      // int_lo^b c (1-u)^{gamma-1} du = c [ (1-lo)^gamma - (1-b)^gamma ] / gamma
      m += p.c * (std::pow(1.0 - lo, gamma) - std::pow(1.0 - p.b, gamma)) / gamma;
    }
  }
  return m;
}

CarlesonReport carleson_constant(const Measure& measure, bool gamma_weighted,
                                 double gamma, double s) {
  if (!(std::isfinite(s) && s > 0.0)) {
    throw std::domain_error("carleson_constant: s must be positive");
  }
  constexpr double kCeiling = 1.0 - 1e-6;
  std::vector<double> candidates;
  candidates.reserve(10000 + 2 * measure.atoms().size() + 2 * measure.pieces().size());
  for (const Atom& a : measure.atoms()) candidates.push_back(a.t);
  for (const Piece& p : measure.pieces()) {
    candidates.push_back(p.a);
    if (p.b < 1.0) candidates.push_back(p.b);
  }
  for (int i = 0; i < 10000; ++i) {
    candidates.push_back(kCeiling * static_cast<double>(i) / 9999.0);
  }
  double best = 0.0;
  double witness = 0.0;
  for (double t : candidates) {
    if (!(t >= 0.0 && t <= kCeiling)) continue;
    const double tail = gamma_weighted ? weighted_tail_mass(measure, gamma, t)
                                       : tail_mass(measure, t);
    const double ratio = tail / std::pow(1.0 - t, s);
    if (ratio > best) {
      best = ratio;
      witness = t;
    }
  }
  // A density piece reaching 1 decides the verdict analytically: its
  // (weighted) tail decays like (1-t)^gamma (resp. (1-t)), so the ratio
  // stays bounded iff gamma >= s (resp. s <= 1). Atoms and interior pieces
  // always give a bounded ratio.
  bool ok = true;
  for (const Piece& p : measure.pieces()) {
    if (p.b == 1.0 && p.c > 0.0) {
      ok = ok && (gamma_weighted ? gamma >= s : s <= 1.0);
    }
  }
  return CarlesonReport{s, best, witness, ok};
}

MomentDecayReport moment_decay_check(const Measure& measure, double gamma,
                                     std::span<const std::int64_t> n_values) {
  if (n_values.empty()) {
    throw std::domain_error("moment_decay_check: n_values must be nonempty");
  }
  MomentDecayReport report;
  report.min_value = std::numeric_limits<double>::infinity();
  report.max_value = -std::numeric_limits<double>::infinity();
  for (std::int64_t n : n_values) {
    const double L = std::log(static_cast<double>(n));
    const double v = moment(measure, gamma, n) * std::pow(L, gamma);
    report.values.emplace_back(n, v);
    report.min_value = std::min(report.min_value, v);
    report.max_value = std::max(report.max_value, v);
  }
  return report;
}

} // namespace mhilb
