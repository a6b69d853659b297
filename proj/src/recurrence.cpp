#include "minmax/recurrence.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace minmax {

namespace {

constexpr double kBand = 1024.0;  // level-0 values live below this
constexpr double kLow = 10.0;     // log2(kBand)

TowerReal normalized(int level, double v) {
  while (v >= kBand) {
    v = std::log2(v);
    ++level;
  }
  while (level > 0 && v < kLow) {
    v = std::exp2(v);
    --level;
  }
  return TowerReal{level, v};
}

// Sound lower bound for X - d where d is small relative to X's magnitude.
TowerReal subtract_small(const TowerReal& x, double d) {
  if (d <= 0) return x;
  if (x.level == 0) {
    if (x.v < d) throw std::invalid_argument("tower: subtraction underflow");
    return normalized(0, x.v - d);
  }
  // X >= 2^10, so X - d >= X * (1 - d/1024) and the correction shrinks by
  // a factor ~700 per level; recurse on log2(X).
  const double delta = -std::log2(1.0 - d / kBand);
  return subtract_small(x.log2(), delta).exp2();
}

}  // namespace

TowerReal TowerReal::from(double x) {
  if (!(x >= 0) || !std::isfinite(x))
    throw std::invalid_argument("tower: need a finite non-negative value");
  return normalized(0, x);
}

TowerReal TowerReal::log2() const {
  if (level > 0) return normalized(level - 1, v);
  if (v < 1.0) throw std::invalid_argument("tower: log2 of value below 1");
  return normalized(0, std::log2(v));
}

TowerReal TowerReal::exp2() const { return normalized(level + 1, v); }

TowerReal TowerReal::mul(double scalar) const {
  if (!(scalar > 0)) throw std::invalid_argument("tower: scalar must be positive");
  if (level == 0) return normalized(0, v * scalar);
  const double d = std::log2(scalar);
  if (d >= 0) {
    TowerReal lg = log2();
    if (lg.level == 0) return normalized(0, lg.v + d).exp2();
    return *this;  // dropping the factor >= 1 keeps a lower bound
  }
  return subtract_small(log2(), -d).exp2();
}

TowerReal TowerReal::add(const TowerReal& other) const {
  if (level == 0 && other.level == 0) return normalized(0, v + other.v);
  const TowerReal& larger = (*this >= other) ? *this : other;
  return larger;  // lower bound of the sum
}

bool TowerReal::operator>=(const TowerReal& other) const {
  if (level != other.level) return level > other.level;
  return v >= other.v;
}

bool TowerReal::operator>(const TowerReal& other) const {
  if (level != other.level) return level > other.level;
  return v > other.v;
}

double TowerReal::to_double() const {
  if (level == 0) return v;
  if (level == 1 && v < 1023.0) return std::exp2(v);
  return std::numeric_limits<double>::infinity();
}

std::string TowerReal::str() const {
  char buf[64];
  if (level == 0) {
    std::snprintf(buf, sizeof buf, "%.6g", v);
  } else {
    std::string prefix;
    for (int i = 0; i < level; ++i) prefix += "2^";
    std::snprintf(buf, sizeof buf, "%s%.6g", prefix.c_str(), v);
  }
  return buf;
}

bool RecurrenceReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

int log_star(double x) {
  int count = 0;
  while (x > 1.0) {
    x = std::log2(x);
    ++count;
  }
  return count;
}

RecurrenceReport check_recurrence_lemmas(int max_i, bool negative_control) {
  if (max_i < 4 || max_i > 64)
    throw std::invalid_argument("check_recurrence_lemmas: max_i must be in [4, 64]");

  RecurrenceReport report;
  auto note = [&report](std::string name, bool passed) {
    report.checks.push_back(RecurrenceCheck{std::move(name), passed});
  };

  // First recurrence: x_1 = 1, x_{i+1} = x_i * 2^(2 x_i / i^2), with
  // log2 x_{i+1} = log2 x_i + 2 x_i / i^2.
  report.xs.push_back(TowerReal::from(1.0));
  for (int i = 1; i < max_i; ++i) {
    const TowerReal xi = report.xs.back();
    const TowerReal exponent = xi.mul(2.0 / (static_cast<double>(i) * i));
    report.xs.push_back(xi.log2().add(exponent).exp2());
  }

  bool increasing = true;
  for (std::size_t i = 1; i < report.xs.size(); ++i)
    increasing = increasing && report.xs[i] > report.xs[i - 1];
  note("trace strictly increasing", increasing);

  const double corruption = negative_control ? 1e9 : 1.0;
  for (int i = 4; i <= max_i; ++i) {
    const double bound =
        corruption * static_cast<double>(i) * i * std::log2(static_cast<double>(i) + 1);
    char name[64];
    std::snprintf(name, sizeof name, "x_%d >= i^2 log2(i+1)", i);
    note(name, report.xs[static_cast<std::size_t>(i - 1)] >= TowerReal::from(bound));
  }

  for (int i = 4; i + 2 <= max_i; ++i) {
    char name[64];
    std::snprintf(name, sizeof name, "log2(x_%d) >= x_%d", i + 2, i);
    note(name, report.xs[static_cast<std::size_t>(i + 1)].log2() >=
                   report.xs[static_cast<std::size_t>(i - 1)]);
  }

  // Second recurrence, n_{i+1} = n_i 2^(-m/n_i), over a grid of (n, m/n).
  for (double n : {1024.0, 65536.0, 1048576.0}) {
    for (double ratio : {1.0, 2.0, 16.0, 1024.0}) {
      const double m = n * ratio;
      double ni = n;
      int iterations = 0;
      bool growth_ok = true;
      while (ni > 1.0 && iterations < 1000) {
        const double exponent = m / ni;
        ++iterations;
        const double next = (exponent > 1100.0) ? 0.0 : ni * std::exp2(-exponent);
        // x-domain growth: x_{i+1} >= 2^(x_i m/n) with x_i = n/n_i.
        if (next > 0.0) {
          const double xi = n / ni;
          const double xnext = n / next;
          growth_ok = growth_ok && std::log2(xnext) + 1e-9 >= xi * (m / n);
        }
        ni = next;
      }
      const int bound = 2 + log_star(m) - log_star(m / n);
      char name[96];
      std::snprintf(name, sizeof name,
                    "work-balanced recurrence n=%g m/n=%g: %d iterations <= %d", n, ratio,
                    iterations, bound);
      note(name, growth_ok && iterations <= bound);
    }
  }

  return report;
}

}  // namespace minmax
