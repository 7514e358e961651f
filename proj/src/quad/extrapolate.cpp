#include "asymass/quad/extrapolate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "asymass/errors.hpp"

namespace asymass {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Deepest even column of the epsilon table built from s, evaluated at the
// end of the sequence. Stops when a denominator vanishes or when the first
// differences are already below the noise level.
double wynn(const std::vector<double>& s, double noise) {
  const std::size_t m = s.size();
  if (m < 3 || std::abs(s[m - 1] - s[m - 2]) <= noise) return s.back();
  std::vector<double> prev(m, 0.0);  // column -1
  std::vector<double> cur = s;       // column 0
  double best = s.back();
  for (int col = 1; cur.size() >= 2; ++col) {
    std::vector<double> next(cur.size() - 1);
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      const double diff = cur[k + 1] - cur[k];
      if (diff == 0.0 || !std::isfinite(diff)) return best;
      next[k] = prev[k + 1] + 1.0 / diff;
      if (!std::isfinite(next[k])) return best;
    }
    prev.assign(cur.begin(), cur.end());
    cur = std::move(next);
    if (col % 2 == 0) best = cur.back();
  }
  return best;
}

void check_ladder(const std::vector<Sample>& s, DecayModel model) {
  for (std::size_t k = 1; k < s.size(); ++k)
    if (!(s[k].r > s[k - 1].r)) throw DomainError("sample radii must be strictly increasing");
  const bool power = model == DecayModel::power_law;
  if (power && s.front().r <= 0.0) throw DomainError("power-law samples need positive radii");
  const double step0 = power ? s[1].r / s[0].r : s[1].r - s[0].r;
  for (std::size_t k = 2; k < s.size(); ++k) {
    const double step = power ? s[k].r / s[k - 1].r : s[k].r - s[k - 1].r;
    if (std::abs(step - step0) > 1e-9 * std::max(1.0, std::abs(step0)))
      throw DomainError(power ? "power-law extrapolation needs a geometric radius ladder"
                              : "exponential extrapolation needs an arithmetic radius ladder");
  }
}

}  // namespace

Extrapolation extrapolate(const std::vector<Sample>& samples, DecayModel model, double noise) {
  if (samples.size() < 3) {
    std::ostringstream os;
    os << "extrapolation needs at least 3 samples, got " << samples.size();
    throw ArityError(os.str());
  }
  check_ladder(samples, model);
  const std::size_t m = samples.size();
  std::vector<double> q(m);
  double scale = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    q[k] = samples[k].value;
    if (!std::isfinite(q[k])) throw EvaluationError("non-finite sample value");
    scale = std::max(scale, std::abs(q[k]));
  }
  noise = std::max(noise, 64.0 * std::numeric_limits<double>::epsilon() * scale);

  Extrapolation out;
  out.running.push_back(q[0]);
  out.running.push_back(q[1]);
  for (std::size_t k = 2; k < m; ++k)
    out.running.push_back(wynn(std::vector<double>(q.begin(), q.begin() + k + 1), noise));
  out.limit = out.running.back();
  out.error = std::max(std::abs(out.running[m - 1] - out.running[m - 2]), noise);

  const double d1 = q[m - 2] - q[m - 3];
  const double d2 = q[m - 1] - q[m - 2];
  const double step = model == DecayModel::power_law ? std::log(samples[m - 1].r / samples[m - 2].r)
                                                     : samples[m - 1].r - samples[m - 2].r;
  if (std::abs(d1) <= noise && std::abs(d2) <= noise) {
    out.rate = kInf;
  } else if (d1 * d2 > 0.0) {
    out.rate = -std::log(d2 / d1) / step;
  } else {
    out.rate = std::numeric_limits<double>::quiet_NaN();
  }

  // Sign changes in the tail above the noise floor mean the monotone decay
  // model does not describe the data.
  const std::size_t tail = std::min<std::size_t>(3, m - 1);
  double tail_max = 0.0;
  bool oscillates = false;
  double last = 0.0;
  for (std::size_t k = m - tail; k < m; ++k) {
    const double d = q[k] - q[k - 1];
    tail_max = std::max(tail_max, std::abs(d));
    if (std::abs(d) > noise) {
      if (last != 0.0 && d * last < 0.0) oscillates = true;
      last = d;
    }
  }
  if (oscillates) {
    out.flagged = true;
    out.warnings.push_back("non-monotone tail: successive differences change sign");
    out.error = std::max(out.error, tail_max);
  }
  return out;
}

void check_rate(MassReport& report) {
  const double expected = report.expected_rate;
  const double observed = report.fit.rate;
  if (expected <= 0.0 || std::isinf(observed)) return;
  if (std::isnan(observed) || observed < 0.5 * expected) {
    std::ostringstream os;
    os << "observed convergence rate " << observed << " is below half the expected rate "
       << expected;
    report.fit.warnings.push_back(os.str());
    report.fit.flagged = true;
  }
}

}  // namespace asymass
