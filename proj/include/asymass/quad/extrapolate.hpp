#pragma once

#include <map>
#include <string>
#include <vector>

namespace asymass {

/// Decay model of the sampled sequence. Power law samples sit on a geometric
/// radius ladder, exponential samples on an arithmetic one.
enum class DecayModel { power_law, exponential };

struct Sample {
  double r = 0.0;
  double value = 0.0;
};

struct Extrapolation {
  double limit = 0.0;
  double error = 0.0;
  /// Observed decay exponent of the differences (p in r^-p or e^-p rho);
  /// infinite when the sequence is constant up to the noise floor, NaN when
  /// it cannot be estimated (oscillating tail).
  double rate = 0.0;
  /// running[k] is the best estimate using samples 0..k.
  std::vector<double> running;
  std::vector<std::string> warnings;
  bool flagged = false;
};

/// Limit of Q(r) as r -> infinity from samples. Uses Wynn's epsilon
/// algorithm, which is exact on sums of geometric sequences and reduces to
/// Aitken's delta-squared for three points. `noise` is an absolute level
/// below which differences are treated as round-off.
/// Throws ArityError for fewer than three samples and DomainError when the
/// radii are not increasing on the ladder the model expects.
Extrapolation extrapolate(const std::vector<Sample>& samples, DecayModel model,
                          double noise = 0.0);

/// Per-rung values of a functional with its extrapolated limit.
struct MassReport {
  std::string functional;
  int component = -1;  // index a / alpha; -1 for scalar functionals
  std::vector<Sample> samples;
  Extrapolation fit;
  double expected_rate = 0.0;  // 0 when unknown
  double scale = 1.0;          // divisor applied to samples (1/m for centers)
  std::map<std::string, std::string> conventions;

  double limit() const { return fit.limit; }
  double error() const { return fit.error; }
  double rate() const { return fit.rate; }
  bool flagged() const { return fit.flagged; }
};

/// Compares the observed rate against the expected one and flags the report
/// when the observed convergence is more than 50% slower.
void check_rate(MassReport& report);

}  // namespace asymass
