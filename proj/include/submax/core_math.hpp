#ifndef SUBMAX_CORE_MATH_HPP
#define SUBMAX_CORE_MATH_HPP

#include <cstdint>
#include <utility>

namespace submax {

// Worst-case per-round losses of committing Bernoulli parameter p when the
// estimated add/remove gains are (a, b). loss_plus covers the case where the
// item belongs to the optimum, loss_minus the case where it does not;
// worst_case_loss hedges against both.
double loss_plus(double add_gain, double remove_gain, double p);
double loss_minus(double add_gain, double remove_gain, double p);
double worst_case_loss(double add_gain, double remove_gain, double p);

// Per-item cap on estimation blocks: ceil(T^(2/3) * ln(dT)^(1/3)).
// Requires d*T >= 2 so the logarithm is positive.
std::int64_t tau_max(std::int64_t horizon, int item_count);

struct ConfidenceParams {
  int d = 1;
  std::int64_t T = 1;
  double delta = 1.0;  // in (0, 1]
  double sigma = 1.0;  // sub-Gaussian noise scale, > 0
  double c = 1.0;      // function range bound, > 0
};

// High-probability radius aggregating noise, sampling and estimation error:
//   sqrt(2(2s^2+c^2)) * sqrt(2 ln(dT) + ln(1/delta))
//     * (1 + 2 sqrt(ln(dT)/T) + (9c/sqrt(2s^2+c^2)) (ln(dT)/T)^(1/3)).
double confidence_radius(const ConfidenceParams& p);

// Companion radius 3 sqrt((2s^2+c^2)(ln(dT/delta) + ln(1+T))).
double gamma_radius(const ConfidenceParams& p);

struct FeasibleInterval {
  bool empty = true;
  double lo = 0.0;
  double hi = 0.0;
};

// {x in [0,1] : worst_case_loss(a, b, x) <= -threshold}, solved in closed
// form from the two linear constraints. threshold must be >= 0.
FeasibleInterval feasible_interval(double add_gain, double remove_gain,
                                   double threshold);

// Minimizer of worst_case_loss over a non-empty interval. The max of two
// linear functions attains its minimum at an endpoint or at their crossing;
// ties resolve to the smallest p.
std::pair<double, double> argmin_loss_on_interval(double add_gain,
                                                  double remove_gain,
                                                  const FeasibleInterval& iv);

// a+/(a+ + b+); returns 1/2 when both positive parts vanish (with true means
// the degenerate case only arises from noise around zero gains, and 1/2 keeps
// the realized loss within |a-b|/4).
double default_probability(double add_gain, double remove_gain);

// Pointwise hardness ratio (a+ + b+)^2 / (a+ - b+)^4; +inf when a+ == b+.
double hardness_ratio(double add_gain, double remove_gain);

// Minimal tau/(g+gamma)^2 above which the sufficient exploration conditions
// admit a commitment parameter, as a piecewise function of the mean gains.
// Defined for mean_add + mean_remove >= 0 (returns +inf outside); boundary
// points take the min of adjacent zones; divergent denominators give +inf.
double zone_threshold(double mean_add, double mean_remove);

}  // namespace submax

#endif
