#ifndef SUBMAX_ORACLES_HPP
#define SUBMAX_ORACLES_HPP

#include <utility>
#include <vector>

#include "submax/item_set.hpp"
#include "submax/set_function.hpp"

namespace submax {

// Gain of adding item i to a prefix subset X (X must only contain items < i):
//   f(X u {i}) - f(X).
double add_gain(const SetFunction& f, int item, const ItemSet& prefix);

// Gain of removing item i from the partially committed full set:
//   f({i+1..d-1} u X) - f({i..d-1} u X),  X subset of {0..i-1}.
double remove_gain(const SetFunction& f, int item, const ItemSet& prefix);

// Exact maximizer by 2^d enumeration (d <= 25). Ties resolve to the smallest
// bit pattern so results are deterministic.
std::pair<ItemSet, double> brute_force_optimum(const SetFunction& f);

// Exhaustive diminishing-gains check for d <= 12, at absolute tolerance tol.
// Cross-validates the equivalent pairwise characterization
// f(A u B) + f(A n B) <= f(A) + f(B); a verdict disagreement between the two
// characterizations throws std::logic_error.
bool check_submodular(const SetFunction& f, double tol = 1e-9);

// Per-item and global double-greedy hardness. h_i is the max over prefix
// subsets X of (a+ + b+)^2 / (a+ - b+)^4 with a = add_gain, b = remove_gain
// and (.)+ = max(., 0); a+ == b+ (including 0/0) gives +inf. The gap is
// h^(-1/2), taken as 0 when h is infinite. h_zone is the tighter per-item
// value built from the piecewise exploration thresholds (zone_threshold);
// h_zone <= h pointwise.
struct HardnessReport {
  std::vector<double> per_item;   // h_i, may be +inf
  std::vector<double> per_item_zone;  // zone-threshold variant, may be +inf
  std::vector<double> gaps;       // h_i^(-1/2), 0 when h_i = +inf
  double global = 0.0;            // sum of per_item, +inf absorbing
};

// d <= 20 (per-item max over 2^i prefix subsets).
HardnessReport compute_hardness(const SetFunction& f);

// Closed-form gaps of the separable family: for item i (after permutation),
//   xi_i >= 0: g({0..i}) - g({0..i-1});  xi_i < 0: g({i+1..}) - g({i..}).
std::vector<double> closed_form_gaps_separable(const SeparableFamilyParams& params);

}  // namespace submax

#endif
