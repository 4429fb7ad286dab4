#ifndef SUBMAX_SET_FUNCTION_HPP
#define SUBMAX_SET_FUNCTION_HPP

#include <functional>
#include <memory>
#include <vector>

#include "submax/item_set.hpp"
#include "submax/rng.hpp"

namespace submax {

// Evaluable bounded set-function over {0, ..., d-1} with declared range
// [0, c]. Evaluation is pure; instances are immutable after construction and
// safe for concurrent use.
class SetFunction {
 public:
  SetFunction(int item_count, double range_bound,
              std::function<double(const ItemSet&)> eval);

  int item_count() const { return d_; }
  double range_bound() const { return c_; }

  // f(A). Throws std::domain_error when A contains an item index >= d.
  double eval(const ItemSet& A) const;

  // Table-backed copy (bit-identical values, O(1) eval). Requires d <= 20.
  SetFunction tabulated() const;

 private:
  int d_;
  double c_;
  std::function<double(const ItemSet&)> eval_;
};

// Parameters of the separable power family
//   g(X) = (sum_{i in X, xi_i>=0} xi_i)^nu
//          - (sum_{i in X, xi_i<0} -xi_i)^(1/nu) + ||xi_-||_1^(1/nu),
// with xi in [-1,1]^d and nu in (0,1]. The constant offset makes g
// nonnegative; declared range bound is (sum of positive xi)^nu + offset.
struct SeparableFamilyParams {
  std::vector<double> xi;
  double nu = 1.0;
  // Optional item reordering applied up front: slot i takes xi[permutation[i]].
  std::vector<int> permutation;
};

SetFunction make_separable_family(const SeparableFamilyParams& params);

// Additive function f(A) = sum_{i in A} weights[i], all weights >= 0.
SetFunction make_modular(const std::vector<double>& weights);

// Range validation: exhaustive for d <= 12, otherwise 10^4 uniform random
// sets. Returns true iff 0 - tol <= f(A) <= c + tol for every checked A.
bool check_range(const SetFunction& f, RngStream rng, double tol = 1e-9);

}  // namespace submax

#endif
