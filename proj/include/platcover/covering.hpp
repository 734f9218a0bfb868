#pragma once

#include <span>
#include <vector>

#include "platcover/plat.hpp"

namespace platcover {

// Data of a p-fold branched cyclic covering of an oriented mu-component
// link: one weight per component, a nonzero class of Z_p stored as its
// canonical representative in [1, p-1].
struct MonodromyAssignment {
  MonodromyAssignment(int degree, std::span<const int> raw_weights);

  int p;
  std::vector<int> weights;  // one per component, in [1, p-1]

  int mu() const { return static_cast<int>(weights.size()); }
};

// The five nested covering classes. Flags describe the covering the weights
// define, so each class entails a cyclic (connected) covering; the chain
// strictly => almost => meridian => singly => monodromy always holds.
struct CoveringClassification {
  bool strictly_cyclic;
  bool almost_strictly_cyclic;
  bool meridian_cyclic;
  bool singly_cyclic;
  bool monodromy_cyclic;

  friend bool operator==(const CoveringClassification&,
                         const CoveringClassification&) = default;
};

CoveringClassification classify(const MonodromyAssignment& a);

// Weighted branch points on S^2 for a p-fold surface covering. The checked
// constructor enforces condition (A): the weights generate Z_p, and
// condition (B): their sum vanishes mod p. `unchecked` skips both, for
// negative tests and for data whose admissibility is itself the question.
class BranchData {
public:
  BranchData(int degree, std::vector<int> weights);
  static BranchData unchecked(int degree, std::vector<int> weights);

  int p() const { return p_; }
  const std::vector<int>& weights() const { return weights_; }
  int point_count() const { return static_cast<int>(weights_.size()); }

  bool condition_A() const;  // gcd(p, w_1, ..., w_N) == 1
  bool condition_B() const;  // sum w_k == 0 (mod p)

private:
  BranchData() = default;

  int p_ = 0;
  std::vector<int> weights_;
};

// Monodromy permutations: the k-th entry is (1 2 ... p)^{w_k}, given as the
// image list on {1, ..., p}. Their ordered product is the identity exactly
// when condition (B) holds.
std::vector<std::vector<int>> monodromy_rep(const BranchData& b);

// Transitivity of the monodromy permutations on {1, ..., p}, computed as
// the orbit of 1 and cross-checked against the gcd form of condition (A).
bool is_connected_cover(const BranchData& b);

// Combinatorial data of the covering surface: Euler characteristic, genus
// and branch fiber sizes.
struct SurfaceCoveringReport {
  long long chi;
  long long genus;
  std::vector<int> fiber_sizes;  // gcd(p, w_k) per branch point
  bool connected;
};

// chi = 2p - Np + sum gcd(p, w_k), recomputed independently from the cycle
// counts of the monodromy permutations; a mismatch raises
// InternalCheckError. Requires conditions (A) and (B).
SurfaceCoveringReport euler_characteristic(const BranchData& b);

// Branch points of the S^2 covering cut out of a special plat: 2b points
// ordered A_1, B_1, ..., A_b, B_b with weights c_{j_i} and p - c_{j_i},
// where j_i is the component of top arc i. Condition (B) holds by
// construction; condition (A) holds iff the assignment is monodromy-cyclic.
BranchData branch_data_from_special_plat(const PlatPresentation& plat,
                                         const ComponentPartition& partition,
                                         const MonodromyAssignment& a);

// Heegaard genus of the covering built over a 2b-plat with the given top
// arc weights: g = 1 - p + b*p - sum gcd(p, c_h).
long long heegaard_genus(int p, std::span<const int> top_arc_weights);

// Upper bound (b-1)(p-1) for the genus above; attained exactly when every
// weight is coprime to p.
long long genus_bound(int bridge_count, int p);

// Largest proper divisor of p.
int p_star(int p);

// Bridge-number bound floor((p - 1 + g) / (p - p_star(p))); reduces to
// floor(1 + g/(p-1)) for prime p.
long long bridge_bound(int p, long long genus);

// Lifting criterion for a homeomorphism permuting the branch points: it
// lifts iff the weight list is invariant, weights[perm(k)] == weights[k]
// for every k. `point_perm` lists 1-based images of 1..N.
bool lift_check(std::span<const int> point_perm, const BranchData& b);

// Composition consistency of the genus formula with the bridge bound: with
// all-unit weights on b arcs the genus is exactly (b-1)(p-1), the bridge
// bound at that genus is >= b, and equals b for prime p. Requires a
// meridian-cyclic assignment and bridge_count >= mu.
bool round_trip_check(int bridge_count, int p, const MonodromyAssignment& a);

}  // namespace platcover
