#include "platcover/covering.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "platcover/errors.hpp"

namespace platcover {

namespace {

int canonical_weight(int p, int raw) {
  int w = raw % p;
  if (w < 0) w += p;
  return w;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int gcd_with_all(int p, const std::vector<int>& values) {
  int g = p;
  for (int v : values) g = std::gcd(g, v);
  return g;
}

int cycle_count(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (int x = start; !seen[x]; x = perm[x] - 1) seen[x] = true;
  }
  return cycles;
}

}  // namespace

MonodromyAssignment::MonodromyAssignment(int degree,
                                         std::span<const int> raw_weights)
    : p(degree) {
  if (p < 2) {
    throw PreconditionError("covering degree must be at least 2, got " +
                            std::to_string(p));
  }
  if (raw_weights.empty()) {
    throw PreconditionError("a covering needs at least one component weight");
  }
  weights.reserve(raw_weights.size());
  for (int raw : raw_weights) {
    const int w = canonical_weight(p, raw);
    if (w == 0) {
      throw PreconditionError("component weight " + std::to_string(raw) +
                              " is zero mod " + std::to_string(p));
    }
    weights.push_back(w);
  }
}

CoveringClassification classify(const MonodromyAssignment& a) {
  const int p = a.p;
  bool all_equal = true;
  bool all_pm_equal = true;
  bool all_coprime = true;
  bool some_coprime = false;
  for (std::size_t j = 0; j < a.weights.size(); ++j) {
    for (std::size_t k = j + 1; k < a.weights.size(); ++k) {
      if (a.weights[j] != a.weights[k]) all_equal = false;
      if (a.weights[j] != a.weights[k] &&
          a.weights[j] != p - a.weights[k]) {
        all_pm_equal = false;
      }
    }
    const bool coprime = std::gcd(p, a.weights[j]) == 1;
    all_coprime = all_coprime && coprime;
    some_coprime = some_coprime || coprime;
  }
  const bool cyclic = gcd_with_all(p, a.weights) == 1;

  // The classes describe coverings, which exist only when the weights
  // jointly generate Z_p, so every flag entails the cyclic one.
  CoveringClassification c;
  c.monodromy_cyclic = cyclic;
  c.singly_cyclic = some_coprime;
  c.meridian_cyclic = all_coprime;
  c.almost_strictly_cyclic = all_pm_equal && cyclic;
  c.strictly_cyclic = all_equal && cyclic;
  return c;
}

BranchData::BranchData(int degree, std::vector<int> weights) {
  BranchData b = unchecked(degree, std::move(weights));
  if (!b.condition_A()) {
    throw PreconditionError(
        "branch weights do not generate Z_" + std::to_string(degree) +
        " (condition A)");
  }
  if (!b.condition_B()) {
    throw PreconditionError("branch weights do not sum to 0 mod " +
                            std::to_string(degree) + " (condition B)");
  }
  *this = std::move(b);
}

BranchData BranchData::unchecked(int degree, std::vector<int> weights) {
  if (degree < 2) {
    throw PreconditionError("covering degree must be at least 2, got " +
                            std::to_string(degree));
  }
  BranchData b;
  b.p_ = degree;
  b.weights_.reserve(weights.size());
  for (int raw : weights) {
    const int w = canonical_weight(degree, raw);
    if (w == 0) {
      throw PreconditionError("branch weight " + std::to_string(raw) +
                              " is zero mod " + std::to_string(degree));
    }
    b.weights_.push_back(w);
  }
  return b;
}

bool BranchData::condition_A() const {
  return gcd_with_all(p_, weights_) == 1;
}

bool BranchData::condition_B() const {
  long long sum = 0;
  for (int w : weights_) sum += w;
  return sum % p_ == 0;
}

std::vector<std::vector<int>> monodromy_rep(const BranchData& b) {
  std::vector<std::vector<int>> perms;
  perms.reserve(b.weights().size());
  for (int w : b.weights()) {
    std::vector<int> perm(b.p());
    for (int x = 1; x <= b.p(); ++x) {
      perm[x - 1] = (x - 1 + w) % b.p() + 1;
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

bool is_connected_cover(const BranchData& b) {
  const std::vector<std::vector<int>> perms = monodromy_rep(b);
  std::vector<bool> in_orbit(b.p(), false);
  std::vector<int> stack{1};
  in_orbit[0] = true;
  int orbit_size = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& perm : perms) {
      const int y = perm[x - 1];
      if (!in_orbit[y - 1]) {
        in_orbit[y - 1] = true;
        ++orbit_size;
        stack.push_back(y);
      }
    }
  }
  const bool transitive = orbit_size == b.p();
  if (transitive != b.condition_A()) {
    throw InternalCheckError(
        "orbit transitivity disagrees with the gcd form of condition A");
  }
  return transitive;
}

SurfaceCoveringReport euler_characteristic(const BranchData& b) {
  if (!b.condition_A()) {
    throw PreconditionError(
        "Euler characteristic needs a connected cover (condition A)");
  }
  if (!b.condition_B()) {
    throw PreconditionError(
        "Euler characteristic needs branch weights summing to 0 (condition "
        "B)");
  }

  const long long p = b.p();
  const long long N = b.point_count();
  SurfaceCoveringReport report;
  report.fiber_sizes.reserve(b.weights().size());
  long long gcd_sum = 0;
  for (int w : b.weights()) {
    const int g = std::gcd(b.p(), w);
    report.fiber_sizes.push_back(g);
    gcd_sum += g;
  }
  report.chi = 2 * p - N * p + gcd_sum;

  // Independent route: chi = p(2 - N) + total cycle count of the monodromy
  // permutations.
  long long cycle_sum = 0;
  for (const auto& perm : monodromy_rep(b)) cycle_sum += cycle_count(perm);
  const long long chi_oracle = p * (2 - N) + cycle_sum;
  if (report.chi != chi_oracle) {
    throw InternalCheckError("Euler characteristic routes disagree: " +
                             std::to_string(report.chi) + " vs " +
                             std::to_string(chi_oracle));
  }

  if (report.chi % 2 != 0 || report.chi > 2) {
    throw InternalCheckError("covering surface has invalid characteristic " +
                             std::to_string(report.chi));
  }
  report.genus = (2 - report.chi) / 2;
  report.connected = is_connected_cover(b);
  if (!report.connected) {
    throw InternalCheckError("condition A held but the orbit check failed");
  }
  return report;
}

BranchData branch_data_from_special_plat(const PlatPresentation& plat,
                                         const ComponentPartition& partition,
                                         const MonodromyAssignment& a) {
  if (!is_condition1(plat, partition) || !is_condition2(plat)) {
    throw PreconditionError("plat is not special");
  }
  if (a.mu() != partition.mu) {
    throw PreconditionError("expected " + std::to_string(partition.mu) +
                            " component weights, got " +
                            std::to_string(a.mu()));
  }
  std::vector<int> weights;
  weights.reserve(2 * plat.n());
  for (int i = 1; i <= plat.n(); ++i) {
    const int c = a.weights[partition.top_component[i - 1] - 1];
    weights.push_back(c);          // A_i
    weights.push_back(a.p - c);    // B_i
  }
  BranchData b = BranchData::unchecked(a.p, std::move(weights));
  if (!b.condition_B()) {
    throw InternalCheckError(
        "paired branch weights failed to sum to 0 mod p");
  }
  return b;
}

long long heegaard_genus(int p, std::span<const int> top_arc_weights) {
  if (p < 2) {
    throw PreconditionError("covering degree must be at least 2");
  }
  const long long b = static_cast<long long>(top_arc_weights.size());
  long long gcd_sum = 0;
  for (int raw : top_arc_weights) {
    const int w = canonical_weight(p, raw);
    if (w == 0) {
      throw PreconditionError("top arc weight " + std::to_string(raw) +
                              " is zero mod " + std::to_string(p));
    }
    gcd_sum += std::gcd(p, w);
  }
  return 1 - p + b * p - gcd_sum;
}

long long genus_bound(int bridge_count, int p) {
  if (bridge_count < 1 || p < 2) {
    throw PreconditionError("genus bound needs b >= 1 and p >= 2");
  }
  return static_cast<long long>(bridge_count - 1) * (p - 1);
}

int p_star(int p) {
  if (p < 2) {
    throw PreconditionError("p_star needs p >= 2");
  }
  int smallest_prime = p;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      smallest_prime = d;
      break;
    }
  }
  return p / smallest_prime;
}

long long bridge_bound(int p, long long genus) {
  if (p < 2 || genus < 0) {
    throw PreconditionError("bridge bound needs p >= 2 and genus >= 0");
  }
  const long long bound = (p - 1 + genus) / (p - p_star(p));
  if (is_prime(p)) {
    const long long prime_form = 1 + genus / (p - 1);
    if (bound != prime_form) {
      throw InternalCheckError("prime-degree bridge bound forms disagree");
    }
  }
  return bound;
}

bool lift_check(std::span<const int> point_perm, const BranchData& b) {
  const int N = b.point_count();
  if (static_cast<int>(point_perm.size()) != N) {
    throw PreconditionError("permutation size " +
                            std::to_string(point_perm.size()) +
                            " does not match " + std::to_string(N) +
                            " branch points");
  }
  std::vector<bool> seen(N, false);
  for (int v : point_perm) {
    if (v < 1 || v > N || seen[v - 1]) {
      throw PreconditionError("point permutation is not a bijection");
    }
    seen[v - 1] = true;
  }
  for (int k = 1; k <= N; ++k) {
    if (b.weights()[point_perm[k - 1] - 1] != b.weights()[k - 1]) {
      return false;
    }
  }
  return true;
}

bool round_trip_check(int bridge_count, int p,
                      const MonodromyAssignment& a) {
  if (a.p != p) {
    throw PreconditionError("assignment degree does not match p");
  }
  for (int w : a.weights) {
    if (std::gcd(p, w) != 1) {
      throw PreconditionError(
          "round trip check needs a meridian-cyclic assignment");
    }
  }
  if (bridge_count < a.mu()) {
    throw PreconditionError(
        "bridge count smaller than the number of components");
  }
  std::vector<int> arc_weights = a.weights;
  arc_weights.resize(bridge_count, a.weights.front());
  const long long g = heegaard_genus(p, arc_weights);
  if (g != genus_bound(bridge_count, p)) return false;
  const long long bound = bridge_bound(p, g);
  if (bound < bridge_count) return false;
  if (is_prime(p) && bound != bridge_count) return false;
  return true;
}

}  // namespace platcover
