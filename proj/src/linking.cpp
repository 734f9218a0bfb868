#include "platcover/linking.hpp"

#include <numeric>

#include "platcover/errors.hpp"

namespace platcover {

int crossing_sign(const BraidLetter& letter, StrandDirection dir_left,
                  StrandDirection dir_right) {
  const int dl = dir_left == StrandDirection::Descending ? 1 : -1;
  const int dr = dir_right == StrandDirection::Descending ? 1 : -1;
  return letter.sign * dl * dr;
}

LinkingMatrix linking_matrix(const OrientedPlat& oriented) {
  const int n = oriented.plat.n();
  const int mu = oriented.partition.mu;

  // Strand k (named by its column at t=0) inherits the component of the top
  // cap it hangs from.
  std::vector<int> strand_component(2 * n);
  for (int k = 1; k <= 2 * n; ++k) {
    strand_component[k - 1] = oriented.partition.top_component[(k - 1) / 2];
  }

  std::vector<int> occupant(2 * n);
  std::iota(occupant.begin(), occupant.end(), 1);

  std::vector<std::vector<int>> acc(mu, std::vector<int>(mu, 0));
  for (const BraidLetter& letter : oriented.plat.word().letters()) {
    const int left = occupant[letter.index - 1];
    const int right = occupant[letter.index];
    const int j = strand_component[left - 1];
    const int k = strand_component[right - 1];
    if (j != k) {
      const int s = crossing_sign(letter, oriented.strand_dir[left - 1],
                                  oriented.strand_dir[right - 1]);
      acc[j - 1][k - 1] += s;
      acc[k - 1][j - 1] += s;
    }
    std::swap(occupant[letter.index - 1], occupant[letter.index]);
  }

  LinkingMatrix out;
  out.mu = mu;
  out.entries.assign(mu, std::vector<int>(mu, 0));
  for (int j = 0; j < mu; ++j) {
    for (int k = 0; k < mu; ++k) {
      if (j == k) continue;
      if (acc[j][k] % 2 != 0) {
        throw InternalCheckError(
            "odd inter-component crossing total between components " +
            std::to_string(j + 1) + " and " + std::to_string(k + 1));
      }
      out.entries[j][k] = acc[j][k] / 2;
    }
  }
  return out;
}

bool linking_equivalent(const LinkingMatrix& a, const LinkingMatrix& b,
                        std::span<const int> matching) {
  if (a.mu != b.mu) return false;
  const int mu = b.mu;
  if (!matching.empty() && static_cast<int>(matching.size()) != mu) {
    return false;
  }
  auto mapped = [&](int j) {
    return matching.empty() ? j : matching[j] - 1;
  };

  // Search the 2^(mu-1) reorientation sign vectors (the leading sign is
  // fixed: negating every component leaves the matrix unchanged).
  for (unsigned bits = 0; bits < (1u << (mu > 0 ? mu - 1 : 0)); ++bits) {
    bool ok = true;
    auto sign_of = [&](int j) {
      return j == 0 ? 1 : ((bits >> (j - 1)) & 1u ? -1 : 1);
    };
    for (int j = 0; j < mu && ok; ++j) {
      for (int k = 0; k < mu && ok; ++k) {
        const int expected =
            sign_of(j) * sign_of(k) * a.entries[mapped(j)][mapped(k)];
        ok = b.entries[j][k] == expected;
      }
    }
    if (ok) return true;
    if (mu <= 1) break;
  }
  return false;
}

}  // namespace platcover
