// Shared test helpers: deterministic random plat corpus and independent
// oracles kept separate from the library implementation paths they check.
#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "platcover/catalog.hpp"
#include "platcover/linking.hpp"
#include "platcover/plat.hpp"

namespace testsupport {

inline platcover::BraidWord random_word(std::mt19937& rng, int max_n,
                                        int max_len) {
  std::uniform_int_distribution<int> n_dist(1, max_n);
  const int n = n_dist(rng);
  std::uniform_int_distribution<int> len_dist(0, max_len);
  const int len = len_dist(rng);
  std::vector<platcover::BraidLetter> letters;
  letters.reserve(len);
  std::uniform_int_distribution<int> index_dist(1, 2 * n - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  for (int i = 0; i < len; ++i) {
    letters.push_back(
        platcover::BraidLetter{index_dist(rng), sign_dist(rng) ? 1 : -1});
  }
  return platcover::BraidWord(2 * n, std::move(letters));
}

// The acceptance corpus: >= 200 random plats (2n <= 10, length <= 30) plus
// every catalog entry. Seeded, so every run sees the same corpus.
inline std::vector<platcover::PlatPresentation> corpus(int random_count = 220) {
  std::mt19937 rng(20260810);
  std::vector<platcover::PlatPresentation> plats;
  plats.reserve(random_count + 8);
  for (const platcover::CatalogEntry& entry : platcover::catalog()) {
    plats.push_back(entry.plat());
  }
  for (int i = 0; i < random_count; ++i) {
    plats.emplace_back(random_word(rng, 5, 30));
  }
  return plats;
}

// Oracle cycle count of x -> x + c (mod p) on {1..p}, by explicit walking.
inline int rotation_cycle_count(int p, int c) {
  std::vector<bool> seen(p, false);
  int cycles = 0;
  for (int start = 0; start < p; ++start) {
    if (seen[start]) continue;
    ++cycles;
    int x = start;
    while (!seen[x]) {
      seen[x] = true;
      x = (x + c) % p;
    }
  }
  return cycles;
}

// Oracle largest proper divisor by downward search.
inline int brute_p_star(int p) {
  for (int d = p / 2; d >= 1; --d) {
    if (p % d == 0) return d;
  }
  return 1;
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Component matching across a move, new id -> old id, read off the arcs the
// move does not touch (bottom arcs for move I, top arcs otherwise).
inline std::vector<int> match_components_across_move(
    const platcover::ComponentPartition& before,
    const platcover::ComponentPartition& after, platcover::MoveType type) {
  const bool use_bottom = type == platcover::MoveType::I;
  const std::vector<int>& old_ids =
      use_bottom ? before.bottom_component : before.top_component;
  const std::vector<int>& new_ids =
      use_bottom ? after.bottom_component : after.top_component;
  std::vector<int> matching(after.mu, 0);
  for (std::size_t i = 0; i < new_ids.size(); ++i) {
    matching[new_ids[i] - 1] = old_ids[i];
  }
  return matching;
}

}  // namespace testsupport
