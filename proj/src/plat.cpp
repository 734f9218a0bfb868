#include "platcover/plat.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "platcover/errors.hpp"
#include "platcover/linking.hpp"

namespace platcover {

namespace {

// Minimal union-find over arc nodes: top arc i -> node i-1, bottom arc i ->
// node n+i-1.
struct DisjointSet {
  std::vector<int> parent;

  explicit DisjointSet(int size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

int cap_of_column(int column) { return (column + 1) / 2; }

}  // namespace

PlatPresentation::PlatPresentation(BraidWord word) : word_(std::move(word)) {}

ComponentPartition components(const PlatPresentation& plat) {
  const int n = plat.n();
  const EndpointPermutation perm = permutation_of(plat.word());

  DisjointSet dsu(2 * n);
  for (int k = 1; k <= 2 * n; ++k) {
    // strand k joins top cap ceil(k/2) to bottom cap ceil(perm(k)/2)
    dsu.unite(cap_of_column(k) - 1, n + cap_of_column(perm.image_of(k)) - 1);
  }

  ComponentPartition part;
  part.top_component.assign(n, 0);
  part.bottom_component.assign(n, 0);
  std::vector<int> id_of_root(2 * n, 0);
  for (int i = 1; i <= n; ++i) {
    int root = dsu.find(i - 1);
    if (id_of_root[root] == 0) id_of_root[root] = ++part.mu;
    part.top_component[i - 1] = id_of_root[root];
  }
  for (int i = 1; i <= n; ++i) {
    int root = dsu.find(n + i - 1);
    if (id_of_root[root] == 0) {
      throw InternalCheckError("bottom arc " + std::to_string(i) +
                               " belongs to a component with no top arc");
    }
    part.bottom_component[i - 1] = id_of_root[root];
  }

  part.top_counts.assign(part.mu, 0);
  part.bottom_counts.assign(part.mu, 0);
  for (int id : part.top_component) ++part.top_counts[id - 1];
  for (int id : part.bottom_component) ++part.bottom_counts[id - 1];
  if (part.top_counts != part.bottom_counts) {
    throw InternalCheckError(
        "component has unequal top and bottom arc counts");
  }
  return part;
}

bool is_condition1(const PlatPresentation& plat,
                   const ComponentPartition& partition) {
  const int n = plat.n();
  for (int i = 1; i < n; ++i) {
    if (partition.top_component[i - 1] > partition.top_component[i]) {
      return false;
    }
    if (partition.bottom_component[i - 1] > partition.bottom_component[i]) {
      return false;
    }
  }
  return true;
}

bool is_condition2(const PlatPresentation& plat) {
  return preserves_parity_classes(permutation_of(plat.word()));
}

OrientedPlat orient(const PlatPresentation& plat,
                    const ComponentPartition& partition,
                    std::vector<ArcDirection> seeds) {
  const int n = plat.n();
  if (seeds.empty()) {
    seeds.assign(partition.mu, ArcDirection::Forward);
  } else if (static_cast<int>(seeds.size()) != partition.mu) {
    throw PreconditionError("expected one orientation seed per component (" +
                            std::to_string(partition.mu) + "), got " +
                            std::to_string(seeds.size()));
  }

  const EndpointPermutation perm = permutation_of(plat.word());

  OrientedPlat out{plat, partition,
                   std::vector<ArcDirection>(n, ArcDirection::Forward),
                   std::vector<ArcDirection>(n, ArcDirection::Forward),
                   std::vector<StrandDirection>(2 * n,
                                                StrandDirection::Descending)};
  std::vector<bool> top_done(n, false);

  // Seed arc of component j: its lowest-index top arc.
  std::vector<int> seed_arc(partition.mu, 0);
  for (int i = n; i >= 1; --i) seed_arc[partition.top_component[i - 1] - 1] = i;

  for (int j = 1; j <= partition.mu; ++j) {
    const int start = seed_arc[j - 1];
    int arc = start;
    ArcDirection dir = seeds[j - 1];
    // Walk the component cycle: top arc, descending strand, bottom arc,
    // ascending strand, next top arc, ...
    while (true) {
      out.top_dir[arc - 1] = dir;
      top_done[arc - 1] = true;
      // Flow exits the cap at B (column 2i) when forward, at A otherwise.
      const int exit_top =
          dir == ArcDirection::Forward ? 2 * arc : 2 * arc - 1;
      out.strand_dir[exit_top - 1] = StrandDirection::Descending;

      const int enter_bottom = perm.image_of(exit_top);
      const int bottom_arc = cap_of_column(enter_bottom);
      // Entering at B' (even column) continues a forward bottom arc.
      const ArcDirection bottom_dir = enter_bottom % 2 == 0
                                          ? ArcDirection::Forward
                                          : ArcDirection::Backward;
      out.bottom_dir[bottom_arc - 1] = bottom_dir;
      const int exit_bottom = bottom_dir == ArcDirection::Forward
                                  ? 2 * bottom_arc - 1
                                  : 2 * bottom_arc;

      const int enter_top = perm.preimage_of(exit_bottom);
      out.strand_dir[enter_top - 1] = StrandDirection::Ascending;
      const int next_arc = cap_of_column(enter_top);
      // Entering at A (odd column) continues a forward top arc.
      const ArcDirection next_dir = enter_top % 2 == 1
                                        ? ArcDirection::Forward
                                        : ArcDirection::Backward;
      if (next_arc == start) {
        if (next_dir != seeds[j - 1]) {
          throw InternalCheckError(
              "orientation propagation closed inconsistently on component " +
              std::to_string(j));
        }
        break;
      }
      arc = next_arc;
      dir = next_dir;
    }
  }

  for (int i = 1; i <= n; ++i) {
    if (!top_done[i - 1]) {
      throw InternalCheckError("orientation propagation missed top arc " +
                               std::to_string(i));
    }
  }
  return out;
}

bool is_condition2prime(const OrientedPlat& oriented) {
  auto forward = [](ArcDirection d) { return d == ArcDirection::Forward; };
  return std::all_of(oriented.top_dir.begin(), oriented.top_dir.end(),
                     forward) &&
         std::all_of(oriented.bottom_dir.begin(), oriented.bottom_dir.end(),
                     forward);
}

bool exists_orientation_condition2prime(const PlatPresentation& plat) {
  const ComponentPartition partition = components(plat);
  const OrientedPlat oriented = orient(plat, partition);
  // Flipping a component's seed flips exactly its arcs, so a component
  // admits an all-forward orientation iff its arcs currently agree.
  for (int j = 1; j <= partition.mu; ++j) {
    bool any_forward = false;
    bool any_backward = false;
    for (int i = 1; i <= plat.n(); ++i) {
      if (partition.top_component[i - 1] == j) {
        (oriented.top_dir[i - 1] == ArcDirection::Forward ? any_forward
                                                          : any_backward) =
            true;
      }
      if (partition.bottom_component[i - 1] == j) {
        (oriented.bottom_dir[i - 1] == ArcDirection::Forward ? any_forward
                                                             : any_backward) =
            true;
      }
    }
    if (any_forward && any_backward) return false;
  }
  return true;
}

std::string move_name(MoveType type) {
  switch (type) {
    case MoveType::I:
      return "I";
    case MoveType::IPrime:
      return "I'";
    case MoveType::II:
      return "II";
    case MoveType::IIPrime:
      return "II'";
  }
  throw PreconditionError("unknown move type");
}

PlatPresentation apply_move(const PlatPresentation& plat,
                            const MoveRecord& m) {
  const int n = plat.n();
  const bool cap_transposition =
      m.type == MoveType::I || m.type == MoveType::IPrime;
  const int max_i = cap_transposition ? n - 1 : n;
  if (m.i < 1 || m.i > max_i) {
    throw PreconditionError("move " + move_name(m.type) + "(" +
                            std::to_string(m.i) + ") out of range for n = " +
                            std::to_string(n));
  }
  if (m.sign != 1 && m.sign != -1) {
    throw PreconditionError("move sign must be +1 or -1");
  }
  if (cap_transposition && m.sign != 1) {
    throw PreconditionError("moves I and I' carry fixed sign +1");
  }

  std::vector<BraidLetter> letters;
  if (cap_transposition) {
    letters = {BraidLetter{2 * m.i, 1}, BraidLetter{2 * m.i - 1, 1},
               BraidLetter{2 * m.i + 1, 1}, BraidLetter{2 * m.i, 1}};
  } else {
    letters = {BraidLetter{2 * m.i - 1, m.sign}};
  }

  const bool at_top = m.type == MoveType::I || m.type == MoveType::II;
  BraidWord word = at_top ? prepend(plat.word(), letters)
                          : append(plat.word(), letters);
  return PlatPresentation(std::move(word));
}

namespace {

// Twist sign for move II at cap i: cancel against an adjacent
// sigma_{2i-1}^s when possible, otherwise -1.
int twist_sign_front(const BraidWord& word, int generator) {
  if (!word.empty() && word.letters().front().index == generator) {
    return -word.letters().front().sign;
  }
  return -1;
}

int twist_sign_back(const BraidWord& word, int generator) {
  if (!word.empty() && word.letters().back().index == generator) {
    return -word.letters().back().sign;
  }
  return -1;
}

}  // namespace

SpecializeResult specialize(const PlatPresentation& input) {
  const int n = input.n();
  const ComponentPartition before = components(input);
  const LinkingMatrix lk_before = linking_matrix(orient(input, before));

  PlatPresentation plat = input;
  std::vector<MoveRecord> trace;

  // Sort top arcs into component blocks by swapping adjacent inversions.
  // Canonical ids are stable under such swaps, so this is plain bubble sort.
  const int guard = n * n + 1;
  for (int step = 0;; ++step) {
    if (step > guard) {
      throw InternalCheckError("top-arc sorting failed to terminate");
    }
    const ComponentPartition part = components(plat);
    int pos = 0;
    for (int i = 1; i < n; ++i) {
      if (part.top_component[i - 1] > part.top_component[i]) {
        pos = i;
        break;
      }
    }
    if (pos == 0) break;
    const MoveRecord m{MoveType::I, pos, 1};
    plat = apply_move(plat, m);
    trace.push_back(m);
  }

  // Same for bottom arcs with moves I'.
  for (int step = 0;; ++step) {
    if (step > guard) {
      throw InternalCheckError("bottom-arc sorting failed to terminate");
    }
    const ComponentPartition part = components(plat);
    int pos = 0;
    for (int i = 1; i < n; ++i) {
      if (part.bottom_component[i - 1] > part.bottom_component[i]) {
        pos = i;
        break;
      }
    }
    if (pos == 0) break;
    const MoveRecord m{MoveType::IPrime, pos, 1};
    plat = apply_move(plat, m);
    trace.push_back(m);
  }

  // Flip every backward arc of the default orientation. A twist at cap i
  // flips that arc's direction and no other, so one pass suffices. Seed
  // arcs are forward by construction and never flipped.
  {
    const ComponentPartition part = components(plat);
    const OrientedPlat oriented = orient(plat, part);
    for (int i = 1; i <= n; ++i) {
      if (oriented.top_dir[i - 1] == ArcDirection::Backward) {
        const MoveRecord m{MoveType::II, i,
                           twist_sign_front(plat.word(), 2 * i - 1)};
        plat = apply_move(plat, m);
        trace.push_back(m);
      }
    }
    for (int i = 1; i <= n; ++i) {
      if (oriented.bottom_dir[i - 1] == ArcDirection::Backward) {
        const MoveRecord m{MoveType::IIPrime, i,
                           twist_sign_back(plat.word(), 2 * i - 1)};
        plat = apply_move(plat, m);
        trace.push_back(m);
      }
    }
  }

  // Verify the contract before returning.
  const ComponentPartition after = components(plat);
  if (!is_condition1(plat, after)) {
    throw InternalCheckError("specialize output violates condition (1)");
  }
  if (!is_condition2(plat)) {
    throw InternalCheckError("specialize output violates condition (2)");
  }
  if (after.mu != before.mu || after.n_list() != before.n_list()) {
    throw InternalCheckError("specialize changed the component structure");
  }
  const LinkingMatrix lk_after = linking_matrix(orient(plat, after));
  if (!linking_equivalent(lk_before, lk_after)) {
    throw InternalCheckError("specialize changed the linking matrix");
  }

  return SpecializeResult{std::move(plat), std::move(trace)};
}

}  // namespace platcover
