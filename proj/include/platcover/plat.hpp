#pragma once

#include <string>
#include <vector>

#include "platcover/braid.hpp"

namespace platcover {

enum class ArcKind { Top, Bottom };

// Names the i-th top arc (joining columns 2i-1, 2i at t=0) or the i-th
// bottom arc (joining the same columns at t=1), i in [1, n].
struct ArcRef {
  ArcKind kind;
  int i;

  friend bool operator==(const ArcRef&, const ArcRef&) = default;
};

// Plat closure of a braid word on 2n strands: n top caps and n bottom caps
// joining columns (2i-1, 2i). Presents a link.
class PlatPresentation {
public:
  explicit PlatPresentation(BraidWord word);

  const BraidWord& word() const { return word_; }
  int strand_count() const { return word_.strand_count(); }
  int n() const { return word_.strand_count() / 2; }

  friend bool operator==(const PlatPresentation&,
                         const PlatPresentation&) = default;

private:
  BraidWord word_;
};

// Partition of the 2n arcs into link components, with canonical component
// ids: components are numbered by their smallest top-arc index, so id 1
// always contains the first top arc.
struct ComponentPartition {
  int mu = 0;
  std::vector<int> top_component;     // [n], 1-based component ids
  std::vector<int> bottom_component;  // [n]
  std::vector<int> top_counts;        // per component
  std::vector<int> bottom_counts;     // per component, equals top_counts

  int component_of(const ArcRef& arc) const {
    return arc.kind == ArcKind::Top ? top_component[arc.i - 1]
                                    : bottom_component[arc.i - 1];
  }
  // Per-component arc-pair counts n_j (top count == bottom count).
  std::vector<int> n_list() const { return top_counts; }
};

// Link components computed by traversing the 1-complex whose edges are top
// arcs, bottom arcs, and braid strands. Every component contains equal
// numbers of top and bottom arcs; violations raise InternalCheckError.
ComponentPartition components(const PlatPresentation& plat);

// Condition (1): arcs of each component occupy consecutive index blocks, in
// the same component order on top and bottom.
bool is_condition1(const PlatPresentation& plat,
                   const ComponentPartition& partition);

// Condition (2): the endpoint permutation preserves the odd/even column
// classes.
bool is_condition2(const PlatPresentation& plat);

// Direction of an arc. Forward means A_i -> B_i for a top arc (column 2i-1
// toward 2i) and B'_i -> A'_i for a bottom arc (column 2i toward 2i-1).
enum class ArcDirection { Forward, Backward };

// Direction of a braid strand, keyed by its column at t=0. Descending means
// the link orientation runs from the top of the braid toward the bottom.
enum class StrandDirection { Descending, Ascending };

// A plat together with a coherent orientation of every arc and strand.
// Consistency: at each cap endpoint the outgoing edge continues the
// incoming edge's direction, so each component is an oriented cycle.
struct OrientedPlat {
  PlatPresentation plat;
  ComponentPartition partition;
  std::vector<ArcDirection> top_dir;        // [n]
  std::vector<ArcDirection> bottom_dir;     // [n]
  std::vector<StrandDirection> strand_dir;  // [2n], by column at top
};

// Propagates one seed direction per component (applied to the component's
// lowest-index top arc) around the component cycle. Seeds default to all
// Forward. Propagation always succeeds on a valid plat.
OrientedPlat orient(const PlatPresentation& plat,
                    const ComponentPartition& partition,
                    std::vector<ArcDirection> seeds = {});

// Condition (2'): every arc is directed forward under this orientation.
bool is_condition2prime(const OrientedPlat& oriented);

// True iff some choice of per-component seeds makes every arc forward.
// Components flip independently, so this checks each component alone.
bool exists_orientation_condition2prime(const PlatPresentation& plat);

enum class MoveType { I, IPrime, II, IIPrime };

// One link-preserving move. I/I' transpose adjacent caps (i, i+1) at the
// top/bottom; II/II' absorb a single twist sigma_{2i-1}^sign into cap i at
// the top/bottom. Sign is fixed +1 for I/I'.
struct MoveRecord {
  MoveType type;
  int i;
  int sign = 1;

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

std::string move_name(MoveType type);

// Applies one move: I prepends sigma_{2i} sigma_{2i-1} sigma_{2i+1}
// sigma_{2i}, I' appends the same word, II prepends sigma_{2i-1}^sign and
// II' appends it. Strand count never changes. I/I' need i <= n-1, II/II'
// need i <= n.
PlatPresentation apply_move(const PlatPresentation& plat, const MoveRecord& m);

struct SpecializeResult {
  PlatPresentation plat;
  std::vector<MoveRecord> trace;
};

// Rewrites the plat into a special one (conditions (1) and (2)) using only
// the four moves: sorts top arcs into component blocks with moves I, bottom
// arcs with I', then flips every backward-directed arc of the default
// orientation with II/II'. Verifies both conditions and the preservation of
// mu, the n_j list and the linking matrix on the result; a verification
// failure raises InternalCheckError.
SpecializeResult specialize(const PlatPresentation& plat);

}  // namespace platcover
