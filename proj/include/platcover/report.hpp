#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "platcover/covering.hpp"
#include "platcover/linking.hpp"
#include "platcover/plat.hpp"

namespace platcover {

using Json = nlohmann::ordered_json;

// A plat together with the optional name carried by its source file or
// catalog entry.
struct NamedPlat {
  PlatPresentation plat;
  std::string name;
};

struct CoveringSpec {
  int p;
  std::vector<int> weights;
};

// Plat file: {"strands": 2n, "word": [signed ints], "name": optional}.
NamedPlat plat_from_json(const Json& j);
NamedPlat load_plat_file(const std::string& path);

// Covering spec file: {"p": int, "weights": [int per component]}.
CoveringSpec covering_from_json(const Json& j);
CoveringSpec load_covering_file(const std::string& path);

Json plat_json(const PlatPresentation& plat);

// Parses "1:backward,2:forward" into per-component seeds (defaulting to
// forward) for a plat with mu components.
std::vector<ArcDirection> parse_seed_spec(const std::string& spec, int mu);

// Report builders. All reports are deterministic: fixed key order and the
// canonical component order throughout.
Json info_report(const NamedPlat& input, const std::string& seed_spec = "");
Json specialize_report(const NamedPlat& input);

struct CoverOptions {
  bool allow_specialize = true;
  std::string seed_spec;  // reverses listed components: c_j -> p - c_j
};

// Shared pipeline behind the cover reports: specializes when needed (or
// rejects if not allowed), adjusts weights for reversed seeds, and builds
// the branch data.
struct CoverComputation {
  NamedPlat input;
  PlatPresentation special;
  std::vector<MoveRecord> trace;
  bool specialized;
  ComponentPartition partition;
  MonodromyAssignment assignment;
  BranchData branch;
};

CoverComputation compute_cover(const NamedPlat& input,
                               const CoveringSpec& spec,
                               const CoverOptions& options = {});

Json cover_classify_report(const CoverComputation& c);
Json cover_genus_report(const CoverComputation& c);
Json cover_bounds_report(const CoverComputation& c);
Json cover_full_report(const CoverComputation& c);
Json cover_lift_check_report(const CoverComputation& c,
                             std::span<const int> point_perm);

Json catalog_list_report();
Json catalog_show_report(const std::string& name);

// Flattens a report to "key.path = value" lines for --text output.
std::string render_text(const Json& report);

}  // namespace platcover
