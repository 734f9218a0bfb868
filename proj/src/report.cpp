#include "platcover/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "platcover/catalog.hpp"
#include "platcover/errors.hpp"

namespace platcover {

namespace {

constexpr const char* kGcdNote =
    "meridian/singly tests use gcd(p, c_j) with p the covering degree";

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(ParseError::Kind::BadFile,
                     "cannot open file '" + path + "'");
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    // e.what() carries the byte position of the defect
    throw ParseError(ParseError::Kind::BadFile,
                     "file '" + path + "': " + e.what());
  }
}

int require_int(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(ParseError::Kind::BadFile,
                     "missing or non-integer field '" + key + "'");
  }
  return j[key].get<int>();
}

std::vector<int> require_int_array(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(ParseError::Kind::BadFile,
                     "missing or non-array field '" + key + "'");
  }
  std::vector<int> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) {
      throw ParseError(ParseError::Kind::BadFile,
                       "field '" + key + "' contains a non-integer");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

std::string direction_name(ArcDirection d) {
  return d == ArcDirection::Forward ? "forward" : "backward";
}

std::string strand_direction_name(StrandDirection d) {
  return d == StrandDirection::Descending ? "descending" : "ascending";
}

Json lk_json(const LinkingMatrix& lk) {
  Json rows = Json::array();
  for (const auto& row : lk.entries) rows.push_back(row);
  return rows;
}

Json trace_json(const std::vector<MoveRecord>& trace) {
  Json out = Json::array();
  for (const MoveRecord& m : trace) {
    out.push_back(Json{{"move", move_name(m.type)}, {"i", m.i},
                       {"sign", m.sign}});
  }
  return out;
}

Json classification_json(const CoveringClassification& c) {
  return Json{{"strictly_cyclic", c.strictly_cyclic},
              {"almost_strictly_cyclic", c.almost_strictly_cyclic},
              {"meridian_cyclic", c.meridian_cyclic},
              {"singly_cyclic", c.singly_cyclic},
              {"monodromy_cyclic", c.monodromy_cyclic}};
}

std::string branch_point_label(int index) {
  // Points come ordered A_1, B_1, A_2, B_2, ...
  const int cap = (index + 1) / 2;
  return (index % 2 == 1 ? "A" : "B") + std::to_string(cap);
}

Json cover_header(const CoverComputation& c, const std::string& command) {
  Json out;
  out["command"] = command;
  out["name"] = c.input.name;
  out["p"] = c.assignment.p;
  out["weights"] = c.assignment.weights;
  out["specialized"] = c.specialized;
  out["trace"] = trace_json(c.trace);
  return out;
}

// Weight of each top arc: the class of the component it belongs to.
std::vector<int> top_arc_weights(const CoverComputation& c) {
  std::vector<int> weights;
  weights.reserve(c.special.n());
  for (int i = 1; i <= c.special.n(); ++i) {
    weights.push_back(
        c.assignment.weights[c.partition.top_component[i - 1] - 1]);
  }
  return weights;
}

Json branch_points_json(const CoverComputation& c) {
  Json points = Json::array();
  for (int k = 1; k <= c.branch.point_count(); ++k) {
    points.push_back(Json{{"label", branch_point_label(k)},
                          {"weight", c.branch.weights()[k - 1]}});
  }
  return points;
}

Json bounds_json(const CoverComputation& c, long long genus) {
  return Json{{"genus_bound", genus_bound(c.special.n(), c.assignment.p)},
              {"bridge_bound", bridge_bound(c.assignment.p, genus)},
              {"p_star", p_star(c.assignment.p)}};
}

}  // namespace

NamedPlat plat_from_json(const Json& j) {
  const int strands = require_int(j, "strands");
  const std::vector<int> word = require_int_array(j, "word");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) {
      throw ParseError(ParseError::Kind::BadFile, "field 'name' must be a string");
    }
    name = j["name"].get<std::string>();
  }
  return NamedPlat{PlatPresentation(BraidWord::from_values(strands, word)),
                   name};
}

NamedPlat load_plat_file(const std::string& path) {
  return plat_from_json(read_json_file(path));
}

CoveringSpec covering_from_json(const Json& j) {
  return CoveringSpec{require_int(j, "p"), require_int_array(j, "weights")};
}

CoveringSpec load_covering_file(const std::string& path) {
  return covering_from_json(read_json_file(path));
}

Json plat_json(const PlatPresentation& plat) {
  return Json{{"strands", plat.strand_count()},
              {"word", plat.word().values()}};
}

std::vector<ArcDirection> parse_seed_spec(const std::string& spec, int mu) {
  std::vector<ArcDirection> seeds(mu, ArcDirection::Forward);
  if (spec.empty()) return seeds;
  std::istringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw ParseError(ParseError::Kind::BadFile,
                       "seed item '" + item + "' is not component:direction");
    }
    int component = 0;
    try {
      component = std::stoi(item.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError(ParseError::Kind::BadFile,
                       "seed item '" + item + "' has a non-integer component");
    }
    const std::string dir = item.substr(colon + 1);
    if (dir != "forward" && dir != "backward") {
      throw ParseError(ParseError::Kind::BadFile,
                       "seed direction '" + dir +
                           "' must be forward or backward");
    }
    if (component < 1 || component > mu) {
      throw PreconditionError("seed component " + std::to_string(component) +
                              " out of range for mu = " + std::to_string(mu));
    }
    seeds[component - 1] = dir == "forward" ? ArcDirection::Forward
                                            : ArcDirection::Backward;
  }
  return seeds;
}

Json info_report(const NamedPlat& input, const std::string& seed_spec) {
  const PlatPresentation& plat = input.plat;
  const ComponentPartition part = components(plat);
  const std::vector<ArcDirection> seeds = parse_seed_spec(seed_spec, part.mu);
  const OrientedPlat oriented = orient(plat, part, seeds);
  const EndpointPermutation perm = permutation_of(plat.word());

  Json out;
  out["command"] = "info";
  out["name"] = input.name;
  out["strands"] = plat.strand_count();
  out["word"] = plat.word().values();
  out["n"] = plat.n();
  out["mu"] = part.mu;
  out["n_j"] = part.n_list();
  out["components"] = Json{{"top", part.top_component},
                           {"bottom", part.bottom_component}};
  out["permutation"] = perm.images();
  out["parity_preserving"] = preserves_parity_classes(perm);
  out["conditions"] =
      Json{{"c1", is_condition1(plat, part)},
           {"c2", is_condition2(plat)},
           {"c2prime", is_condition2prime(oriented)},
           {"c2prime_exists", exists_orientation_condition2prime(plat)}};
  Json seeds_json = Json::array();
  for (ArcDirection d : seeds) seeds_json.push_back(direction_name(d));
  out["seeds"] = seeds_json;
  Json top = Json::array();
  Json bottom = Json::array();
  Json strands = Json::array();
  for (ArcDirection d : oriented.top_dir) top.push_back(direction_name(d));
  for (ArcDirection d : oriented.bottom_dir) {
    bottom.push_back(direction_name(d));
  }
  for (StrandDirection d : oriented.strand_dir) {
    strands.push_back(strand_direction_name(d));
  }
  out["orientation"] =
      Json{{"top", top}, {"bottom", bottom}, {"strands", strands}};
  out["lk"] = lk_json(linking_matrix(oriented));
  return out;
}

Json specialize_report(const NamedPlat& input) {
  const ComponentPartition before = components(input.plat);
  const LinkingMatrix lk_before =
      linking_matrix(orient(input.plat, before));

  const SpecializeResult result = specialize(input.plat);

  const ComponentPartition after = components(result.plat);
  const LinkingMatrix lk_after = linking_matrix(orient(result.plat, after));

  Json out;
  out["command"] = "specialize";
  out["name"] = input.name;
  out["input"] = plat_json(input.plat);
  out["output"] = plat_json(result.plat);
  out["trace"] = trace_json(result.trace);
  out["mu"] = after.mu;
  out["n_j"] = after.n_list();
  out["conditions"] = Json{{"c1", is_condition1(result.plat, after)},
                           {"c2", is_condition2(result.plat)}};
  out["invariants"] =
      Json{{"before", Json{{"mu", before.mu},
                           {"n_j", before.n_list()},
                           {"lk", lk_json(lk_before)}}},
           {"after", Json{{"mu", after.mu},
                          {"n_j", after.n_list()},
                          {"lk", lk_json(lk_after)}}},
           {"lk_equivalent", linking_equivalent(lk_before, lk_after)}};
  return out;
}

CoverComputation compute_cover(const NamedPlat& input,
                               const CoveringSpec& spec,
                               const CoverOptions& options) {
  const ComponentPartition initial = components(input.plat);
  if (static_cast<int>(spec.weights.size()) != initial.mu) {
    throw PreconditionError("covering lists " +
                            std::to_string(spec.weights.size()) +
                            " weights for a link with " +
                            std::to_string(initial.mu) + " components");
  }

  PlatPresentation special = input.plat;
  std::vector<MoveRecord> trace;
  bool specialized = false;
  if (!is_condition1(input.plat, initial) || !is_condition2(input.plat)) {
    if (!options.allow_specialize) {
      throw PreconditionError(
          "plat is not special and auto-specialization is disabled");
    }
    SpecializeResult result = specialize(input.plat);
    special = std::move(result.plat);
    trace = std::move(result.trace);
    specialized = true;
  }

  ComponentPartition partition = components(special);

  // Reversing a component's orientation replaces its weight class c by -c.
  std::vector<int> weights = spec.weights;
  const std::vector<ArcDirection> seeds =
      parse_seed_spec(options.seed_spec, partition.mu);
  MonodromyAssignment assignment(spec.p, weights);
  for (int j = 0; j < partition.mu; ++j) {
    if (seeds[j] == ArcDirection::Backward) {
      assignment.weights[j] = spec.p - assignment.weights[j];
    }
  }

  BranchData branch =
      branch_data_from_special_plat(special, partition, assignment);
  return CoverComputation{input,          std::move(special),
                          std::move(trace), specialized,
                          std::move(partition), std::move(assignment),
                          std::move(branch)};
}

Json cover_classify_report(const CoverComputation& c) {
  Json out = cover_header(c, "cover classify");
  out["classification"] = classification_json(classify(c.assignment));
  out["note"] = kGcdNote;
  return out;
}

Json cover_genus_report(const CoverComputation& c) {
  Json out = cover_header(c, "cover genus");
  out["branch_points"] = branch_points_json(c);
  const SurfaceCoveringReport report = euler_characteristic(c.branch);
  out["fiber_sizes"] = report.fiber_sizes;
  out["chi"] = report.chi;
  out["genus"] = report.genus;
  out["connected"] = report.connected;
  out["heegaard_genus"] = heegaard_genus(c.assignment.p, top_arc_weights(c));
  return out;
}

Json cover_bounds_report(const CoverComputation& c) {
  Json out = cover_header(c, "cover bounds");
  const long long genus =
      heegaard_genus(c.assignment.p, top_arc_weights(c));
  out["b"] = c.special.n();
  out["genus"] = genus;
  out["bounds"] = bounds_json(c, genus);
  out["lift_check"] =
      Json{{"available", true}, {"points", c.branch.point_count()}};
  return out;
}

Json cover_full_report(const CoverComputation& c) {
  Json out = cover_header(c, "cover report");
  out["classification"] = classification_json(classify(c.assignment));
  out["note"] = kGcdNote;
  out["branch_points"] = branch_points_json(c);
  const SurfaceCoveringReport report = euler_characteristic(c.branch);
  out["fiber_sizes"] = report.fiber_sizes;
  out["connected"] = report.connected;
  out["chi"] = report.chi;
  out["genus"] = report.genus;
  out["b"] = c.special.n();
  out["bounds"] = bounds_json(c, report.genus);
  out["lift_check"] =
      Json{{"available", true}, {"points", c.branch.point_count()}};
  return out;
}

Json cover_lift_check_report(const CoverComputation& c,
                             std::span<const int> point_perm) {
  Json out = cover_header(c, "cover lift-check");
  out["branch_weights"] = c.branch.weights();
  out["perm"] = std::vector<int>(point_perm.begin(), point_perm.end());
  out["lifts"] = lift_check(point_perm, c.branch);
  return out;
}

Json catalog_list_report() {
  Json entries = Json::array();
  for (const CatalogEntry& entry : catalog()) {
    entries.push_back(Json{{"name", entry.name},
                           {"strands", entry.strands},
                           {"word", entry.word},
                           {"mu", entry.expected_mu}});
  }
  return Json{{"command", "catalog list"}, {"entries", entries}};
}

Json catalog_show_report(const std::string& name) {
  const CatalogEntry* entry = find_catalog_entry(name);
  if (entry == nullptr) {
    throw PreconditionError("no catalog entry named '" + name + "'");
  }
  Json out;
  out["command"] = "catalog show";
  out["entry"] = Json{{"name", entry->name},
                      {"strands", entry->strands},
                      {"word", entry->word},
                      {"mu", entry->expected_mu}};
  if (entry->expected_lk) {
    out["entry"]["lk"] = *entry->expected_lk;
  }
  out["info"] = info_report(NamedPlat{entry->plat(), entry->name});
  return out;
}

namespace {

void render_text_into(const Json& j, const std::string& prefix,
                      std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render_text_into(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else {
    out += prefix + " = " + j.dump() + "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::string out;
  render_text_into(report, "", out);
  return out;
}

}  // namespace platcover
