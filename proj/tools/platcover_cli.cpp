// Command-line front end: braid/plat parsing, specialization and branched
// covering reports. Exit codes: 0 success, 1 usage or parse error, 2
// precondition violation, 3 internal verification failure.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "platcover/catalog.hpp"
#include "platcover/errors.hpp"
#include "platcover/report.hpp"

namespace {

using platcover::Json;

struct PlatSourceArgs {
  std::string source;  // file path or catalog:NAME
  std::string word;
  int strands = 0;
  std::string name;
};

struct CoveringArgs {
  std::string file;
  int p = 0;
  std::string weights;
};

void add_plat_options(CLI::App* cmd, PlatSourceArgs& args) {
  cmd->add_option("source", args.source,
                  "plat JSON file, or catalog:NAME for a built-in example");
  cmd->add_option("--word", args.word, "inline braid word, e.g. \"2 -1 2\"");
  cmd->add_option("--strands", args.strands,
                  "strand count for an inline word");
  cmd->add_option("--name", args.name, "name to carry into the report");
}

void add_covering_options(CLI::App* cmd, CoveringArgs& args) {
  cmd->add_option("covering", args.file, "covering spec JSON file");
  cmd->add_option("--p", args.p, "covering degree for an inline spec");
  cmd->add_option("--weights", args.weights,
                  "inline component weights, e.g. \"1,3\"");
}

platcover::NamedPlat resolve_plat(const PlatSourceArgs& args) {
  if (!args.word.empty() || args.strands != 0) {
    if (!args.source.empty()) {
      throw platcover::ParseError(
          platcover::ParseError::Kind::BadFile,
          "give either a plat source or an inline --word, not both");
    }
    return platcover::NamedPlat{
        platcover::PlatPresentation(
            platcover::parse_braid(args.word, args.strands)),
        args.name};
  }
  if (args.source.empty()) {
    throw platcover::ParseError(platcover::ParseError::Kind::BadFile,
                                "no plat given: pass a file, catalog:NAME, "
                                "or --word with --strands");
  }
  if (args.source.starts_with("catalog:")) {
    const std::string name = args.source.substr(8);
    const platcover::CatalogEntry* entry =
        platcover::find_catalog_entry(name);
    if (entry == nullptr) {
      throw platcover::PreconditionError("no catalog entry named '" + name +
                                         "'");
    }
    return platcover::NamedPlat{entry->plat(), entry->name};
  }
  platcover::NamedPlat loaded = platcover::load_plat_file(args.source);
  if (!args.name.empty()) loaded.name = args.name;
  return loaded;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  for (char c : text + ",") {
    if (c == ',' || c == ' ') {
      if (!token.empty()) {
        try {
          out.push_back(std::stoi(token));
        } catch (const std::exception&) {
          throw platcover::ParseError(
              platcover::ParseError::Kind::NonIntegerToken,
              "token '" + token + "' is not an integer");
        }
        token.clear();
      }
    } else {
      token += c;
    }
  }
  return out;
}

platcover::CoveringSpec resolve_covering(const CoveringArgs& args) {
  if (args.p != 0 || !args.weights.empty()) {
    if (!args.file.empty()) {
      throw platcover::ParseError(
          platcover::ParseError::Kind::BadFile,
          "give either a covering file or inline --p/--weights, not both");
    }
    return platcover::CoveringSpec{args.p, parse_int_list(args.weights)};
  }
  if (args.file.empty()) {
    throw platcover::ParseError(
        platcover::ParseError::Kind::BadFile,
        "no covering given: pass a file or --p with --weights");
  }
  return platcover::load_covering_file(args.file);
}

void emit(const Json& report, bool text) {
  if (text) {
    std::cout << platcover::render_text(report);
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plat presentations and branched cyclic covering reports"};
  app.require_subcommand(1);

  bool text = false;
  app.add_flag("--text{true},--json{false}", text,
               "output format (default JSON)");

  PlatSourceArgs info_args;
  std::string info_seeds;
  CLI::App* info = app.add_subcommand(
      "info", "components, conditions, orientation and linking matrix");
  add_plat_options(info, info_args);
  info->add_option("--seed-orientation", info_seeds,
                   "per-component seeds, e.g. \"1:backward,2:forward\"");

  PlatSourceArgs spec_args;
  CLI::App* spec = app.add_subcommand(
      "specialize", "rewrite into a special plat via moves I/I'/II/II'");
  add_plat_options(spec, spec_args);

  CLI::App* cover = app.add_subcommand(
      "cover", "branched cyclic covering reports over a plat");
  cover->require_subcommand(1);

  struct CoverCmd {
    PlatSourceArgs plat;
    CoveringArgs covering;
    bool no_specialize = false;
    std::string seeds;
  };
  CoverCmd report_cmd, classify_cmd, genus_cmd, bounds_cmd, lift_cmd;
  std::string lift_perm;

  auto add_cover_sub = [&](const std::string& name, const std::string& desc,
                           CoverCmd& args) {
    CLI::App* sub = cover->add_subcommand(name, desc);
    add_plat_options(sub, args.plat);
    add_covering_options(sub, args.covering);
    sub->add_flag("--no-specialize", args.no_specialize,
                  "fail instead of auto-specializing a non-special plat");
    sub->add_option("--seed-orientation", args.seeds,
                    "reverse listed components (c_j becomes p - c_j)");
    return sub;
  };

  CLI::App* report_sub = add_cover_sub(
      "report", "combined classification, genus and bounds report",
      report_cmd);
  CLI::App* classify_sub = add_cover_sub(
      "classify", "covering classification flags", classify_cmd);
  CLI::App* genus_sub = add_cover_sub(
      "genus", "branch data, Euler characteristic and genus", genus_cmd);
  CLI::App* bounds_sub = add_cover_sub(
      "bounds", "genus and bridge-number bounds", bounds_cmd);
  CLI::App* lift_sub = add_cover_sub(
      "lift-check", "branch-point permutation lifting criterion", lift_cmd);
  lift_sub->add_option("--perm", lift_perm,
                       "images of branch points 1..N, e.g. \"2 1 4 3\"")
      ->required();

  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "built-in example plats");
  catalog_cmd->require_subcommand(1);
  CLI::App* catalog_list =
      catalog_cmd->add_subcommand("list", "list example names");
  std::string show_name;
  CLI::App* catalog_show =
      catalog_cmd->add_subcommand("show", "entry details plus computed info");
  catalog_show->add_option("name", show_name, "entry name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) {
      emit(platcover::info_report(resolve_plat(info_args), info_seeds), text);
    } else if (spec->parsed()) {
      emit(platcover::specialize_report(resolve_plat(spec_args)), text);
    } else if (cover->parsed()) {
      auto run_cover = [&](const CoverCmd& args) {
        platcover::CoverOptions options;
        options.allow_specialize = !args.no_specialize;
        options.seed_spec = args.seeds;
        return platcover::compute_cover(resolve_plat(args.plat),
                                        resolve_covering(args.covering),
                                        options);
      };
      if (classify_sub->parsed()) {
        emit(platcover::cover_classify_report(run_cover(classify_cmd)), text);
      } else if (genus_sub->parsed()) {
        emit(platcover::cover_genus_report(run_cover(genus_cmd)), text);
      } else if (bounds_sub->parsed()) {
        emit(platcover::cover_bounds_report(run_cover(bounds_cmd)), text);
      } else if (lift_sub->parsed()) {
        const std::vector<int> perm = parse_int_list(lift_perm);
        emit(platcover::cover_lift_check_report(run_cover(lift_cmd), perm),
             text);
      }
    } else if (catalog_cmd->parsed()) {
      if (catalog_list->parsed()) {
        emit(platcover::catalog_list_report(), text);
      } else if (catalog_show->parsed()) {
        emit(platcover::catalog_show_report(show_name), text);
      }
    }
  } catch (const platcover::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const platcover::InternalCheckError& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return 3;
  } catch (const platcover::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const platcover::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
