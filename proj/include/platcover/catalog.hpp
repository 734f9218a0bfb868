#pragma once

#include <optional>
#include <string>
#include <vector>

#include "platcover/plat.hpp"

namespace platcover {

// A named example plat with its expected component count and, when it is an
// interesting oracle, the expected linking matrix. Tests recompute both; an
// entry whose stored values drift from the computed ones fails validation.
struct CatalogEntry {
  std::string name;
  int strands;
  std::vector<int> word;
  int expected_mu;
  std::optional<std::vector<std::vector<int>>> expected_lk;

  PlatPresentation plat() const;
};

// Built-in examples: two-component unlink, Hopf link, trefoil, a
// parity-violating twisted unlink, and a three-component chain.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* find_catalog_entry(const std::string& name);

}  // namespace platcover
