#include "platcover/catalog.hpp"

namespace platcover {

PlatPresentation CatalogEntry::plat() const {
  return PlatPresentation(BraidWord::from_values(strands, word));
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"chain3",
       6,
       {2, 2, 4, 4},
       3,
       std::vector<std::vector<int>>{{0, -1, 0}, {-1, 0, -1}, {0, -1, 0}}},
      {"hopf", 4, {2, 2}, 2,
       std::vector<std::vector<int>>{{0, -1}, {-1, 0}}},
      {"trefoil", 4, {2, 2, 2}, 1, std::vector<std::vector<int>>{{0}}},
      // Twisted unlink: same link as unlink2 but the crossing breaks
      // condition (2).
      {"twist", 4, {1}, 2, std::vector<std::vector<int>>{{0, 0}, {0, 0}}},
      {"unlink2", 4, {}, 2, std::vector<std::vector<int>>{{0, 0}, {0, 0}}},
  };
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const CatalogEntry& entry : catalog()) {
    if (entry.name == name) return &entry;
  }
  return nullptr;
}

}  // namespace platcover
