#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "sigmaperm/catalog.hpp"
#include "sigmaperm/lattice.hpp"
#include "sigmaperm/subgroup.hpp"

namespace support {

/// Catalog entry per spec, built once per test binary.
inline const sigmaperm::CatalogEntry& entry(const std::string& spec) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<sigmaperm::CatalogEntry>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[spec];
  if (!slot) {
    slot = std::make_unique<sigmaperm::CatalogEntry>(sigmaperm::make_entry(spec));
  }
  return *slot;
}

inline const sigmaperm::SubgroupLattice& lattice(const std::string& spec) {
  return *entry(spec).lattice;
}

inline sigmaperm::element_index element(const sigmaperm::FiniteGroup& g,
                                        const std::string& cycles) {
  return *g.index_of(sigmaperm::parse_cycles(cycles, g.degree()));
}

/// Subgroup generated by ';'-separated cycle strings.
inline sigmaperm::Subgroup generated(const sigmaperm::GroupPtr& g,
                                     const std::string& gens) {
  std::vector<sigmaperm::element_index> indices;
  std::stringstream stream(gens);
  std::string piece;
  while (std::getline(stream, piece, ';')) {
    indices.push_back(element(*g, piece));
  }
  return sigmaperm::Subgroup::generated_by(g, indices);
}

inline std::size_t index(const sigmaperm::SubgroupLattice& l, const std::string& gens) {
  return l.index_of(generated(l.group_ptr(), gens));
}

}  // namespace support
