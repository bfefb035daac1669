#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "sigmaperm/lattice.hpp"

namespace sigmaperm {

// Plain-text lattice cache. Layout:
//
//   sigmaperm-lattice 1
//   <content hash, 16 hex digits> <group order> <subgroup count>
//   <order> <normal 0|1> <member index>...      (one line per subgroup)
//
// A file is only accepted for a group whose content hash and order match.

void write_lattice(std::ostream& out, const SubgroupLattice& lattice);

/// Throws ParseError on malformed input or a hash/order mismatch.
SubgroupLattice read_lattice(std::istream& in, GroupPtr group);

/// <dir>/<hash>.lattice
std::filesystem::path lattice_cache_path(const std::filesystem::path& dir,
                                         const FiniteGroup& group);

/// Loads from the cache directory when a matching file exists, otherwise
/// enumerates and writes the file.
SubgroupLattice cached_subgroups(GroupPtr group,
                                 const std::filesystem::path& dir);

}  // namespace sigmaperm
