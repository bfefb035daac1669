#include "sigmaperm/lattice_cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "sigmaperm/errors.hpp"

namespace sigmaperm {

namespace {

constexpr const char* kMagic = "sigmaperm-lattice";
constexpr int kVersion = 1;

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

void write_lattice(std::ostream& out, const SubgroupLattice& lattice) {
  const FiniteGroup& g = lattice.group();
  out << kMagic << ' ' << kVersion << '\n';
  out << hex16(g.content_hash()) << ' ' << g.order() << ' ' << lattice.size()
      << '\n';
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Subgroup& s = lattice.at(i);
    out << s.order() << ' ' << (lattice.is_normal(i) ? 1 : 0);
    s.members().for_each([&out](element_index x) { out << ' ' << x; });
    out << '\n';
  }
}

SubgroupLattice read_lattice(std::istream& in, GroupPtr group) {
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != kMagic || version != kVersion) {
    throw ParseError("not a sigmaperm lattice file");
  }
  std::string hash;
  std::size_t order = 0;
  std::size_t count = 0;
  if (!(in >> hash >> order >> count)) {
    throw ParseError("truncated lattice header");
  }
  if (hash != hex16(group->content_hash()) || order != group->order()) {
    throw ParseError("lattice file belongs to a different group");
  }
  std::string line;
  std::getline(in, line);

  std::vector<Subgroup> subgroups;
  std::vector<bool> normal_flags;
  subgroups.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) {
      throw ParseError("lattice file ends after " + std::to_string(i) +
                       " of " + std::to_string(count) + " records");
    }
    std::istringstream record(line);
    std::size_t sub_order = 0;
    int normal = 0;
    if (!(record >> sub_order >> normal) || (normal != 0 && normal != 1)) {
      throw ParseError("malformed lattice record " + std::to_string(i));
    }
    ElementSet members(order);
    std::size_t x = 0;
    while (record >> x) {
      if (x >= order) {
        throw ParseError("member index out of range in record " +
                         std::to_string(i));
      }
      members.set(x);
    }
    if (!record.eof() || members.count() != sub_order) {
      throw ParseError("malformed member list in record " + std::to_string(i));
    }
    try {
      subgroups.push_back(Subgroup::from_members(group, std::move(members)));
    } catch (const InvalidArgument& e) {
      throw ParseError("record " + std::to_string(i) + ": " + e.what());
    }
    normal_flags.push_back(normal == 1);
  }

  SubgroupLattice lattice = [&] {
    try {
      return SubgroupLattice::from_subgroups(group, std::move(subgroups));
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string("lattice file: ") + e.what());
    }
  }();
  // Records are written in canonical order, so flags line up by index.
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (lattice.is_normal(i) != normal_flags[i]) {
      throw ParseError("normal flag mismatch in record " + std::to_string(i));
    }
  }
  return lattice;
}

std::filesystem::path lattice_cache_path(const std::filesystem::path& dir,
                                         const FiniteGroup& group) {
  return dir / (hex16(group.content_hash()) + ".lattice");
}

SubgroupLattice cached_subgroups(GroupPtr group,
                                 const std::filesystem::path& dir) {
  const auto path = lattice_cache_path(dir, *group);
  if (std::ifstream in(path); in) {
    try {
      return read_lattice(in, group);
    } catch (const ParseError&) {
      // Stale or corrupt; rebuild below.
    }
  }
  SubgroupLattice lattice = all_subgroups(group);
  std::filesystem::create_directories(dir);
  std::ofstream out(path);
  if (out) {
    write_lattice(out, lattice);
  }
  return lattice;
}

}  // namespace sigmaperm
