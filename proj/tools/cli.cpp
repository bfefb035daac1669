#include "cli.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sigmaperm/catalog.hpp"
#include "sigmaperm/errors.hpp"
#include "sigmaperm/harness.hpp"
#include "sigmaperm/lattice.hpp"
#include "sigmaperm/lattice_cache.hpp"
#include "sigmaperm/pi.hpp"
#include "sigmaperm/report.hpp"
#include "sigmaperm/sigma.hpp"

namespace sigmaperm {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::string group;
  std::string lattice_cache;
  std::string pi;
  std::vector<std::string> h;
  std::string sigma;
  std::string level = "1";
  std::string claims = "all";
  std::size_t max_order = 24;
  std::size_t jobs = 1;
  bool deterministic = false;
};

json subgroup_json(const SubgroupLattice& lattice, std::size_t i) {
  const Subgroup& s = lattice.at(i);
  return {{"index", i},
          {"order", s.order()},
          {"normal", lattice.is_normal(i)},
          {"generators", s.describe()}};
}

std::string subgroup_line(const SubgroupLattice& lattice, std::size_t i) {
  const Subgroup& s = lattice.at(i);
  return "#" + std::to_string(i) + " order " + std::to_string(s.order()) +
         (lattice.is_normal(i) ? " normal " : " ") + s.describe();
}

PrimeSet parse_prime_list(const std::string& text) {
  const SigmaSpec spec = parse_sigma_spec(text);
  if (spec.singletons || spec.rest || spec.blocks.size() != 1) {
    throw ParseError("expected a comma-separated prime list, got \"" + text + "\"");
  }
  return spec.blocks.front();
}

// Generators separated by ';' in each --h value, resolved against the
// element table of `group`.
Subgroup resolve_subgroup(const GroupPtr& group, const std::vector<std::string>& texts) {
  std::vector<element_index> gens;
  for (const auto& text : texts) {
    std::stringstream stream(text);
    std::string piece;
    while (std::getline(stream, piece, ';')) {
      if (piece.find_first_not_of(" \t") == std::string::npos) {
        continue;
      }
      const Permutation p = parse_cycles(piece, group->degree());
      const auto index = group->index_of(p);
      if (!index) {
        throw InvalidArgument("generator " + p.to_cycles() + " is not in the group");
      }
      gens.push_back(*index);
    }
  }
  return Subgroup::generated_by(group, gens);
}

int run_info(const Options& o, std::ostream& out) {
  const CatalogEntry entry = make_entry(o.group);
  const SubgroupLattice& lattice = *entry.lattice;
  const auto normals = lattice.normal_indices();
  const PrimeSet primes = group_primes(*entry.group);
  if (o.json) {
    json normal_list = json::array();
    for (auto n : normals) {
      normal_list.push_back(subgroup_json(lattice, n));
    }
    out << json{{"group", entry.label},
                {"order", entry.group->order()},
                {"degree", entry.group->degree()},
                {"primes", primes.to_string()},
                {"subgroup_count", lattice.size()},
                {"normal_subgroups", normal_list}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << entry.label << ": order " << entry.group->order() << ", degree "
      << entry.group->degree() << ", primes {" << primes.to_string() << "}, "
      << lattice.size() << " subgroups\n";
  out << "normal subgroups (" << normals.size() << "):\n";
  for (auto n : normals) {
    out << "  " << subgroup_line(lattice, n) << '\n';
  }
  return kExitOk;
}

int run_subgroups(const Options& o, std::ostream& out) {
  const GroupPtr group = build_group(o.group);
  const SubgroupLattice lattice = o.lattice_cache.empty()
                                      ? all_subgroups(group)
                                      : cached_subgroups(group, o.lattice_cache);
  if (o.json) {
    json list = json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      list.push_back(subgroup_json(lattice, i));
    }
    out << json{{"group", o.group}, {"count", lattice.size()}, {"subgroups", list}}.dump()
        << '\n';
    return kExitOk;
  }
  out << o.group << ": " << lattice.size() << " subgroups\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out << "  " << subgroup_line(lattice, i) << '\n';
  }
  return kExitOk;
}

int run_projectors(const Options& o, std::ostream& out) {
  const CatalogEntry entry = make_entry(o.group);
  const PrimeSet pi = parse_prime_list(o.pi);
  const auto projectors = gpi_projectors(*entry.lattice, pi);
  if (o.json) {
    json list = json::array();
    for (auto p : projectors) {
      list.push_back(subgroup_json(*entry.lattice, p));
    }
    out << json{{"group", entry.label}, {"pi", pi.to_string()}, {"projectors", list}}.dump()
        << '\n';
    return kExitOk;
  }
  out << entry.label << ": " << projectors.size() << " projectors for pi = {"
      << pi.to_string() << "}\n";
  for (auto p : projectors) {
    out << "  " << subgroup_line(*entry.lattice, p) << '\n';
  }
  return kExitOk;
}

int run_permutable(const Options& o, std::ostream& out) {
  const CatalogEntry entry = make_entry(o.group);
  const SubgroupLattice& lattice = *entry.lattice;
  const Subgroup h = resolve_subgroup(entry.group, o.h);
  const SigmaPartition sigma = canonicalize_sigma(parse_sigma_spec(o.sigma), *entry.group);
  const Level level = parse_level(o.level);
  const SigmaAnalysis analysis(lattice, sigma);
  const auto result = analysis.evaluate(lattice.index_of(h), level);

  std::string witness_block;
  std::string witness_subgroup;
  if (result.witness) {
    witness_block = result.witness->block.to_string();
    if (result.witness->subgroup) {
      const Subgroup& w = lattice.at(*result.witness->subgroup);
      witness_subgroup = w.describe() + " order " + std::to_string(w.order());
    }
  }
  if (o.json) {
    json doc = {{"group", entry.label},
                {"subgroup", h.describe()},
                {"order", h.order()},
                {"sigma", sigma.to_string()},
                {"level", to_string(level)},
                {"verdict", to_string(result.verdict)}};
    if (result.witness) {
      doc["witness"] = {{"block", witness_block}, {"subgroup", witness_subgroup}};
    }
    out << doc.dump() << '\n';
    return kExitOk;
  }
  out << h.describe() << " in " << entry.label << " [" << sigma.to_string()
      << "] level " << to_string(level) << ": " << to_string(result.verdict) << '\n';
  if (result.witness) {
    out << "  witness: block {" << witness_block << "}";
    if (!witness_subgroup.empty()) {
      out << ", subgroup " << witness_subgroup;
    } else {
      out << ", no Hall subgroup";
    }
    out << '\n';
  }
  return kExitOk;
}

int emit_suite(const Options& o, const SuiteResult& result, std::ostream& out) {
  write_reports(out, result.reports, o.json);
  write_summary(out, result.summary, o.json);
  return result.summary.exit_code;
}

int run_verify(const Options& o, std::ostream& out) {
  SuiteOptions options;
  options.claims = parse_claim_list(o.claims);
  if (!o.sigma.empty()) {
    options.sigma = parse_sigma_spec(o.sigma);
  }
  options.jobs = o.jobs;
  options.record_timing = !o.deterministic;
  std::vector<CatalogEntry> catalog{make_entry(o.group)};
  const std::size_t order = catalog.front().group->order();
  return emit_suite(o, run_suite(catalog, order, options), out);
}

int run_scan(const Options& o, std::ostream& out) {
  SuiteOptions options;
  options.claims = parse_claim_list(o.claims);
  if (!o.sigma.empty()) {
    options.sigma = parse_sigma_spec(o.sigma);
  }
  options.jobs = o.jobs;
  options.record_timing = !o.deterministic;
  return emit_suite(o, run_suite(build_catalog(o.max_order), o.max_order, options), out);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite permutation groups and sigma-permutable subgroups"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "structured output, one JSON document per line");

  auto* info = app.add_subcommand("info", "order, prime divisors and normal subgroups");
  info->add_option("group", o.group, "group spec, e.g. S4 or C2xD4")->required();

  auto* subgroups = app.add_subcommand("subgroups", "list the subgroup lattice");
  subgroups->add_option("group", o.group, "group spec")->required();
  subgroups->add_option("--lattice-cache", o.lattice_cache,
                        "directory for cached lattices");

  auto* projectors = app.add_subcommand("projectors", "projectors for the pi-groups");
  projectors->add_option("group", o.group, "group spec")->required();
  projectors->add_option("--pi", o.pi, "prime list, e.g. 2,5")->required();

  auto* permutable = app.add_subcommand("permutable", "evaluate one subgroup");
  permutable->set_help_flag("--help", "print this help message and exit");
  permutable->add_option("group", o.group, "group spec")->required();
  permutable->add_option("--h", o.h, "generators in cycle notation, ';'-separated")
      ->required();
  permutable->add_option("--sigma", o.sigma, "partition, e.g. 2,5|3 or s1")->required();
  permutable->add_option("--level", o.level, "1, 2, 3 or skiba")
      ->check(CLI::IsMember({"1", "2", "3", "skiba"}));

  auto* verify = app.add_subcommand("verify", "check claims on one group");
  verify->add_option("--group", o.group, "group spec")->required();
  verify->add_option("--sigma", o.sigma, "partition; every partition when omitted");
  verify->add_option("--claims", o.claims, "comma-separated claim ids or all");
  verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--deterministic", o.deterministic, "zero all timing fields");

  auto* scan = app.add_subcommand("scan", "check claims over the group catalog");
  scan->add_option("--max-order", o.max_order, "largest group order")
      ->check(CLI::PositiveNumber);
  scan->add_option("--sigma", o.sigma, "partition; every partition when omitted");
  scan->add_option("--claims", o.claims, "comma-separated claim ids or all");
  scan->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_flag("--deterministic", o.deterministic, "zero all timing fields");

  for (auto* sub : {info, subgroups, projectors, permutable, verify, scan}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "sigmaperm: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*info) return run_info(o, out);
    if (*subgroups) return run_subgroups(o, out);
    if (*projectors) return run_projectors(o, out);
    if (*permutable) return run_permutable(o, out);
    if (*verify) return run_verify(o, out);
    return run_scan(o, out);
  } catch (const std::exception& e) {
    err << "sigmaperm: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace sigmaperm
