#pragma once

#include "fano/json_io.hpp"

#include <map>
#include <optional>

namespace fano {

struct CatalogEntry {
  enum class Kind { vertices, relations, product };
  int id = 0;
  std::string name;
  Kind kind = Kind::vertices;
  std::vector<IVec> vertices;           // kind == vertices
  Presentation presentation;            // kind == relations
  std::pair<std::string, std::string> parts;  // kind == product, names of lower-dim entries
  std::map<std::string, Int> expected;  // by column key: c1_2|c1_3|c1_4, c1_2_c2, b2, b4, a, h0
  std::string description;
  std::string provenance;
};

struct Catalog {
  int dim = 0;
  std::vector<CatalogEntry> entries;
};

/// Parse a catalog file. Product parts resolve against the given lower
/// dimensional catalogs; a dangling part name is a load error.
Catalog load_catalog(const std::string& path);

struct ResolvedEntry {
  const CatalogEntry* meta = nullptr;
  FanoPolytope polytope;
};

/// Build every entry's polytope (validate / reconstruct / direct_sum).
std::vector<ResolvedEntry> resolve_catalog(const Catalog& cat, const std::vector<Catalog>& parts);

struct InvariantDiff {
  std::string column;
  Int expected, computed;
};

struct EntryReport {
  int id = 0;
  std::string name;
  int n_vertices = 0;
  bool valid = false;
  std::string failure;
  std::string canonical_digest;
  std::vector<InvariantDiff> diffs;
  bool closing_identities_ok = false;  // identities evaluated on recomputed values
  std::optional<bool> reconstruct_roundtrip;  // presentation entries only
  InvariantReport inv;
};

struct PropertyCheck {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
};

struct VerificationReport {
  int dim = 0;
  std::vector<EntryReport> entries;
  std::map<int, int> histogram;  // vertex count -> number of entries
  int distinct_canonical = 0;
  bool pairwise_nonisomorphic = false;
  std::vector<PropertyCheck> properties;
  bool structural_ok = false;
  bool invariants_ok = false;
  bool properties_ok = false;
  int exit_code = 2;
};

/// Cross-module property sweep (the acceptance list) over a set of polytopes.
std::vector<PropertyCheck> run_property_suite(
    const std::vector<std::pair<std::string, const FanoPolytope*>>& polys, int jobs);

VerificationReport verify_catalog(const Catalog& cat, const std::vector<Catalog>& parts, int jobs);

json verification_report_to_json(const VerificationReport& rep);

/// Catalog table in the paper's column order. format: "csv" or "md".
std::string render_table(const VerificationReport& rep, const Catalog& cat, const std::string& format);

/// Default sibling part files (fano2.json, fano3.json next to the input).
std::vector<Catalog> load_default_parts(const std::string& catalog_path);

}  // namespace fano
