#pragma once

#include "fano/invariants.hpp"
#include "fano/isom.hpp"
#include "fano/presentation.hpp"
#include "fano/project.hpp"
#include "fano/relations.hpp"

#include <json.hpp>

#include <string>

namespace fano {

using nlohmann::json;

// Vertex indices are 1-based in every file format and CLI emission, matching
// the v_1, v_2, ... numbering of the tables; in-memory indices are 0-based.

json ivec_to_json(const IVec& v);
IVec ivec_from_json(const json& j);
json matrix_to_json(const IntMatrix& m);

struct VertexFile {
  int dim = 0;
  std::vector<IVec> vertices;
};

VertexFile read_vertex_file(const std::string& path);
json vertex_file_to_json(int dim, const std::vector<IVec>& verts);
void write_text_file(const std::string& path, const std::string& content);
json read_json_file(const std::string& path);

Presentation presentation_from_json(const json& j);
json presentation_to_json(const Presentation& p);

json relation_to_json(const PrimitiveRelation& r);
json wall_to_json(const WallData& w);
json invariant_report_to_json(const InvariantReport& r);
json projection_to_json(const FanoPolytope& p, const Projection& pr);
json canonical_to_json(const CanonicalForm& cf);

}  // namespace fano
