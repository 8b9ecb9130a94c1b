#include "fano/json_io.hpp"

#include <fstream>
#include <sstream>

namespace fano {

json ivec_to_json(const IVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_i64(x));
  return a;
}

IVec ivec_from_json(const json& j) {
  if (!j.is_array()) throw error("expected an array of integers");
  IVec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw error("expected an integer entry");
    v.push_back(Int(x.get<std::int64_t>()));
  }
  return v;
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(ivec_to_json(m.row(i)));
  return rows;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw error("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

VertexFile read_vertex_file(const std::string& path) {
  json j = read_json_file(path);
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw error(path + ": expected { \"dim\": d, \"vertices\": [[...],...] }");
  VertexFile f;
  f.dim = j["dim"].get<int>();
  for (const auto& row : j["vertices"]) {
    IVec v = ivec_from_json(row);
    if (static_cast<int>(v.size()) != f.dim)
      throw error(path + ": vertex of wrong dimension");
    f.vertices.push_back(std::move(v));
  }
  return f;
}

json vertex_file_to_json(int dim, const std::vector<IVec>& verts) {
  json j;
  j["dim"] = dim;
  json rows = json::array();
  for (const auto& v : verts) rows.push_back(ivec_to_json(v));
  j["vertices"] = rows;
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw error("cannot write file: " + path);
  out << content;
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  if (!j.is_object() || !j.contains("n") || !j.contains("dim") || !j.contains("collections"))
    throw error("presentation: expected { n, dim, collections }");
  p.n = j["n"].get<int>();
  p.dim = j["dim"].get<int>();
  for (const auto& c : j["collections"]) {
    PresentationRelation r;
    for (const auto& m : c.at("members")) r.members.push_back(m.get<int>() - 1);
    std::sort(r.members.begin(), r.members.end());
    if (c.contains("target")) {
      for (const auto& [k, v] : c.at("target").items())
        r.target[std::stoi(k) - 1] = Int(v.get<std::int64_t>());
    }
    p.collections.push_back(std::move(r));
  }
  return p;
}

json presentation_to_json(const Presentation& p) {
  json j;
  j["n"] = p.n;
  j["dim"] = p.dim;
  json cols = json::array();
  for (const auto& r : p.collections) {
    json c;
    json members = json::array();
    for (int m : r.members) members.push_back(m + 1);
    c["members"] = members;
    json target = json::object();
    for (const auto& [k, v] : r.target) target[std::to_string(k + 1)] = to_i64(v);
    c["target"] = target;
    cols.push_back(c);
  }
  j["collections"] = cols;
  return j;
}

json relation_to_json(const PrimitiveRelation& r) {
  json j;
  json members = json::array();
  for (int m : r.collection) members.push_back(m + 1);
  j["collection"] = members;
  json target = json::object();
  for (std::size_t i = 0; i < r.support.size(); ++i)
    target[std::to_string(r.support[i] + 1)] = to_i64(r.coeffs[i]);
  j["target"] = target;
  j["degree"] = to_i64(r.degree);
  return j;
}

json wall_to_json(const WallData& w) {
  json j;
  json ridge = json::array();
  for (int v : w.ridge) ridge.push_back(v + 1);
  j["ridge"] = ridge;
  j["opposite"] = {w.opposite_a + 1, w.opposite_b + 1};
  j["coefficients"] = ivec_to_json(w.x);
  j["normal_degree"] = to_i64(w.normal_degree);
  j["anticanonical_degree"] = to_i64(w.anticanonical_degree);
  return j;
}

json invariant_report_to_json(const InvariantReport& r) {
  json j;
  j["dim"] = r.dim;
  j["f_vector"] = ivec_to_json(r.f);
  j["h_vector"] = ivec_to_json(r.h);
  j["b2"] = to_i64(r.b2);
  if (r.b4) j["b4"] = to_i64(*r.b4);
  j["c1_pow_d"] = to_i64(r.c1_pow_d);
  j["h0"] = to_i64(r.h0);
  if (r.c1sq_c2) j["c1_2_c2"] = to_i64(*r.c1sq_c2);
  if (r.aut_dim) j["a"] = to_i64(*r.aut_dim);
  if (r.h21) j["h21"] = to_i64(*r.h21);
  if (r.total_weight) j["total_weight"] = to_i64(*r.total_weight);
  return j;
}

json projection_to_json(const FanoPolytope& p, const Projection& pr) {
  json j;
  j["vertex"] = pr.base + 1;
  j["quotient_matrix"] = matrix_to_json(pr.quotient);
  json images = json::object();
  for (int v = 0; v < p.size(); ++v) {
    if (v == pr.base) continue;
    images[std::to_string(v + 1)] = ivec_to_json(pr.images[v]);
  }
  j["images"] = images;
  json pverts = json::array();
  for (const auto& v : pr.pi_vertices()) pverts.push_back(ivec_to_json(v));
  j["projected_vertices"] = pverts;
  json dps = json::array();
  for (const auto& dp : pr.double_points) {
    json d;
    d["point"] = ivec_to_json(dp.point);
    d["preimages"] = {dp.pre_j + 1, dp.pre_k + 1};
    d["link"] = dp.link + 1;
    d["link_of"] = dp.base + 1;
    dps.push_back(d);
  }
  j["double_points"] = dps;
  if (p.dim() == 4) {
    ProjectionFaceReport rep = classify_projection_faces(p, pr);
    json types = json::array();
    for (auto t : rep.facet_types) types.push_back(to_string(t));
    j["face_types"] = types;
    j["f4_count"] = rep.f4_count;
  }
  return j;
}

json canonical_to_json(const CanonicalForm& cf) {
  json j;
  j["matrix"] = matrix_to_json(cf.matrix);
  j["digest"] = cf.digest;
  return j;
}

}  // namespace fano
