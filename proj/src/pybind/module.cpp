#include "fano/catalog.hpp"
#include "fano/enumerate.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

using namespace fano;

using PyVerts = std::vector<std::vector<std::int64_t>>;

std::vector<IVec> to_ivecs(const PyVerts& verts) {
  std::vector<IVec> out;
  for (const auto& v : verts) {
    IVec w;
    for (auto x : v) w.push_back(Int(x));
    out.push_back(std::move(w));
  }
  return out;
}

PyVerts from_ivecs(const std::vector<IVec>& verts) {
  PyVerts out;
  for (const auto& v : verts) {
    std::vector<std::int64_t> w;
    for (const auto& x : v) w.push_back(to_i64(x));
    out.push_back(std::move(w));
  }
  return out;
}

FanoPolytope make(int dim, const PyVerts& verts) {
  return FanoPolytope::validate(dim, to_ivecs(verts));
}

py::object json_to_py(const json& j) {
  py::module_ pyjson = py::module_::import("json");
  return pyjson.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_fano, m) {
  m.doc() = "Exact smooth Fano lattice polytope toolkit";

  m.def("validate", [](int dim, const PyVerts& verts) {
    try {
      FanoPolytope p = make(dim, verts);
      py::dict out;
      out["valid"] = true;
      out["facets"] = p.facets().size();
      std::vector<std::int64_t> f;
      for (const auto& x : p.f_vector().f) f.push_back(to_i64(x));
      out["f_vector"] = f;
      return out;
    } catch (const validation_error& e) {
      py::dict out;
      out["valid"] = false;
      out["condition"] = e.condition;
      return out;
    }
  });

  m.def("invariants", [](int dim, const PyVerts& verts) {
    return json_to_py(invariant_report_to_json(invariants(make(dim, verts))));
  });

  m.def("collections", [](int dim, const PyVerts& verts) {
    FanoPolytope p = make(dim, verts);
    std::vector<std::vector<int>> out;
    for (auto c : primitive_collections(p)) {
      for (auto& v : c) ++v;  // 1-based, as in the file formats
      out.push_back(std::move(c));
    }
    return out;
  });

  m.def("relations", [](int dim, const PyVerts& verts) {
    FanoPolytope p = make(dim, verts);
    json out = json::array();
    for (const auto& r : p.relations()) out.push_back(relation_to_json(r));
    return json_to_py(out);
  });

  m.def("canonical", [](int dim, const PyVerts& verts) {
    return json_to_py(canonical_to_json(canonical_form(make(dim, verts))));
  });

  m.def("isomorphic", [](int dim_a, const PyVerts& va, int dim_b, const PyVerts& vb) -> py::object {
    auto m2 = are_isomorphic(make(dim_a, va), make(dim_b, vb));
    if (!m2) return py::none();
    return json_to_py(matrix_to_json(*m2));
  });

  m.def("project", [](int dim, const PyVerts& verts, int vertex_1based) {
    FanoPolytope p = make(dim, verts);
    return json_to_py(projection_to_json(p, project(p, vertex_1based - 1)));
  });

  m.def("enumerate_fano", [](int dim, int box, int jobs) {
    EnumConfig cfg;
    cfg.dim = dim;
    cfg.box = box;
    cfg.jobs = jobs;
    json out = json::array();
    for (const auto& cf : enumerate_fano(cfg)) out.push_back(canonical_to_json(cf));
    return json_to_py(out);
  }, py::arg("dim"), py::arg("box") = 0, py::arg("jobs") = 1);

  m.def("reconstruct", [](py::object pres_json) {
    py::module_ pyjson = py::module_::import("json");
    std::string text = pyjson.attr("dumps")(pres_json).cast<std::string>();
    Presentation pres = presentation_from_json(json::parse(text));
    FanoPolytope p = reconstruct(pres);
    return from_ivecs(p.vertices());
  });

  m.def("verify_catalog", [](const std::string& path, int jobs) {
    Catalog cat = load_catalog(path);
    auto parts = load_default_parts(path);
    return json_to_py(verification_report_to_json(verify_catalog(cat, parts, jobs)));
  }, py::arg("path"), py::arg("jobs") = 1);
}
