#include "fano/catalog.hpp"
#include "fano/enumerate.hpp"
#include "fano/fan.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace fano;

FanoPolytope load_polytope(const std::string& path) {
  VertexFile f = read_vertex_file(path);
  return FanoPolytope::validate(f.dim, f.vertices);
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for smooth Fano lattice polytopes"};
  app.require_subcommand(1);

  std::string input, input_b, format = "json";
  int vertex_index = 1, dim = 2, box = 0, jobs = 1;
  std::vector<std::string> part_paths;

  auto add_input = [&](CLI::App* cmd, bool positional = true) {
    if (positional) cmd->add_option("file", input, "vertex file")->required(false);
    cmd->add_option("--input", input, "vertex file");
  };

  auto* c_validate = app.add_subcommand("validate", "validate a vertex file as a Fano polytope");
  add_input(c_validate);
  auto* c_facets = app.add_subcommand("facets", "facet structure of a vertex file");
  add_input(c_facets);
  auto* c_collections = app.add_subcommand("collections", "primitive collections");
  add_input(c_collections);
  auto* c_relations = app.add_subcommand("relations", "primitive relations with degrees");
  add_input(c_relations);
  auto* c_mori = app.add_subcommand("mori", "relation lattice and extremal rays");
  add_input(c_mori);
  auto* c_walls = app.add_subcommand("walls", "wall relations and total weight");
  add_input(c_walls);
  auto* c_project = app.add_subcommand("project", "projection along a vertex");
  add_input(c_project);
  c_project->add_option("--vertex", vertex_index, "vertex index (1-based)")->required();
  auto* c_invariants = app.add_subcommand("invariants", "invariant report");
  add_input(c_invariants);
  auto* c_isom = app.add_subcommand("isom", "decide isomorphism of two polytopes");
  c_isom->add_option("fileA", input)->required();
  c_isom->add_option("fileB", input_b)->required();
  auto* c_canon = app.add_subcommand("canon", "canonical form and digest");
  add_input(c_canon);
  auto* c_enum = app.add_subcommand("enumerate", "classify Fano polytopes (dim <= 3)");
  c_enum->add_option("--dim", dim, "dimension (1..3)")->required();
  c_enum->add_option("--box", box, "coordinate box bound (default per dimension)");
  c_enum->add_option("--jobs", jobs, "worker threads");
  auto* c_reconstruct = app.add_subcommand("reconstruct", "solve a presentation into coordinates");
  c_reconstruct->add_option("file", input, "presentation file")->required(false);
  c_reconstruct->add_option("--input", input, "presentation file");
  auto* c_verify = app.add_subcommand("catalog-verify", "verify a catalog file");
  c_verify->add_option("file", input, "catalog file")->required(false);
  c_verify->add_option("--input", input, "catalog file");
  c_verify->add_option("--parts", part_paths, "lower-dimensional catalogs for product parts");
  c_verify->add_option("--jobs", jobs, "worker threads");
  auto* c_report = app.add_subcommand("report", "render the catalog table");
  c_report->add_option("file", input, "catalog file")->required(false);
  c_report->add_option("--input", input, "catalog file");
  c_report->add_option("--parts", part_paths, "lower-dimensional catalogs for product parts");
  c_report->add_option("--jobs", jobs, "worker threads");
  app.add_option("--format", format, "json|csv|md")->capture_default_str();
  c_report->add_option("--format", format, "json|csv|md");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_validate) {
      json out;
      try {
        FanoPolytope p = load_polytope(input);
        out["valid"] = true;
        out["dim"] = p.dim();
        out["vertices"] = p.size();
        out["facets"] = p.facets().size();
        out["f_vector"] = ivec_to_json(p.f_vector().f);
      } catch (const validation_error& e) {
        out["valid"] = false;
        out["condition"] = e.condition;
        out["detail"] = e.what();
      }
      print(out);
      return out["valid"].get<bool>() ? 0 : 1;
    }
    if (*c_facets) {
      VertexFile f = read_vertex_file(input);
      Hull h = facets(f.dim, f.vertices);
      json out = json::array();
      for (const auto& facet : h.facets) {
        json jf;
        json verts = json::array();
        for (int v : facet.corners) verts.push_back(v + 1);
        jf["vertices"] = verts;
        jf["normal"] = ivec_to_json(facet.normal);
        jf["level"] = to_i64(facet.level);
        out.push_back(jf);
      }
      print(out);
      return 0;
    }
    if (*c_collections) {
      FanoPolytope p = load_polytope(input);
      json out = json::array();
      for (const auto& c : primitive_collections(p)) {
        json col = json::array();
        for (int v : c) col.push_back(v + 1);
        out.push_back(col);
      }
      print(out);
      return 0;
    }
    if (*c_relations) {
      FanoPolytope p = load_polytope(input);
      json out = json::array();
      for (const auto& r : p.relations()) out.push_back(relation_to_json(r));
      print(out);
      return 0;
    }
    if (*c_mori) {
      FanoPolytope p = load_polytope(input);
      auto rl = relation_lattice(p);
      json out;
      out["lattice_rank"] = rl.basis.rows();
      out["lattice_basis"] = matrix_to_json(rl.basis);
      out["generated_by_primitive_relations"] = rl.generated_by_primitive_relations;
      json rays = json::array();
      for (const auto& r : extremal_rays(p)) {
        json jr = relation_to_json(r);
        auto nb = normal_bundle_type(p, r);
        jr["normal_bundle"] = ivec_to_json(nb.degrees);
        jr["anticanonical_degree"] = to_i64(nb.anticanonical_degree);
        rays.push_back(jr);
      }
      out["extremal_rays"] = rays;
      print(out);
      return 0;
    }
    if (*c_walls) {
      FanoPolytope p = load_polytope(input);
      json out;
      json walls = json::array();
      for (const auto& w : all_walls(p)) walls.push_back(wall_to_json(w));
      out["walls"] = walls;
      if (p.dim() >= 3) out["total_weight"] = to_i64(total_weight(p));
      print(out);
      return 0;
    }
    if (*c_project) {
      FanoPolytope p = load_polytope(input);
      Projection pr = project(p, vertex_index - 1);
      print(projection_to_json(p, pr));
      return 0;
    }
    if (*c_invariants) {
      FanoPolytope p = load_polytope(input);
      print(invariant_report_to_json(invariants(p)));
      return 0;
    }
    if (*c_isom) {
      FanoPolytope a = load_polytope(input);
      FanoPolytope b = load_polytope(input_b);
      auto m = are_isomorphic(a, b);
      if (!m) {
        std::cout << "not isomorphic\n";
        return 1;
      }
      print(matrix_to_json(*m));
      return 0;
    }
    if (*c_canon) {
      FanoPolytope p = load_polytope(input);
      print(canonical_to_json(canonical_form(p)));
      return 0;
    }
    if (*c_enum) {
      EnumConfig cfg;
      cfg.dim = dim;
      cfg.box = box;
      cfg.jobs = jobs;
      auto classes = enumerate_fano(cfg);
      for (const auto& cf : classes) std::cout << canonical_to_json(cf).dump() << "\n";
      std::cout << "classes: " << classes.size() << "\n";
      return 0;
    }
    if (*c_reconstruct) {
      Presentation pres = presentation_from_json(read_json_file(input));
      FanoPolytope p = reconstruct(pres);
      print(vertex_file_to_json(p.dim(), p.vertices()));
      return 0;
    }
    if (*c_verify || *c_report) {
      Catalog cat = load_catalog(input);
      std::vector<Catalog> parts;
      if (part_paths.empty()) {
        parts = load_default_parts(input);
      } else {
        for (const auto& pp : part_paths) parts.push_back(load_catalog(pp));
      }
      VerificationReport rep = verify_catalog(cat, parts, jobs);
      if (*c_report) {
        if (format == "json")
          print(verification_report_to_json(rep));
        else
          std::cout << render_table(rep, cat, format);
        return 0;
      }
      print(verification_report_to_json(rep));
      return rep.exit_code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
