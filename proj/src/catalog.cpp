#include "fano/catalog.hpp"

#include "fano/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace fano {

namespace {

const char* kind_name(CatalogEntry::Kind k) {
  switch (k) {
    case CatalogEntry::Kind::vertices: return "vertices";
    case CatalogEntry::Kind::relations: return "relations";
    default: return "product";
  }
}

std::vector<std::string> expected_keys(int dim) {
  if (dim == 4) return {"c1_4", "c1_2_c2", "b2", "b4", "a", "h0"};
  if (dim == 3) return {"c1_3", "b2", "h0"};
  if (dim == 2) return {"c1_2", "b2", "h0"};
  return {};
}

// thread pool over an index range with deterministic slot outputs
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  int workers = std::min<std::size_t>(jobs, count);
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= count) break;
          fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

Catalog load_catalog(const std::string& path) {
  json j = read_json_file(path);
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw error(path + ": expected { \"dim\": d, \"entries\": [...] }");
  Catalog cat;
  cat.dim = j["dim"].get<int>();
  std::set<int> ids;
  std::set<std::string> names;
  for (const auto& e : j["entries"]) {
    CatalogEntry entry;
    try {
      entry.id = e.at("id").get<int>();
      entry.name = e.at("name").get<std::string>();
      const auto& c = e.at("construction");
      std::string kind = c.at("kind").get<std::string>();
      if (kind == "vertices") {
        entry.kind = CatalogEntry::Kind::vertices;
        for (const auto& row : c.at("vertices")) entry.vertices.push_back(ivec_from_json(row));
      } else if (kind == "relations") {
        entry.kind = CatalogEntry::Kind::relations;
        json p = c;
        p["dim"] = cat.dim;
        entry.presentation = presentation_from_json(p);
      } else if (kind == "product") {
        entry.kind = CatalogEntry::Kind::product;
        const auto& parts = c.at("parts");
        if (!parts.is_array() || parts.size() != 2)
          throw error("product construction needs exactly two parts");
        entry.parts = {parts[0].get<std::string>(), parts[1].get<std::string>()};
      } else {
        throw error("unknown construction kind: " + kind);
      }
      if (e.contains("expected")) {
        for (const auto& [k, v] : e.at("expected").items()) {
          if (!v.is_number_integer()) throw error("expected." + k + " must be an integer");
          entry.expected[k] = Int(v.get<std::int64_t>());
        }
        for (const auto& [k, v] : entry.expected) {
          auto keys = expected_keys(cat.dim);
          if (std::find(keys.begin(), keys.end(), k) == keys.end())
            throw error("unknown expected column '" + k + "' for dim " + std::to_string(cat.dim));
        }
      }
      entry.description = e.value("description", "");
      entry.provenance = e.value("provenance", "");
    } catch (const std::exception& ex) {
      throw error(path + ": entry " + std::to_string(cat.entries.size() + 1) + ": " + ex.what());
    }
    if (!ids.insert(entry.id).second)
      throw error(path + ": duplicate entry id " + std::to_string(entry.id));
    if (!names.insert(entry.name).second)
      throw error(path + ": duplicate entry name " + entry.name);
    cat.entries.push_back(std::move(entry));
  }
  return cat;
}

std::vector<Catalog> load_default_parts(const std::string& catalog_path) {
  namespace fs = std::filesystem;
  std::vector<Catalog> parts;
  fs::path dir = fs::path(catalog_path).parent_path();
  for (const char* name : {"fano2.json", "fano3.json"}) {
    fs::path p = dir / name;
    if (fs::exists(p) && fs::path(catalog_path).filename() != name)
      parts.push_back(load_catalog(p.string()));
  }
  return parts;
}

std::vector<ResolvedEntry> resolve_catalog(const Catalog& cat, const std::vector<Catalog>& parts) {
  // resolve lower-dimensional part polytopes by name
  std::map<std::string, FanoPolytope> part_polytopes;
  for (const auto& pc : parts) {
    auto resolved = resolve_catalog(pc, {});
    for (auto& r : resolved)
      part_polytopes.emplace(r.meta->name, std::move(r.polytope));
  }

  std::vector<ResolvedEntry> out;
  for (const auto& entry : cat.entries) {
    ResolvedEntry r;
    r.meta = &entry;
    switch (entry.kind) {
      case CatalogEntry::Kind::vertices:
        r.polytope = FanoPolytope::validate(cat.dim, entry.vertices);
        break;
      case CatalogEntry::Kind::relations: {
        Presentation p = entry.presentation;
        p.dim = cat.dim;
        r.polytope = reconstruct(p);
        break;
      }
      case CatalogEntry::Kind::product: {
        auto a = part_polytopes.find(entry.parts.first);
        auto b = part_polytopes.find(entry.parts.second);
        if (a == part_polytopes.end() || b == part_polytopes.end())
          throw error("entry " + entry.name + ": unresolved product part '" +
                      (a == part_polytopes.end() ? entry.parts.first : entry.parts.second) + "'");
        r.polytope = direct_sum(a->second, b->second);
        if (r.polytope.dim() != cat.dim)
          throw error("entry " + entry.name + ": product dimension mismatch");
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

Int computed_column(const InvariantReport& inv, const std::string& col) {
  if (col == "b2") return inv.b2;
  if (col == "b4") return inv.b4.value();
  if (col == "h0") return inv.h0;
  if (col == "a") return inv.aut_dim.value();
  if (col == "c1_2_c2") return inv.c1sq_c2.value();
  if (col == "c1_2" || col == "c1_3" || col == "c1_4") return inv.c1_pow_d;
  throw error("unknown invariant column: " + col);
}

struct SuiteContext {
  std::vector<PropertyCheck>* checks;
  std::mutex mutex;
  void record(std::size_t check_idx, long count, std::vector<std::string> fails) {
    std::lock_guard<std::mutex> lk(mutex);
    (*checks)[check_idx].checks += count;
    for (auto& f : fails) (*checks)[check_idx].failures.push_back(std::move(f));
  }
};

// one projection with its derived data, cached per (polytope, vertex)
struct ProjectionData {
  Projection pr;
  RationalPolytope q;
  std::vector<IVec> lattice;
  bool ok = false;
  std::string failure;
};

}  // namespace

std::vector<PropertyCheck> run_property_suite(
    const std::vector<std::pair<std::string, const FanoPolytope*>>& polys, int jobs) {
  std::vector<PropertyCheck> checks = {
      {"relation-degrees", 0, {}},
      {"two-element-collections", 0, {}},
      {"relation-lattice-generation", 0, {}},
      {"total-weight", 0, {}},
      {"bounds-and-dehn-sommerville", 0, {}},
      {"projection-reflexive", 0, {}},
      {"projection-face-types", 0, {}},
      {"double-points", 0, {}},
      {"central-symmetry-mirror", 0, {}},
      {"f3-formula", 0, {}},
      {"mori-wall-containment", 0, {}},
      {"extremal-face-condition", 0, {}},
      {"min-valence-two-collection", 0, {}},
      {"divisor-fano-corollary", 0, {}},
  };
  SuiteContext ctx;
  ctx.checks = &checks;

  parallel_for(polys.size(), jobs, [&](std::size_t pi) {
    const auto& [name, pp] = polys[pi];
    const FanoPolytope& p = *pp;
    const int d = p.dim();
    auto fail = [&](std::size_t idx, const std::string& what) {
      ctx.record(idx, 0, {name + ": " + what});
    };

    {  // relation degrees and sizes
      long cnt = 0;
      for (const auto& r : p.relations()) {
        ++cnt;
        if (r.degree < 1) fail(0, "relation with degree " + r.degree.str());
        if (r.collection.size() > static_cast<std::size_t>(d) + 1)
          fail(0, "collection larger than d+1");
      }
      ctx.record(0, cnt, {});
    }

    {  // two-element collections: v_i + v_j in {0} union V
      long cnt = 0;
      std::set<IVec> vertex_set(p.vertices().begin(), p.vertices().end());
      for (const auto& r : p.relations()) {
        if (r.collection.size() != 2) continue;
        ++cnt;
        IVec s = add(p.vertex(r.collection[0]), p.vertex(r.collection[1]));
        if (!is_zero(s) && !vertex_set.count(s))
          fail(1, "2-collection sums outside {0} and the vertex set");
      }
      ctx.record(1, cnt, {});
    }

    {  // L(P) generated by primitive relations
      auto rl = relation_lattice(p);
      if (!rl.generated_by_primitive_relations) fail(2, "kernel lattice not generated, SNF index > 1");
      ctx.record(2, 1, {});
    }

    if (d >= 3) {  // total weight identity, inequality, wall degrees
      long cnt = 0;
      Int sum = 0;
      for (const auto& w : all_walls(p)) {
        ++cnt;
        sum += w.normal_degree;
        if (w.anticanonical_degree < 1) fail(3, "wall with anticanonical degree < 1");
      }
      const auto& f = p.f_vector();
      if (sum != 12 * f[d - 3] - 3 * (d - 1) * f[d - 2]) fail(3, "total weight identity failed");
      if (12 * f[d - 3] < (3 * d - 4) * f[d - 2]) fail(3, "12 f_{d-3} >= (3d-4) f_{d-2} failed");
      ctx.record(3, cnt, {});
    }

    {  // vertex bounds, and for d=4 Dehn-Sommerville + edge bound
      auto b = bounds_check(p);
      if (!b.all_ok()) fail(4, "bounds check failed");
      ctx.record(4, 1, {});
    }

    // projections are reused by several checks; compute each once
    std::vector<ProjectionData> proj(p.size());
    for (int i = 0; i < p.size(); ++i) {
      try {
        proj[i].pr = project(p, i);  // throws when a double point fails to resolve
        proj[i].q = RationalPolytope::from_lattice_points(d - 1, proj[i].pr.distinct_points);
        proj[i].lattice = lattice_points(proj[i].q);
        proj[i].ok = true;
      } catch (const error& e) {
        proj[i].failure = e.what();
        fail(7, "P_" + std::to_string(i + 1) + ": " + e.what());
      }
    }

    {  // projections: reflexive with unique interior point 0
      long cnt = 0;
      for (int i = 0; i < p.size(); ++i) {
        if (!proj[i].ok) continue;
        ++cnt;
        bool levels_one = true;
        for (const auto& ineq : proj[i].q.ineqs)
          if (ineq.level != 1) levels_one = false;
        if (!levels_one) fail(5, "P_" + std::to_string(i + 1) + " not reflexive");
        auto interior = interior_lattice_points(proj[i].q);
        if (interior.size() != 1 || !is_zero(interior[0]))
          fail(5, "P_" + std::to_string(i + 1) + " interior lattice points != {0}");
      }
      ctx.record(5, cnt, {});
    }

    if (d == 4) {  // face classification of every 3-dim projection
      long cnt = 0;
      for (int i = 0; i < p.size(); ++i) {
        if (!proj[i].ok) continue;
        bool antipodal = false;
        for (const auto& r : p.relations())
          if (r.collection.size() == 2 && r.support.empty() &&
              (r.collection[0] == i || r.collection[1] == i))
            antipodal = true;
        try {
          auto rep = classify_projection_faces(p, proj[i].pr, proj[i].lattice);
          cnt += static_cast<long>(rep.facet_types.size());
          if (antipodal) {
            for (auto t : rep.facet_types)
              if (t != FaceType::F1 && t != FaceType::F4)
                fail(6, "P_" + std::to_string(i + 1) +
                            " has a non-F1/F4 face despite an antipodal pair");
          }
        } catch (const error& e) {
          fail(6, "P_" + std::to_string(i + 1) + ": " + e.what());
        }
      }
      ctx.record(6, cnt, {});
    }

    {  // double point resolution and the d/d-1 lattice point counts
      long cnt = 0;
      for (int i = 0; i < p.size(); ++i) {
        if (!proj[i].ok) continue;
        const auto& pr = proj[i].pr;
        cnt += static_cast<long>(pr.double_points.size());
        if (d == 4) {
          std::set<IVec> doubles;
          for (const auto& dp : pr.double_points) doubles.insert(dp.point);
          for (const auto& f : pr.hull.facets) {
            std::vector<IVec> on_face;
            for (const auto& x : proj[i].lattice)
              if (dot(f.normal, x) == f.level) on_face.push_back(x);
            int db = 0;
            for (const auto& x : on_face)
              if (doubles.count(x)) ++db;
            if (on_face.size() == 4 && db > 0) fail(7, "4-point 2-face contains a double point");
            if (on_face.size() == 3 && db > 1) fail(7, "3-point 2-face with two double points");
          }
        }
      }
      ctx.record(7, cnt, {});
    }

    {  // central symmetry: mirrored relations with unit coefficients
      long cnt = 0;
      for (const auto& r0 : p.relations()) {
        if (r0.collection.size() != 2 || !r0.support.empty()) continue;
        for (int flip = 0; flip < 2; ++flip) {
          int i = r0.collection[flip], j = r0.collection[1 - flip];
          for (const auto& r : p.relations()) {
            if (!std::binary_search(r.collection.begin(), r.collection.end(), i)) continue;
            Int csum = 0;
            for (const auto& c : r.coeffs) csum += c;
            if (csum + 1 != Int(r.collection.size())) continue;  // degree 1 with v_i present
            ++cnt;
            bool units = true;
            for (const auto& c : r.coeffs)
              if (c != 1) units = false;
            if (!units) {
              fail(8, "degree-1 relation through an antipodal vertex has a coefficient > 1");
              continue;
            }
            // mirrored relation: {v_j} + supports -> members minus v_i
            std::vector<int> mcol = r.support;
            mcol.push_back(j);
            std::sort(mcol.begin(), mcol.end());
            std::vector<int> msup;
            for (int v : r.collection)
              if (v != i) msup.push_back(v);
            bool found = false;
            for (const auto& m : p.relations()) {
              if (m.collection != mcol || m.support != msup) continue;
              bool ones = true;
              for (const auto& c : m.coeffs)
                if (c != 1) ones = false;
              if (ones) found = true;
            }
            if (!found) fail(8, "mirror relation missing for an antipodal pair");
          }
        }
      }
      ctx.record(8, cnt, {});
    }

    if (d == 4) {  // f3 formula for every antipodal pair
      long cnt = 0;
      for (const auto& r : p.relations()) {
        if (r.collection.size() != 2 || !r.support.empty()) continue;
        for (int flip = 0; flip < 2; ++flip) {
          ++cnt;
          int i = r.collection[flip], j = r.collection[1 - flip];
          if (!f3_formula_check(p, i, j)) fail(9, "f3 formula failed at an antipodal pair");
        }
      }
      ctx.record(9, cnt, {});
    }

    if (d >= 2) {  // Mori cone contains every wall relation
      long cnt = 0;
      for (const auto& w : all_walls(p)) {
        ++cnt;
        if (!wall_in_mori_cone(p, w)) fail(10, "wall relation outside the primitive-relation cone");
      }
      ctx.record(10, cnt, {});
    }

    {  // extremal face condition for degree-1 relations
      long cnt = 0;
      for (const auto& r : p.relations()) {
        if (r.degree != 1) continue;
        for (int v : r.collection) {
          ++cnt;
          std::vector<int> face = r.support;
          for (int w : r.collection)
            if (w != v) face.push_back(w);
          std::sort(face.begin(), face.end());
          if (!p.is_face(face)) fail(11, "support + (k-1)-subset is not a face");
        }
      }
      ctx.record(11, cnt, {});
    }

    if (d == 4) {  // valence >= 7 everywhere forces a 2-element collection
      int minval = p.size() ? p.valence(0) : 0;
      for (int i = 1; i < p.size(); ++i) minval = std::min(minval, p.valence(i));
      if (minval >= 7) {
        bool has2 = false;
        for (const auto& r : p.relations())
          if (r.collection.size() == 2) has2 = true;
        if (!has2) fail(12, "min valence >= 7 but no 2-element collection");
      }
      ctx.record(12, 1, {});
    }

    {  // divisor corollary: min degree >= 2 through v_i forces P_i Fano
      long cnt = 0;
      for (int i = 0; i < p.size(); ++i) {
        if (!proj[i].ok) continue;
        std::optional<Int> min_deg;
        for (const auto& r : p.relations()) {
          if (!std::binary_search(r.collection.begin(), r.collection.end(), i)) continue;
          if (!min_deg || r.degree < *min_deg) min_deg = r.degree;
        }
        if (!min_deg || *min_deg < 2) continue;
        ++cnt;
        bool pi_fano = true;
        try {
          FanoPolytope::validate(d - 1, proj[i].pr.pi_vertices());
        } catch (const validation_error&) {
          pi_fano = false;
        }
        if (!pi_fano) fail(13, "P_" + std::to_string(i + 1) + " not Fano despite degrees >= 2");
      }
      ctx.record(13, cnt, {});
    }
  });

  return checks;
}

VerificationReport verify_catalog(const Catalog& cat, const std::vector<Catalog>& parts, int jobs) {
  VerificationReport rep;
  rep.dim = cat.dim;
  rep.entries.resize(cat.entries.size());

  std::vector<std::optional<FanoPolytope>> polytopes(cat.entries.size());

  // resolution is cheap; do it serially for deterministic error surfaces
  std::map<std::string, FanoPolytope> part_polytopes;
  for (const auto& pc : parts) {
    auto resolved = resolve_catalog(pc, {});
    for (auto& r : resolved) part_polytopes.emplace(r.meta->name, std::move(r.polytope));
  }
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    const auto& entry = cat.entries[i];
    auto& er = rep.entries[i];
    er.id = entry.id;
    er.name = entry.name;
    try {
      switch (entry.kind) {
        case CatalogEntry::Kind::vertices:
          polytopes[i] = FanoPolytope::validate(cat.dim, entry.vertices);
          break;
        case CatalogEntry::Kind::relations: {
          Presentation pres = entry.presentation;
          pres.dim = cat.dim;
          polytopes[i] = reconstruct(pres);
          break;
        }
        case CatalogEntry::Kind::product: {
          auto a = part_polytopes.find(entry.parts.first);
          auto b = part_polytopes.find(entry.parts.second);
          if (a == part_polytopes.end() || b == part_polytopes.end())
            throw error("unresolved product part");
          polytopes[i] = direct_sum(a->second, b->second);
          break;
        }
      }
      er.valid = true;
      er.n_vertices = polytopes[i]->size();
    } catch (const std::exception& e) {
      er.valid = false;
      er.failure = std::string(kind_name(entry.kind)) + ": " + e.what();
    }
  }

  parallel_for(cat.entries.size(), jobs, [&](std::size_t i) {
    auto& er = rep.entries[i];
    if (!er.valid) return;
    try {
      const FanoPolytope& p = *polytopes[i];
      er.canonical_digest = canonical_form(p).digest;
      er.inv = invariants(p);
      for (const auto& [col, expected] : cat.entries[i].expected) {
        Int computed = computed_column(er.inv, col);
        if (computed != expected) er.diffs.push_back({col, expected, computed});
      }
      // closing identities on the recomputed values
      if (cat.dim == 4) {
        Int c4 = er.inv.c1_pow_d, cc = *er.inv.c1sq_c2;
        bool ok = (cc + 2 * c4) % 12 == 0;
        ok = ok && er.inv.h0 == 1 + (cc + 2 * c4) / 12;
        ok = ok && (2 * c4 - 5 * cc) % 12 == 0;
        ok = ok && *er.inv.aut_dim == 22 + 3 * er.inv.b2 - *er.inv.b4 + (2 * c4 - 5 * cc) / 12;
        ok = ok && *er.inv.h21 == er.inv.h0 - *er.inv.aut_dim - 1;
        er.closing_identities_ok = ok;
      } else {
        er.closing_identities_ok = true;
      }
      if (cat.entries[i].kind == CatalogEntry::Kind::relations) {
        FanoPolytope round = reconstruct(presentation_of(p));
        er.reconstruct_roundtrip = are_isomorphic(p, round).has_value();
      }
    } catch (const std::exception& e) {
      er.valid = false;
      er.failure = std::string("verification: ") + e.what();
    }
  });

  std::set<std::string> digests;
  for (const auto& er : rep.entries) {
    if (!er.valid) continue;
    rep.histogram[er.n_vertices] += 1;
    digests.insert(er.canonical_digest);
  }
  rep.distinct_canonical = static_cast<int>(digests.size());
  rep.pairwise_nonisomorphic =
      rep.distinct_canonical == static_cast<int>(cat.entries.size()) &&
      std::all_of(rep.entries.begin(), rep.entries.end(), [](const EntryReport& e) { return e.valid; });

  std::vector<std::pair<std::string, const FanoPolytope*>> suite_input;
  for (std::size_t i = 0; i < cat.entries.size(); ++i)
    if (polytopes[i]) suite_input.push_back({cat.entries[i].name, &*polytopes[i]});
  rep.properties = run_property_suite(suite_input, jobs);

  rep.structural_ok = rep.pairwise_nonisomorphic;
  for (const auto& er : rep.entries) {
    if (!er.valid) rep.structural_ok = false;
    if (er.reconstruct_roundtrip && !*er.reconstruct_roundtrip) rep.structural_ok = false;
  }
  rep.properties_ok = std::all_of(rep.properties.begin(), rep.properties.end(),
                                  [](const PropertyCheck& c) { return c.failures.empty(); });
  rep.invariants_ok = true;
  for (const auto& er : rep.entries) {
    if (!er.diffs.empty()) rep.invariants_ok = false;
    if (!er.closing_identities_ok) rep.invariants_ok = false;
  }
  if (!rep.structural_ok || !rep.properties_ok)
    rep.exit_code = 2;
  else if (!rep.invariants_ok)
    rep.exit_code = 3;
  else
    rep.exit_code = 0;
  return rep;
}

json verification_report_to_json(const VerificationReport& rep) {
  json j;
  j["dim"] = rep.dim;
  json entries = json::array();
  for (const auto& er : rep.entries) {
    json e;
    e["id"] = er.id;
    e["name"] = er.name;
    e["valid"] = er.valid;
    if (!er.valid) {
      e["failure"] = er.failure;
    } else {
      e["n_vertices"] = er.n_vertices;
      e["canonical_digest"] = er.canonical_digest;
      e["invariants"] = invariant_report_to_json(er.inv);
      json diffs = json::array();
      for (const auto& d : er.diffs) {
        json dd;
        dd["column"] = d.column;
        dd["expected"] = to_i64(d.expected);
        dd["computed"] = to_i64(d.computed);
        diffs.push_back(dd);
      }
      e["diffs"] = diffs;
      e["closing_identities_ok"] = er.closing_identities_ok;
      if (er.reconstruct_roundtrip) e["reconstruct_roundtrip"] = *er.reconstruct_roundtrip;
    }
    entries.push_back(e);
  }
  j["entries"] = entries;
  json hist = json::object();
  for (const auto& [n, c] : rep.histogram) hist[std::to_string(n)] = c;
  j["vertex_histogram"] = hist;
  j["distinct_canonical_forms"] = rep.distinct_canonical;
  j["pairwise_nonisomorphic"] = rep.pairwise_nonisomorphic;
  json props = json::array();
  for (const auto& c : rep.properties) {
    json p;
    p["name"] = c.name;
    p["checks"] = c.checks;
    p["failures"] = c.failures;
    props.push_back(p);
  }
  j["properties"] = props;
  j["structural_ok"] = rep.structural_ok;
  j["invariants_ok"] = rep.invariants_ok;
  j["properties_ok"] = rep.properties_ok;
  j["exit_code"] = rep.exit_code;
  return j;
}

std::string render_table(const VerificationReport& rep, const Catalog& cat, const std::string& format) {
  const bool md = format == "md";
  if (!md && format != "csv") throw error("render_table: format must be csv or md");
  std::ostringstream os;
  std::vector<std::string> cols;
  if (cat.dim == 4) cols = {"n0", "c1^4", "c1^2c2", "b2", "b4", "a(V)", "h^0", "type"};
  else if (cat.dim == 3) cols = {"n0", "c1^3", "b2", "h^0", "type"};
  else cols = {"n0", "c1^2", "b2", "h^0", "type"};

  auto emit_row = [&](const std::vector<std::string>& cells) {
    if (md) {
      os << "|";
      for (const auto& c : cells) os << " " << c << " |";
      os << "\n";
    } else {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
      os << "\n";
    }
  };
  emit_row(cols);
  if (md) {
    std::vector<std::string> dashes(cols.size(), "---");
    emit_row(dashes);
  }
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    const auto& er = rep.entries[i];
    const auto& entry = cat.entries[i];
    if (!er.valid) {
      emit_row({std::to_string(er.id), "-", "-", "-", "-"});
      continue;
    }
    std::string type = entry.name;
    if (!entry.description.empty()) type += ", " + entry.description;
    std::vector<std::string> cells;
    if (cat.dim == 4) {
      cells = {std::to_string(er.id), er.inv.c1_pow_d.str(), er.inv.c1sq_c2->str(),
               er.inv.b2.str(), er.inv.b4->str(), er.inv.aut_dim->str(), er.inv.h0.str(), type};
    } else {
      cells = {std::to_string(er.id), er.inv.c1_pow_d.str(), er.inv.b2.str(), er.inv.h0.str(), type};
    }
    emit_row(cells);
  }
  return os.str();
}

}  // namespace fano
