#include "critgroup/graph_io.hpp"

#include <fstream>

#include "critgroup/error.hpp"

namespace critgroup {
namespace {

VertexId lookup_vertex(const Multigraph& g, const Json& label) {
  if (!label.is_string()) throw Error(ErrorCode::kParse, "vertex labels must be strings");
  auto v = g.find_vertex(label.get<std::string>());
  if (!v) throw Error(ErrorCode::kParse, "unknown vertex '" + label.get<std::string>() + "'");
  return *v;
}

VertexPermutation parse_action(const Multigraph& g, const Json& vmap, const Json* emap) {
  if (!vmap.is_object()) throw Error(ErrorCode::kParse, "actions must map labels to labels");
  std::vector<VertexId> image(g.vertex_count());
  std::vector<bool> set(g.vertex_count(), false);
  for (auto it = vmap.begin(); it != vmap.end(); ++it) {
    const VertexId v = lookup_vertex(g, Json(it.key()));
    image[v] = lookup_vertex(g, it.value());
    set[v] = true;
  }
  // Vertices missing from the map are fixed.
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!set[v]) image[v] = v;
  if (!emap) return VertexPermutation::from_vertex_map(g, image);

  if (!g.has_edge_labels()) throw Error(ErrorCode::kParse, "edge_actions need edge_labels");
  if (!emap->is_object()) throw Error(ErrorCode::kParse, "edge_actions must map labels to labels");
  std::vector<EdgeId> eimg(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) eimg[e] = e;
  for (auto it = emap->begin(); it != emap->end(); ++it) {
    auto from = g.find_edge(it.key());
    if (!it.value().is_string()) throw Error(ErrorCode::kParse, "edge labels must be strings");
    auto to = g.find_edge(it.value().get<std::string>());
    if (!from || !to) throw Error(ErrorCode::kParse, "unknown edge label in edge_actions");
    eimg[*from] = *to;
  }
  return VertexPermutation::from_maps(g, image, eimg);
}

Json permutation_to_json(const Multigraph& g, const VertexPermutation& p) {
  Json j = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) j[g.vertex_label(v)] = g.vertex_label(p(v));
  return j;
}

Json edge_permutation_to_json(const Multigraph& g, const VertexPermutation& p) {
  Json j = Json::object();
  for (EdgeId e = 0; e < g.edge_count(); ++e) j[g.edge_label(e)] = g.edge_label(p.edge(e));
  return j;
}

}  // namespace

GraphFile parse_graph_file(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
      throw Error(ErrorCode::kParse, "graph file needs \"vertices\" and \"edges\"");
    }
    GraphFile out;
    if (j.contains("name")) out.name = j.at("name").get<std::string>();
    const auto labels = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<VertexId, VertexId>> edges;
    Multigraph names(labels.size(), {}, labels);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::kParse, "edges must be label pairs");
      edges.emplace_back(lookup_vertex(names, e[0]), lookup_vertex(names, e[1]));
    }
    std::vector<std::string> edge_labels;
    if (j.contains("edge_labels")) edge_labels = j.at("edge_labels").get<std::vector<std::string>>();
    out.graph = Multigraph(labels.size(), edges, labels, edge_labels);

    if (j.contains("actions")) {
      const Json& a = j.at("actions");
      if (!a.contains("sigma1") || !a.contains("sigma2")) {
        throw Error(ErrorCode::kParse, "actions need sigma1 and sigma2");
      }
      const Json* e1 = nullptr;
      const Json* e2 = nullptr;
      if (j.contains("edge_actions")) {
        e1 = &j.at("edge_actions").at("sigma1");
        e2 = &j.at("edge_actions").at("sigma2");
      }
      out.sigma1 = parse_action(out.graph, a.at("sigma1"), e1);
      out.sigma2 = parse_action(out.graph, a.at("sigma2"), e2);
    }
    return out;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed graph file: ") + e.what());
  } catch (const Error& e) {
    // Constructor validation failures are input problems too.
    if (e.code() == ErrorCode::kInvalidArgument) throw Error(ErrorCode::kParse, e.what());
    throw;
  }
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
  return parse_graph_file(j);
}

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const Multigraph& g) {
  Json j;
  j["vertices"] = g.vertex_labels();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({g.vertex_label(e.u), g.vertex_label(e.v)});
  j["edges"] = edges;
  if (g.has_edge_labels()) {
    Json labels = Json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) labels.push_back(g.edge_label(e));
    j["edge_labels"] = labels;
  }
  return j;
}

Json to_json(const Multigraph& g, const VertexPermutation& sigma1, const VertexPermutation& sigma2) {
  Json j = to_json(g);
  j["actions"] = {{"sigma1", permutation_to_json(g, sigma1)}, {"sigma2", permutation_to_json(g, sigma2)}};
  if (g.has_edge_labels()) {
    j["edge_actions"] = {{"sigma1", edge_permutation_to_json(g, sigma1)},
                         {"sigma2", edge_permutation_to_json(g, sigma2)}};
  }
  return j;
}

Json to_json(const FamilyInstance& f) {
  Json j = to_json(f.graph, f.action.sigma1, f.action.sigma2);
  j["name"] = f.name;
  return j;
}

Json to_json(const FinAbGroup& g) {
  Json factors = Json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(integer_to_json(d));
  return {{"invariant_factors", factors}};
}

Json divisor_to_json(const Multigraph& g, const Divisor& d) {
  Json j = Json::object();
  for (VertexId v = 0; v < d.size(); ++v) j[g.vertex_label(v)] = integer_to_json(d[v]);
  return j;
}

Json to_json(const QuotientResult& q, const Multigraph& source) {
  Json j = to_json(q.quotient);
  Json vmap = Json::object();
  Json mult = Json::object();
  for (VertexId v = 0; v < source.vertex_count(); ++v) {
    vmap[source.vertex_label(v)] = q.quotient.vertex_label(q.vertex_map[v]);
    mult[source.vertex_label(v)] = q.multiplicity[v];
  }
  j["vertex_map"] = vmap;
  j["multiplicity"] = mult;
  j["collapsed_edges"] = q.collapsed_edges;
  return j;
}

Json to_json(const TheoremCheck& c, const Multigraph& g) {
  Json j{{"name", c.name},         {"predicted", c.predicted}, {"computed", c.computed},
         {"pass", c.pass},         {"flagged", c.flagged},     {"skipped", c.skipped},
         {"notes", c.notes}};
  Json w = Json::object();
  for (const auto& [name, d] : c.witnesses) w[name] = divisor_to_json(g, d);
  j["witnesses"] = w;
  return j;
}

Json to_json(const DecompositionReport& r, const Multigraph& g) {
  Json j;
  j["n"] = r.n;
  j["s"] = r.s;
  j["t"] = r.t;
  j["labeled"] = r.labeled;
  j["swapped"] = r.swapped;
  j["jacobian"] = to_json(r.jac);
  j["quotients"] = {{"H1", to_json(r.jac_quotients[0])},
                    {"H2", to_json(r.jac_quotients[1])},
                    {"H3", to_json(r.jac_quotients[2])},
                    {"Ghat", to_json(r.jac_ghat)}};
  j["sum_subgroup"] = to_json(r.sum_subgroup);
  j["kernel"] = to_json(r.kernel);
  j["cokernel"] = to_json(r.cokernel);
  j["exponent"] = integer_to_json(r.exponent);
  j["split_exponent"] = integer_to_json(r.split_exponent);
  j["extension_not_split"] = r.extension_not_split();
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c, g));
  j["checks"] = checks;
  j["pass"] = r.all_pass();
  return j;
}

}  // namespace critgroup
