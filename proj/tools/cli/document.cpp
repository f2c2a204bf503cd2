#include "document.hpp"

#include <algorithm>

#include "gpcert/algebra/catalog.hpp"

namespace gpcert::cli {

namespace {

[[noreturn]] void schema(const std::string& detail) {
  throw Error(ErrorKind::SchemaError, detail);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::vector<std::int64_t>> table_from_json(const json& j) {
  return j.get<std::vector<std::vector<std::int64_t>>>();
}

json table_to_json(const FiniteGroup& group) {
  return group.rows();
}

std::int64_t element_index(const json& j, const std::function<std::optional<Element>(
                                               const std::string&)>& lookup) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    if (auto e = lookup(j.get<std::string>())) return *e;
    schema("unknown element label '" + j.get<std::string>() + "'");
  }
  schema("elements are integers or labels");
}

}  // namespace

FiniteGroup group_from_json(const json& j) {
  if (j.is_object() && j.contains("catalog")) {
    const std::string name = j.at("catalog").get<std::string>();
    auto group = catalog_group(name);
    if (!group) schema("no catalog group named '" + name + "'");
    return *group;
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  auto table = table_from_json(field(j, "table"));
  if (j.contains("order") && j.at("order").get<std::size_t>() != table.size()) {
    schema("order does not match the table");
  }
  return validate_group(table, std::move(labels));
}

json group_to_json(const FiniteGroup& group) {
  return {{"order", group.order()}, {"table", table_to_json(group)}, {"labels", group.labels()}};
}

SimplicialGraph graph_from_json(const json& j) {
  auto vertices = field(j, "vertices").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      auto pair = e.get<std::vector<std::string>>();
      if (pair.size() != 2) schema("an edge has two endpoints");
      edges.emplace_back(pair[0], pair[1]);
    }
  }
  return SimplicialGraph(std::move(vertices), edges);
}

json graph_to_json(const SimplicialGraph& graph) {
  json edges = json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back({graph.name(u), graph.name(v)});
  return {{"vertices", graph.names()}, {"edges", edges}};
}

GraphProduct presentation_from_json(const json& j) {
  SimplicialGraph graph = graph_from_json(field(j, "graph"));
  const json& groups = field(j, "groups");
  std::vector<FiniteGroup> out;
  for (const std::string& name : graph.names()) {
    if (!groups.contains(name)) schema("no group for vertex '" + name + "'");
    out.push_back(group_from_json(groups.at(name)));
  }
  return GraphProduct(std::move(graph), std::move(out));
}

json presentation_to_json(const GraphProduct& presentation) {
  json groups = json::object();
  const SimplicialGraph& graph = presentation.graph();
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    groups[graph.name(v)] = group_to_json(presentation.group(v));
  }
  return {{"graph", graph_to_json(graph)}, {"groups", groups}};
}

Word word_from_json(const SyllableAlgebra& algebra, const json& j, const LabelLookup& lookup) {
  if (!j.is_array()) schema("a word is a list of [vertex, element] pairs");
  Word word;
  for (const auto& s : j) {
    if (!s.is_array() || s.size() != 2 || !s[0].is_string()) {
      schema("a syllable is a [vertex, element] pair");
    }
    VertexId v = algebra.graph().id(s[0].get<std::string>());
    std::int64_t x = element_index(s[1], [&](const std::string& l) { return lookup(v, l); });
    if (!algebra.contains(v, x)) {
      throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(x) +
                                                  " is not in the group at " +
                                                  algebra.graph().name(v));
    }
    word.push_back({v, static_cast<Element>(x)});
  }
  return word;
}

Word word_from_json(const GraphProduct& presentation, const json& j) {
  return word_from_json(presentation, j, [&](VertexId v, const std::string& label) {
    return presentation.group(v).find_label(label);
  });
}

json word_to_json(const SyllableAlgebra& algebra, const Word& word) {
  json out = json::array();
  for (const Syllable& s : word) out.push_back({algebra.graph().name(s.vertex), s.element});
  return out;
}

GroupChart chart_from_json(const json& j) {
  if (j.is_object() && j.contains("interval")) return integer_interval(j.at("interval").get<int>());
  auto elements = field(j, "elements").get<std::vector<std::string>>();
  auto identity = field(j, "identity").get<std::string>();
  std::vector<std::array<std::string, 3>> mul;
  std::vector<std::array<std::string, 2>> inv;
  if (j.contains("mul")) mul = j.at("mul").get<std::vector<std::array<std::string, 3>>>();
  if (j.contains("inv")) inv = j.at("inv").get<std::vector<std::array<std::string, 2>>>();
  return GroupChart(std::move(elements), identity, mul, inv);
}

json chart_to_json(const GroupChart& chart) {
  json mul = json::array();
  for (const auto& [a, b, c] : chart.products()) {
    mul.push_back({chart.label(a), chart.label(b), chart.label(c)});
  }
  json inv = json::array();
  for (const auto& [a, b] : chart.inverses()) inv.push_back({chart.label(a), chart.label(b)});
  return {{"elements", chart.labels()}, {"identity", chart.label(0)}, {"mul", mul}, {"inv", inv}};
}

AlmostHom almost_hom_from_json(const json& j, const json& charts) {
  AlmostHom h;
  const json& chart = field(j, "chart");
  if (chart.is_string()) {
    if (!charts.is_object() || !charts.contains(chart.get<std::string>())) {
      schema("no chart named '" + chart.get<std::string>() + "'");
    }
    h.source = chart_from_json(charts.at(chart.get<std::string>()));
  } else {
    h.source = chart_from_json(chart);
  }
  if (j.contains("target")) {
    h.target = group_from_json(j.at("target"));
  } else {
    h.target = validate_group(table_from_json(field(j, "target_table")));
  }
  auto source_label = [&](const std::string& l) { return h.source.find(l); };
  auto target_label = [&](const std::string& l) { return h.target.find_label(l); };
  for (const auto& k : field(j, "K")) {
    h.k.insert(static_cast<Element>(element_index(k, source_label)));
  }
  const json& map = field(j, "map");
  if (map.is_array()) {
    for (const auto& x : map) h.map.push_back(static_cast<Element>(element_index(x, target_label)));
  } else {
    h.map.assign(h.source.size(), 0);
    for (Element x = 0; x < h.source.size(); ++x) {
      const std::string& label = h.source.label(x);
      if (!map.contains(label)) schema("map has no image for '" + label + "'");
      h.map[x] = static_cast<Element>(element_index(map.at(label), target_label));
    }
  }
  h.validate();
  return h;
}

json almost_hom_to_json(const AlmostHom& hom) {
  json k = json::array();
  for (Element x : hom.k) k.push_back(hom.source.label(x));
  json map = json::object();
  for (Element x = 0; x < hom.source.size(); ++x) map[hom.source.label(x)] = hom.map[x];
  return {{"chart", chart_to_json(hom.source)},
          {"K", k},
          {"target_table", table_to_json(hom.target)},
          {"map", map}};
}

json certificate_to_json(const SeparationCertificate& cert) {
  const SimplicialGraph& graph = cert.presentation.graph();
  json homs = json::object();
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    homs[graph.name(v)] = cert.vertex_homs[v];
  }
  json groups = json::object();
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    groups[graph.name(v)] = {{"table", table_to_json(cert.presentation.group(v))}};
  }
  return {{"presentation", {{"graph", graph_to_json(graph)}, {"groups", groups}}},
          {"tag", cert.tag.to_string()},
          {"target_table", table_to_json(cert.target)},
          {"vertex_homs", homs},
          {"element", word_to_json(cert.presentation, cert.element)},
          {"image", cert.image},
          {"derivation_log", cert.derivation_log}};
}

CheckResult check_certificate_json(const json& j) {
  RawCertificate raw;
  try {
    const json& presentation = field(j, "presentation");
    const json& graph = field(presentation, "graph");
    raw.vertices = field(graph, "vertices").get<std::vector<std::string>>();
    auto index_of = [&](const json& name) -> std::int64_t {
      auto it = std::find(raw.vertices.begin(), raw.vertices.end(), name.get<std::string>());
      return it == raw.vertices.end() ? -1 : it - raw.vertices.begin();
    };
    if (graph.contains("edges")) {
      for (const auto& e : graph.at("edges")) {
        if (!e.is_array() || e.size() != 2) schema("an edge has two endpoints");
        raw.edges.emplace_back(index_of(e[0]), index_of(e[1]));
      }
    }
    const json& groups = field(presentation, "groups");
    const json& homs = field(j, "vertex_homs");
    for (const std::string& name : raw.vertices) {
      raw.vertex_tables.push_back(table_from_json(field(field(groups, name.c_str()), "table")));
      raw.vertex_homs.push_back(field(homs, name.c_str()).get<std::vector<std::int64_t>>());
    }
    raw.tag = field(j, "tag").get<std::string>();
    raw.target_table = table_from_json(field(j, "target_table"));
    for (const auto& s : field(j, "element")) {
      if (!s.is_array() || s.size() != 2) schema("a syllable is a [vertex, element] pair");
      raw.element.emplace_back(index_of(s[0]), s[1].get<std::int64_t>());
    }
    raw.image = field(j, "image").get<std::int64_t>();
  } catch (const json::exception& e) {
    return {CertificateDiagnostic::MalformedCertificate, e.what()};
  } catch (const Error& e) {
    return {CertificateDiagnostic::MalformedCertificate, e.what()};
  }
  return check_certificate(raw);
}

}  // namespace gpcert::cli
