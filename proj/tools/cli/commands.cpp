#include "commands.hpp"

#include <map>

#include "gpcert/product/amalgam.hpp"
#include "gpcert/product/retraction.hpp"
#include "gpcert/proc/pro_c.hpp"
#include "gpcert/separation/engine.hpp"
#include "gpcert/separation/obstruction.hpp"

namespace gpcert::cli {

namespace {

using Handler = std::function<Outcome(const json&, const Options&)>;

[[noreturn]] void schema(const std::string& detail) {
  throw Error(ErrorKind::SchemaError, detail);
}

SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  b.max_target_order = o.budget_order;
  b.max_candidates = o.budget_candidates;
  b.seed = o.seed;
  return b;
}

json vertex_names(const SimplicialGraph& graph, const VertexSet& set) {
  json out = json::array();
  for (VertexId v : set) out.push_back(graph.name(v));
  return out;
}

VertexSet vertex_set(const SimplicialGraph& graph, const std::vector<std::string>& names) {
  VertexSet out;
  for (const auto& name : names) out.insert(graph.id(name));
  return out;
}

// The --word selection in flag order, or every word by name.
std::vector<std::pair<std::string, json>> selected_words(const json& input, const Options& o) {
  if (!input.contains("words") || !input.at("words").is_object()) {
    schema("the document has no words");
  }
  const json& words = input.at("words");
  std::vector<std::pair<std::string, json>> out;
  if (o.words.empty()) {
    for (const auto& [name, w] : words.items()) out.emplace_back(name, w);
  } else {
    for (const auto& name : o.words) {
      if (!words.contains(name)) schema("no word named '" + name + "'");
      out.emplace_back(name, words.at(name));
    }
  }
  return out;
}

GraphProduct presentation_of(const json& input) {
  if (!input.contains("presentation")) schema("the document has no presentation");
  return presentation_from_json(input.at("presentation"));
}

Outcome result(json value, int code = kOk) {
  return {json{{"result", std::move(value)}}, code};
}

Outcome cmd_nf(const json& input, const Options& o) {
  GraphProduct g = presentation_of(input);
  json out = json::object();
  for (const auto& [name, w] : selected_words(input, o)) {
    Word word = word_from_json(g, w);
    RewriteTrace trace;
    Word nf = normal_form(g, word, o.trace ? &trace : nullptr).word;
    json entry = {{"input", word_to_json(g, word)},
                  {"normal_form", word_to_json(g, nf)},
                  {"length", nf.size()}};
    if (o.trace) {
      json steps = json::array();
      for (const RewriteStep& s : trace) {
        steps.push_back({{"move", std::string(to_string(s.move.kind))},
                         {"index", s.move.index},
                         {"after", word_to_json(g, s.after)}});
      }
      entry["trace"] = steps;
    }
    out[name] = entry;
  }
  return result(json{{"words", out}});
}

Outcome cmd_wp(const json& input, const Options& o) {
  GraphProduct g = presentation_of(input);
  json out = json::object();
  bool all_trivial = true;
  for (const auto& [name, w] : selected_words(input, o)) {
    Word word = word_from_json(g, w);
    bool trivial = is_trivial(g, word);
    all_trivial = all_trivial && trivial;
    json entry = {{"trivial", trivial}};
    if (word.size() <= o.oracle_cap) {
      entry["oracle_trivial"] = bfs_oracle_trivial(g, word, o.oracle_cap);
    } else {
      entry["oracle_trivial"] = nullptr;
    }
    out[name] = entry;
  }
  int code = (o.expect_trivial && !all_trivial) ? kVerdictFalse : kOk;
  return result(json{{"words", out}, {"all_trivial", all_trivial}}, code);
}

Outcome cmd_supp(const json& input, const Options& o) {
  GraphProduct g = presentation_of(input);
  json out = json::object();
  for (const auto& [name, w] : selected_words(input, o)) {
    out[name] = vertex_names(g.graph(), support(g, word_from_json(g, w)));
  }
  return result(json{{"words", out}});
}

Outcome cmd_retract(const json& input, const Options& o) {
  GraphProduct g = presentation_of(input);
  VertexSet x = vertex_set(g.graph(), o.subset);
  json out = json::object();
  for (const auto& [name, w] : selected_words(input, o)) {
    out[name] = word_to_json(g, retract(g, x, word_from_json(g, w)).word);
  }
  return result(json{{"subset", vertex_names(g.graph(), x)}, {"words", out}});
}

json split_to_json(const SimplicialGraph& graph, const SpecialAmalgamSplit& split) {
  return {{"vertex", graph.name(split.v)},
          {"a", vertex_names(graph, split.a)},
          {"b", vertex_names(graph, split.b)},
          {"c", vertex_names(graph, split.c)}};
}

VertexId required_vertex(const SimplicialGraph& graph, const Options& o) {
  if (o.vertex.empty()) schema("--vertex is required");
  return graph.id(o.vertex);
}

Outcome cmd_split(const json& input, const Options& o) {
  GraphProduct g = presentation_of(input);
  return result(split_to_json(g.graph(), amalgam_split(g.graph(), required_vertex(g.graph(), o))));
}

Outcome cmd_amalgam(const json& input, const Options& o) {
  GraphProduct g = presentation_of(input);
  SpecialAmalgamSplit split = amalgam_split(g.graph(), required_vertex(g.graph(), o));
  json out = json::object();
  for (const auto& [name, w] : selected_words(input, o)) {
    AmalgamForm form = amalgam_form(g, word_from_json(g, w), split);
    json a_parts = json::array();
    for (const Word& part : form.a_parts) a_parts.push_back(word_to_json(g, part));
    out[name] = {{"a_parts", a_parts},
                 {"c_parts", word_to_json(g, Word(form.c_parts.begin(), form.c_parts.end()))},
                 {"n", form.n()}};
  }
  return result(json{{"split", split_to_json(g.graph(), split)}, {"words", out}});
}

std::vector<Element> elements_of(const FiniteGroup& group, const json& j) {
  std::vector<Element> out;
  for (const auto& x : j) {
    if (x.is_string()) {
      auto e = group.find_label(x.get<std::string>());
      if (!e) schema("unknown element label '" + x.get<std::string>() + "'");
      out.push_back(*e);
    } else {
      auto i = x.get<std::int64_t>();
      if (!group.contains(i)) throw Error(ErrorKind::IndexOutOfRange, "element out of range");
      out.push_back(static_cast<Element>(i));
    }
  }
  return out;
}

Outcome cmd_closure(const json& input, const Options& o) {
  if (!input.contains("group")) schema("the document has no group");
  FiniteGroup group = group_from_json(input.at("group"));
  if (!input.contains("subgroup")) schema("the document has no subgroup");
  auto gens = elements_of(group, input.at("subgroup"));
  Subgroup x = generate_subgroup(group, gens);
  ClassTag tag = ClassTag::parse(o.tag);
  ClosednessVerdict verdict = is_c_closed(group, x, tag);
  HallVerdict hall = hall_open_check(group, x, tag);
  json out = {{"closed", verdict.closed}, {"open", hall.open}, {"subgroup", x.elements()}};
  if (verdict.alpha) {
    out["alpha"] = {{"kernel", verdict.alpha->projection.kernel().elements()},
                    {"quotient_order", verdict.alpha->group.order()}};
  }
  if (verdict.inseparable) out["inseparable"] = *verdict.inseparable;
  if (hall.certificate) out["open_certificate"] = hall.certificate->elements();
  return result(out, verdict.closed ? kOk : kVerdictFalse);
}

Outcome cmd_separate(const json& input, const Options& o) {
  GraphProduct g = presentation_of(input);
  ClassTag tag = ClassTag::parse(o.tag);
  json certificates = json::array();
  json out = json::object();
  for (const auto& [name, w] : selected_words(input, o)) {
    SeparationCertificate cert = separate(g, word_from_json(g, w), tag, budget_of(o));
    out[name] = {{"target_order", cert.target.order()}, {"image", cert.image}};
    certificates.push_back(certificate_to_json(cert));
  }
  Outcome outcome = result(json{{"words", out}});
  outcome.document["certificates"] = certificates;
  return outcome;
}

Outcome cmd_check_cert(const json& input, const Options&) {
  if (!input.contains("certificates") || !input.at("certificates").is_array()) {
    schema("the document has no certificates");
  }
  json out = json::array();
  bool all_valid = true;
  for (const auto& c : input.at("certificates")) {
    CheckResult r = check_certificate_json(c);
    all_valid = all_valid && r.valid();
    out.push_back({{"diagnostic", std::string(to_string(r.diagnostic))}, {"detail", r.detail}});
  }
  return result(json{{"certificates", out}, {"valid", all_valid}},
                all_valid ? kOk : kVerdictFalse);
}

Outcome cmd_obstruct(const json& input, const Options& o) {
  ClassTag tag = ClassTag::parse(o.tag);
  if (input.contains("amalgam")) {
    const json& am = input.at("amalgam");
    if (!am.contains("A") || !am.contains("B") || !am.contains("C")) {
      schema("an amalgam needs A, B and C");
    }
    FiniteGroup a = group_from_json(am.at("A"));
    FiniteGroup c = group_from_json(am.at("C"));
    Subgroup b = generate_subgroup(a, elements_of(a, am.at("B")));
    auto w = non_separability_witness(a, b, c, tag, budget_of(o));
    if (!w) return result(json{{"verdict", "NoneFound"}}, kVerdictFalse);
    json evidence = json::array();
    for (const auto& [n, x] : w->evidence) evidence.push_back({{"normal", n.elements()}, {"b", x}});
    return result(json{{"verdict", "ObstructionWitness"},
                       {"a", w->a},
                       {"c", w->c},
                       {"g", {{"q_parts", w->g.q_parts}, {"s_parts", w->g.s_parts}}},
                       {"survives_in", {{"target", w->survival.target_name},
                                        {"order", w->survival.target.order()},
                                        {"image", w->survival.image}}},
                       {"evidence", evidence},
                       {"scanned_pairs", w->scanned_pairs}});
  }
  GraphProduct g = presentation_of(input);
  auto w = non_separability_witness(g, tag);
  if (!w) return result(json{{"verdict", "NoneFound"}}, kVerdictFalse);
  return result(json{{"verdict", "ObstructionWitness"},
                     {"split", split_to_json(g.graph(), w->split)},
                     {"a", word_to_json(g, w->a)},
                     {"c", word_to_json(g, Word{w->c})},
                     {"g", word_to_json(g, w->g)}});
}

struct LecInput {
  ChartProduct presentation;
  std::vector<AlmostHom> maps;
  std::vector<Word> k;
};

LecInput lec_input(const json& input, const Options& o) {
  if (!input.contains("presentation")) schema("the document has no presentation");
  SimplicialGraph graph = graph_from_json(input.at("presentation").at("graph"));
  if (!input.contains("almost_homs")) schema("the document has no almost_homs");
  const json& homs = input.at("almost_homs");
  const json charts = input.value("charts", json::object());
  std::vector<AlmostHom> maps;
  std::vector<GroupChart> vertex_charts;
  for (const std::string& name : graph.names()) {
    if (!homs.contains(name)) schema("no almost-hom for vertex '" + name + "'");
    maps.push_back(almost_hom_from_json(homs.at(name), charts));
    vertex_charts.push_back(maps.back().source);
  }
  LecInput out{ChartProduct(std::move(graph), std::move(vertex_charts)), std::move(maps), {}};
  for (const auto& [name, w] : selected_words(input, o)) {
    out.k.push_back(word_from_json(out.presentation, w, [&](VertexId v, const std::string& l) {
      return out.presentation.chart(v).find(l);
    }));
  }
  return out;
}

json chart_word(const ChartProduct& g, const Word& w) {
  json out = json::array();
  for (const Syllable& s : w) out.push_back({g.graph().name(s.vertex), g.chart(s.vertex).label(s.element)});
  return out;
}

json assembled_to_json(const AssembledAlmostHom& a) {
  const SimplicialGraph& graph = a.presentation.graph();
  json k = json::array();
  for (const Word& w : a.k) k.push_back(chart_word(a.presentation, w));
  json k_prime = json::array();
  for (const Word& w : a.k_sets.k_prime) k_prime.push_back(chart_word(a.presentation, w));
  json k_v = json::object();
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    json labels = json::array();
    for (Element x : a.k_sets.k_v[v]) labels.push_back(a.presentation.chart(v).label(x));
    k_v[graph.name(v)] = labels;
  }
  json table = json::array();
  for (const auto& [w, image] : a.image_table) {
    table.push_back({{"word", chart_word(a.presentation, w)}, {"image", word_to_json(a.f, image)}});
  }
  return {{"K", k}, {"K_prime", k_prime}, {"K_v", k_v}, {"image_table", table},
          {"F", presentation_to_json(a.f)}};
}

Outcome cmd_lec_assemble(const json& input, const Options& o) {
  LecInput in = lec_input(input, o);
  AssembledAlmostHom a = assemble_almost_hom(in.presentation, in.k, in.maps);
  json out = assembled_to_json(a);
  out["verified"] = true;
  return result(out);
}

Outcome cmd_lec_finitize(const json& input, const Options& o) {
  LecInput in = lec_input(input, o);
  AssembledAlmostHom a = assemble_almost_hom(in.presentation, in.k, in.maps);
  ClassTag tag = ClassTag::parse(o.tag);
  FinitizedAlmostHom f = finitize(a, tag, budget_of(o));
  const SimplicialGraph& graph = in.presentation.graph();
  json maps = json::object();
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    json m = json::object();
    for (Element x = 0; x < f.vertex_maps[v].size(); ++x) {
      m[in.presentation.chart(v).label(x)] = f.vertex_maps[v][x];
    }
    maps[graph.name(v)] = m;
  }
  bool verified = !verify_finitized(in.presentation, a.k, f, tag).has_value();
  return result(json{{"target", group_to_json(f.target)},
                     {"vertex_maps", maps},
                     {"K_images", f.k_images},
                     {"separations", f.separations},
                     {"log", f.log},
                     {"verified", verified}},
                verified ? kOk : kVerdictFalse);
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"nf", cmd_nf},
      {"wp", cmd_wp},
      {"supp", cmd_supp},
      {"retract", cmd_retract},
      {"split", cmd_split},
      {"amalgam", cmd_amalgam},
      {"closure", cmd_closure},
      {"separate", cmd_separate},
      {"check-cert", cmd_check_cert},
      {"obstruct", cmd_obstruct},
      {"lec-assemble", cmd_lec_assemble},
      {"lec-finitize", cmd_lec_finitize},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

json options_to_json(const Options& o) {
  return {{"seed", o.seed},
          {"budget_order", o.budget_order},
          {"budget_candidates", o.budget_candidates},
          {"oracle_cap", o.oracle_cap},
          {"tag", o.tag},
          {"words", o.words},
          {"vertex", o.vertex},
          {"subset", o.subset},
          {"expect_trivial", o.expect_trivial},
          {"trace", o.trace}};
}

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::OrderOverflow:
    case ErrorKind::OracleCapExceeded:
      return kBudgetExceeded;
    case ErrorKind::TrivialElement:
    case ErrorKind::ClassObstruction:
    case ErrorKind::SeparatorFailed:
    case ErrorKind::AlmostHomViolated:
    case ErrorKind::CoverageMissing:
      return kVerdictFalse;
    default:
      return kInputError;
  }
}

Outcome run(const std::string& command, const json& input, const Options& options) {
  Outcome outcome;
  auto fail = [&](const std::string& kind, const std::string& detail, int code) {
    outcome.document = json{{"error", {{"kind", kind}, {"detail", detail}}}};
    outcome.exit_code = code;
  };
  auto it = handlers().find(command);
  if (it == handlers().end()) {
    fail("UnknownCommand", "unknown command '" + command + "'", kInputError);
  } else if (!input.is_object()) {
    fail("SchemaError", "the input document must be an object", kInputError);
  } else {
    try {
      outcome = it->second(input, options);
    } catch (const Error& e) {
      fail(std::string(to_string(e.kind())), e.what(), exit_code_for(e.kind()));
    } catch (const json::exception& e) {
      fail("SchemaError", e.what(), kInputError);
    }
  }
  outcome.document["version"] = kDocumentVersion;
  outcome.document["command"] = command;
  outcome.document["params"] = options_to_json(options);
  return outcome;
}

}  // namespace gpcert::cli
