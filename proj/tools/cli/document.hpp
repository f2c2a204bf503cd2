#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpcert/lec/almost_hom.hpp"
#include "gpcert/separation/certificate.hpp"

namespace gpcert::cli {

using json = nlohmann::json;

inline constexpr const char* kDocumentVersion = "1";

// {catalog: name} or {order, table, labels?}.
FiniteGroup group_from_json(const json& j);
json group_to_json(const FiniteGroup& group);

// {vertices: [...], edges: [[u, v], ...]} with vertices by name.
SimplicialGraph graph_from_json(const json& j);
json graph_to_json(const SimplicialGraph& graph);

// {graph, groups} where groups maps vertex names to group objects.
GraphProduct presentation_from_json(const json& j);
json presentation_to_json(const GraphProduct& presentation);

// Syllables are [vertex, element] with the element given by index or label.
using LabelLookup = std::function<std::optional<Element>(VertexId, const std::string&)>;
Word word_from_json(const SyllableAlgebra& algebra, const json& j, const LabelLookup& lookup);
Word word_from_json(const GraphProduct& presentation, const json& j);
json word_to_json(const SyllableAlgebra& algebra, const Word& word);

// {elements, identity, mul: [[a, b, c], ...], inv: [[a, b], ...]}, or
// {interval: r} for integer_interval(r).
GroupChart chart_from_json(const json& j);
json chart_to_json(const GroupChart& chart);

// {chart, K: [labels], target_table, map: {label: element}}. chart is an
// inline chart or the name of an entry in charts.
AlmostHom almost_hom_from_json(const json& j, const json& charts);
json almost_hom_to_json(const AlmostHom& hom);

json certificate_to_json(const SeparationCertificate& cert);
// Type errors surface as a MalformedCertificate result.
CheckResult check_certificate_json(const json& j);

}  // namespace gpcert::cli
