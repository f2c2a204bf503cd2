#include "gpcert/separation/certificate.hpp"

#include <set>

namespace gpcert {

namespace {

using Table = std::vector<std::vector<std::int64_t>>;

CheckResult fail(CertificateDiagnostic d, std::string detail) {
  return {d, std::move(detail)};
}

bool square_in_range(const Table& t) {
  if (t.empty()) return false;
  const auto n = static_cast<std::int64_t>(t.size());
  for (const auto& row : t) {
    if (row.size() != t.size()) return false;
    for (std::int64_t x : row) {
      if (x < 0 || x >= n) return false;
    }
  }
  return true;
}

Table to_table(const FiniteGroup& g) {
  Table t(g.order(), std::vector<std::int64_t>(g.order()));
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
  }
  return t;
}

}  // namespace

std::string_view to_string(CertificateDiagnostic d) noexcept {
  switch (d) {
    case CertificateDiagnostic::Valid: return "Valid";
    case CertificateDiagnostic::MalformedCertificate: return "MalformedCertificate";
    case CertificateDiagnostic::PresentationInvalid: return "PresentationInvalid";
    case CertificateDiagnostic::TargetNotGroup: return "TargetNotGroup";
    case CertificateDiagnostic::HomomorphismViolated: return "HomomorphismViolated";
    case CertificateDiagnostic::EdgeCommutationViolated: return "EdgeCommutationViolated";
    case CertificateDiagnostic::ClassViolated: return "ClassViolated";
    case CertificateDiagnostic::ImageMismatch: return "ImageMismatch";
    case CertificateDiagnostic::ImageTrivial: return "ImageTrivial";
  }
  return "Unknown";
}

RawCertificate to_raw(const SeparationCertificate& cert) {
  RawCertificate raw;
  const SimplicialGraph& g = cert.presentation.graph();
  raw.vertices = g.names();
  for (auto [u, v] : g.edges()) {
    raw.edges.emplace_back(static_cast<std::int64_t>(u), static_cast<std::int64_t>(v));
  }
  for (const FiniteGroup& group : cert.presentation.groups()) {
    raw.vertex_tables.push_back(to_table(group));
  }
  raw.tag = cert.tag.to_string();
  raw.target_table = to_table(cert.target);
  for (const auto& row : cert.vertex_homs) {
    raw.vertex_homs.emplace_back(row.begin(), row.end());
  }
  for (const Syllable& s : cert.element) {
    raw.element.emplace_back(static_cast<std::int64_t>(s.vertex),
                             static_cast<std::int64_t>(s.element));
  }
  raw.image = cert.image;
  return raw;
}

CheckResult check_certificate(const SeparationCertificate& cert) {
  return check_certificate(to_raw(cert));
}

CheckResult check_certificate(const RawCertificate& cert) {
  using D = CertificateDiagnostic;
  const auto n_vertices = static_cast<std::int64_t>(cert.vertices.size());

  // Shapes and ranges.
  if (cert.vertex_tables.size() != cert.vertices.size() ||
      cert.vertex_homs.size() != cert.vertices.size()) {
    return fail(D::MalformedCertificate, "one table and one map per vertex required");
  }
  ClassTag tag = ClassTag::finite();
  try {
    tag = ClassTag::parse(cert.tag);
  } catch (const Error&) {
    return fail(D::MalformedCertificate, "unknown tag '" + cert.tag + "'");
  }
  if (!square_in_range(cert.target_table)) {
    return fail(D::MalformedCertificate, "target table is not a square index table");
  }
  const auto d_order = static_cast<std::int64_t>(cert.target_table.size());
  for (std::size_t v = 0; v < cert.vertices.size(); ++v) {
    if (!square_in_range(cert.vertex_tables[v])) {
      return fail(D::MalformedCertificate,
                  "vertex table " + cert.vertices[v] + " is not a square index table");
    }
    if (cert.vertex_homs[v].size() != cert.vertex_tables[v].size()) {
      return fail(D::MalformedCertificate,
                  "map at " + cert.vertices[v] + " does not cover its group");
    }
    for (std::int64_t x : cert.vertex_homs[v]) {
      if (x < 0 || x >= d_order) {
        return fail(D::MalformedCertificate,
                    "map at " + cert.vertices[v] + " leaves the target");
      }
    }
  }
  for (std::size_t i = 0; i < cert.element.size(); ++i) {
    auto [v, x] = cert.element[i];
    if (v < 0 || v >= n_vertices) {
      return fail(D::MalformedCertificate, "element syllable " + std::to_string(i) +
                                               " names no vertex");
    }
    if (x < 0 || x >= static_cast<std::int64_t>(cert.vertex_tables[v].size())) {
      return fail(D::MalformedCertificate, "element syllable " + std::to_string(i) +
                                               " is out of range");
    }
  }
  if (cert.image < 0 || cert.image >= d_order) {
    return fail(D::MalformedCertificate, "claimed image is out of range");
  }

  // The presentation itself.
  std::set<std::string> names(cert.vertices.begin(), cert.vertices.end());
  if (names.size() != cert.vertices.size()) {
    return fail(D::PresentationInvalid, "duplicate vertex names");
  }
  for (auto [u, v] : cert.edges) {
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices || u == v) {
      return fail(D::PresentationInvalid, "edge endpoints must be distinct vertices");
    }
  }
  std::vector<FiniteGroup> groups;
  for (std::size_t v = 0; v < cert.vertices.size(); ++v) {
    // The certificate's own numbering is authoritative, so identity must
    // already sit at 0.
    if (cert.vertex_tables[v][0][0] != 0) {
      return fail(D::PresentationInvalid, "vertex group " + cert.vertices[v] +
                                              " does not have identity 0");
    }
    try {
      groups.push_back(validate_group(cert.vertex_tables[v]));
    } catch (const Error& e) {
      return fail(D::PresentationInvalid, cert.vertices[v] + ": " + e.what());
    }
    if (!groups.back().labels().empty()) {
      return fail(D::PresentationInvalid, "vertex group " + cert.vertices[v] +
                                              " does not have identity 0");
    }
  }

  // The target.
  FiniteGroup target;
  try {
    target = validate_group(cert.target_table);
  } catch (const Error& e) {
    return fail(D::TargetNotGroup, e.what());
  }
  if (!target.labels().empty()) {
    return fail(D::TargetNotGroup, "target identity is not element 0");
  }

  // Vertex maps.
  for (std::size_t v = 0; v < groups.size(); ++v) {
    const FiniteGroup& g = groups[v];
    const auto& f = cert.vertex_homs[v];
    for (Element a = 0; a < g.order(); ++a) {
      for (Element b = 0; b < g.order(); ++b) {
        auto lhs = f[g.mul(a, b)];
        auto rhs = target.mul(static_cast<Element>(f[a]), static_cast<Element>(f[b]));
        if (lhs != static_cast<std::int64_t>(rhs)) {
          return fail(D::HomomorphismViolated,
                      "at " + cert.vertices[v] + ": f(" + std::to_string(a) + "*" +
                          std::to_string(b) + ") != f(" + std::to_string(a) +
                          ")f(" + std::to_string(b) + ")");
        }
      }
    }
  }

  // Edge relations.
  for (auto [u, v] : cert.edges) {
    for (std::int64_t x : cert.vertex_homs[u]) {
      for (std::int64_t y : cert.vertex_homs[v]) {
        auto ex = static_cast<Element>(x);
        auto ey = static_cast<Element>(y);
        if (target.mul(ex, ey) != target.mul(ey, ex)) {
          return fail(D::EdgeCommutationViolated,
                      "images of " + cert.vertices[u] + " and " + cert.vertices[v] +
                          " do not commute");
        }
      }
    }
  }

  if (!class_membership(target, tag)) {
    return fail(D::ClassViolated, "target of order " + std::to_string(target.order()) +
                                      " is not in class " + tag.to_string());
  }

  Element value = 0;
  for (auto [v, x] : cert.element) {
    value = target.mul(value, static_cast<Element>(cert.vertex_homs[v][x]));
  }
  if (static_cast<std::int64_t>(value) != cert.image) {
    return fail(D::ImageMismatch, "element evaluates to " + std::to_string(value) +
                                      ", certificate claims " + std::to_string(cert.image));
  }
  if (value == 0) return fail(D::ImageTrivial, "element maps to the identity");
  return {};
}

}  // namespace gpcert
