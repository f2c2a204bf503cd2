#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpcert/algebra/class_tag.hpp"
#include "gpcert/words/syllable_algebra.hpp"

namespace gpcert {

// A finite quotient D of a graph product in which one element survives.
struct SeparationCertificate {
  GraphProduct presentation;
  ClassTag tag;
  FiniteGroup target;
  // vertex_homs[v][x] is the image in D of element x of G_v.
  std::vector<std::vector<Element>> vertex_homs;
  Word element;
  Element image = 0;
  std::vector<std::string> derivation_log;
};

// A certificate as it arrives from outside: nothing is assumed about ranges,
// shapes or axioms.
struct RawCertificate {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::vector<std::vector<std::vector<std::int64_t>>> vertex_tables;
  std::string tag;
  std::vector<std::vector<std::int64_t>> target_table;
  std::vector<std::vector<std::int64_t>> vertex_homs;
  std::vector<std::pair<std::int64_t, std::int64_t>> element;
  std::int64_t image = 0;
};

enum class CertificateDiagnostic {
  Valid,
  MalformedCertificate,
  PresentationInvalid,
  TargetNotGroup,
  HomomorphismViolated,
  EdgeCommutationViolated,
  ClassViolated,
  ImageMismatch,
  ImageTrivial,
};

std::string_view to_string(CertificateDiagnostic d) noexcept;

struct CheckResult {
  CertificateDiagnostic diagnostic = CertificateDiagnostic::Valid;
  std::string detail;

  bool valid() const noexcept { return diagnostic == CertificateDiagnostic::Valid; }
};

RawCertificate to_raw(const SeparationCertificate& cert);

// Re-derives every claim from the raw tables and reports the first failure,
// checked in the order the diagnostics are declared.
CheckResult check_certificate(const RawCertificate& cert);
CheckResult check_certificate(const SeparationCertificate& cert);

}  // namespace gpcert
