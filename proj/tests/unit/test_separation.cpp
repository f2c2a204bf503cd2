#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gpcert/algebra/hom_search.hpp"
#include "gpcert/separation/engine.hpp"
#include "gpcert/proc/pro_c.hpp"
#include "gpcert/separation/obstruction.hpp"
#include "gpcert/words/oracle.hpp"

using namespace gpcert;
using namespace gpcert::testing;

namespace {

ErrorKind error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::UnknownCommand;
}

Element evaluate(const SeparationCertificate& c, const Word& w) {
  Element acc = 0;
  for (const Syllable& s : w) acc = c.target.mul(acc, c.vertex_homs[s.vertex][s.element]);
  return acc;
}

}  // namespace

TEST_CASE("separating inside one vertex group") {
  GraphProduct g = product({"v"}, {}, {"S3"});
  const FiniteGroup& s3 = g.group(0);
  for (Element x = 1; x < 6; ++x) {
    SeparationCertificate c = separate(g, {{0, x}}, ClassTag::finite());
    CHECK(check_certificate(c).valid());
    CHECK(c.image != 0);
    // The smallest quotient keeping x: S3 itself for a 3-cycle, Z2 for a
    // transposition.
    CHECK(c.target.order() == (s3.element_order(x) == 3 ? 6 : 2));
  }
}

TEST_CASE("abab in Z2 * Z2 survives in a small dihedral quotient") {
  GraphProduct g = product({"u", "v"}, {}, {"Z2", "Z2"});
  Word abab{{0, 1}, {1, 1}, {0, 1}, {1, 1}};
  // Independent scan: some catalog group of order at most 8 receives a pair
  // of involutions whose product has order greater than 2.
  bool exists = false;
  for (const auto& entry : group_catalog()) {
    const FiniteGroup& t = entry.group;
    if (t.order() > 8) continue;
    for (Element x = 0; x < t.order(); ++x)
      for (Element y = 0; y < t.order(); ++y)
        if (t.mul(x, x) == 0 && t.mul(y, y) == 0) {
          Element xy = t.mul(x, y);
          if (t.mul(xy, xy) != 0) exists = true;
        }
  }
  REQUIRE(exists);
  SeparationCertificate c = separate(g, abab, ClassTag::finite());
  CHECK(check_certificate(c).valid());
  CHECK(c.target.order() <= 8);
  CHECK(evaluate(c, abab) == c.image);
  CHECK(c.image != 0);
}

TEST_CASE("xy in Z3 * Z3 under pgroup:3") {
  GraphProduct g = product({"u", "v"}, {}, {"Z3", "Z3"});
  SeparationCertificate c = separate(g, {{0, 1}, {1, 1}}, ClassTag::pgroup(3));
  CHECK(check_certificate(c).valid());
  // Z3 already works: both generators to 1 sends xy to 2.
  CHECK(c.target.order() == 3);
  CHECK(class_membership(c.target, ClassTag::pgroup(3)));
  CHECK(c.image != 0);
}

TEST_CASE("separate errors") {
  GraphProduct g = product({"u", "v"}, {}, {"Z2", "Z2"});
  CHECK(error_of([&] { separate(g, {{0, 1}, {0, 1}}, ClassTag::finite()); }) ==
        ErrorKind::TrivialElement);
  // A perfect vertex group has no nontrivial solvable quotient.
  GraphProduct a5ish = product({"u"}, {}, {"S5"});
  Element even = 0;
  for (Element x = 1; x < 120; ++x)
    if (a5ish.group(0).element_order(x) == 3) even = x;
  CHECK(error_of([&] { separate(a5ish, {{0, even}}, ClassTag::solvable()); }) ==
        ErrorKind::ClassObstruction);
  SearchBudget tiny;
  tiny.max_candidates = 0;
  tiny.max_target_order = 1;
  Word abab{{0, 1}, {1, 1}, {0, 1}, {1, 1}};
  CHECK(error_of([&] { separate(g, abab, ClassTag::finite(), tiny); }) ==
        ErrorKind::BudgetExceeded);
}

TEST_CASE("separation agrees with the oracle and is deterministic") {
  GraphProduct g = uniform_product(family_graph("path", 3), group("Z2"));
  std::mt19937 rng(2);
  for (int i = 0; i < 40; ++i) {
    Word w;
    for (int k = 0; k < 4; ++k) w.push_back({rng() % 3, static_cast<Element>(rng() % 2)});
    if (bfs_oracle_trivial(g, w)) {
      CHECK(error_of([&] { separate(g, w, ClassTag::finite()); }) == ErrorKind::TrivialElement);
      continue;
    }
    SeparationCertificate a = separate(g, w, ClassTag::finite());
    SeparationCertificate b = separate(g, w, ClassTag::finite());
    CHECK(check_certificate(a).valid());
    CHECK(a.target == b.target);
    CHECK(a.vertex_homs == b.vertex_homs);
  }
}

TEST_CASE("base separator stages") {
  FiniteGroup z2 = group("Z2");
  Subgroup trivial = trivial_subgroup(z2);
  AmalgamWord single{{1}, {}};
  AmalgamSeparation s1 = base_separate_amalgam(z2, z2, trivial, single, ClassTag::finite());
  CHECK(s1.stage == 1);
  CHECK(s1.target.order() <= 4);

  AmalgamWord abab{{1, 1, 0}, {1, 1}};
  REQUIRE(is_reduced_amalgam_word(abab, trivial));
  AmalgamSeparation s2 = base_separate_amalgam(z2, z2, trivial, abab, ClassTag::finite());
  CHECK(s2.stage == 2);
  CHECK(s2.target.order() <= 8);
  CHECK(s2.image != 0);
  // The image is a nontrivial rotation: its order divides the target order.
  CHECK(s2.target.order() % s2.target.element_order(s2.image) == 0);
  CHECK(s2.target.element_order(s2.image) > 1);
}

TEST_CASE("certificate checker diagnostics") {
  GraphProduct g = product({"u", "v"}, {}, {"Z2", "Z2"});
  SeparationCertificate c = separate(g, {{0, 1}, {1, 1}, {0, 1}, {1, 1}}, ClassTag::finite());
  RawCertificate raw = to_raw(c);
  CHECK(check_certificate(raw).valid());

  RawCertificate bad = raw;
  bad.vertex_homs[0][1] = 0;
  bad.vertex_homs[0][0] = 1;
  CHECK(check_certificate(bad).diagnostic == CertificateDiagnostic::HomomorphismViolated);

  RawCertificate empty = raw;
  empty.element.clear();
  empty.image = 0;
  CHECK(check_certificate(empty).diagnostic == CertificateDiagnostic::ImageTrivial);

  // S3 under pgroup:2.
  GraphProduct s = product({"v"}, {}, {"S3"});
  Element rotation = 1;
  while (s.group(0).element_order(rotation) != 3) ++rotation;
  SeparationCertificate c3 = separate(s, {{0, rotation}}, ClassTag::finite());
  REQUIRE(c3.target.order() == 6);
  RawCertificate wrong_tag = to_raw(c3);
  wrong_tag.tag = "pgroup:2";
  CHECK(check_certificate(wrong_tag).diagnostic == CertificateDiagnostic::ClassViolated);
}

TEST_CASE("amalgam obstruction") {
  FiniteGroup s3 = group("S3");
  Subgroup a3 = whole_group(s3);
  for (const Subgroup& n : normal_subgroups(s3))
    if (n.order() == 3) a3 = n;
  auto w = non_separability_witness(s3, a3, group("Z3"), ClassTag::pgroup(3));
  REQUIRE(w);
  CHECK(s3.element_order(w->a) == 2);
  CHECK(w->survival.image != 0);
  CHECK(w->evidence.size() == co_c_family(s3, ClassTag::pgroup(3)).members.size());
  CHECK(w->scanned_pairs > 0);
  CHECK_FALSE(non_separability_witness(s3, a3, group("Z3"), ClassTag::pgroup(2)));
}

TEST_CASE("graph obstructions") {
  GraphProduct g = product({"u", "v", "w"}, {{"u", "v"}}, {"S3", "Z2", "Z3"});
  CHECK_FALSE(non_separability_witness(g, ClassTag::finite()));
}

TEST_CASE("combined homomorphisms") {
  GraphProduct g = product({"u", "v"}, {}, {"Z2", "Z3"});
  ProductHom a{group("Z2"), {{0, 1}, {}}};
  ProductHom b{group("Z3"), {{}, {0, 1, 2}}};
  ProductHom ab = combine_homs(g, {a, b});
  CHECK(ab.target.order() == 6);
  CHECK(ab.evaluate({{0, 1}, {1, 1}}) != 0);
  CHECK(killed_by_class(g, {{0, 1}, {1, 1}, {0, 1}, {1, 2}}, ClassTag::abelian()));
  CHECK_FALSE(killed_by_class(g, {{0, 1}, {1, 1}, {0, 1}, {1, 2}}, ClassTag::finite()));
}
