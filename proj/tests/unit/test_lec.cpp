#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gpcert/lec/almost_hom.hpp"

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

// Two nonadjacent vertices u, v carrying integer charts -r..r.
ChartProduct raag_charts(int r, bool edge = false) {
  std::vector<std::pair<std::string, std::string>> edges;
  if (edge) edges.emplace_back("u", "v");
  return ChartProduct(SimplicialGraph({"u", "v"}, edges), {integer_interval(r), integer_interval(r)});
}

Element at(const GroupChart& c, long long n) { return *c.find(std::to_string(n)); }

Word to_word(const ChartProduct& p, const FreeWord& w) {
  Word out;
  for (auto [v, e] : w) out.push_back({v, at(p.chart(v), e)});
  return out;
}

FreeWord to_free(const ChartProduct& p, const Word& w) {
  FreeWord out;
  for (const Syllable& s : w) out.emplace_back(s.vertex, std::stoll(p.chart(s.vertex).label(s.element)));
  return out;
}

// Reduction in Z/m * Z/m of the letterwise residues.
FreeWord mod_reduce(const FreeWord& w, long long m) {
  FreeWord out;
  for (auto [v, e] : w) {
    long long r = ((e % m) + m) % m;
    if (r == 0) continue;
    if (!out.empty() && out.back().first == v) {
      out.back().second = (out.back().second + r) % m;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.emplace_back(v, r);
    }
  }
  return out;
}

FreeWord as_free(const Word& w) {
  FreeWord out;
  for (const Syllable& s : w) out.emplace_back(s.vertex, s.element);
  return out;
}

GroupChart chart_of(const FiniteGroup& g) {
  std::vector<std::string> labels;
  for (Element x = 0; x < g.order(); ++x) labels.push_back("g" + std::to_string(x));
  std::vector<std::array<std::string, 3>> products;
  std::vector<std::array<std::string, 2>> inverses;
  for (Element a = 0; a < g.order(); ++a) {
    inverses.push_back({labels[a], labels[g.inv(a)]});
    for (Element b = 0; b < g.order(); ++b) products.push_back({labels[a], labels[b], labels[g.mul(a, b)]});
  }
  return GroupChart(labels, "g0", products, inverses);
}

AlmostHom identity_map(const FiniteGroup& g) {
  AlmostHom h{chart_of(g), {}, g, {}};
  for (Element x = 0; x < g.order(); ++x) {
    h.k.insert(x);
    h.map.push_back(x);
  }
  return h;
}

const FreeWord kX{{0, 1}}, kY{{1, 1}}, kXY{{0, 1}, {1, 1}}, kYX{{1, 1}, {0, 1}};

}  // namespace

TEST_CASE("integer charts") {
  GroupChart c = integer_interval(2);
  CHECK(c.size() == 5);
  CHECK(c.label(0) == "0");
  for (long long a = -2; a <= 2; ++a) {
    CHECK(c.inv(at(c, a)) == at(c, -a));
    for (long long b = -2; b <= 2; ++b) {
      auto ab = c.mul(at(c, a), at(c, b));
      if (a + b < -2 || a + b > 2) {
        CHECK_FALSE(ab);
      } else {
        CHECK(ab == at(c, a + b));
      }
    }
  }
  CHECK_FALSE(c.associativity_violation());
  GroupChart broken = c.with_product(at(c, 1), at(c, 1), at(c, -1));
  CHECK(broken.associativity_violation());
}

TEST_CASE("chart construction errors") {
  CHECK(error_of([] { GroupChart({"e", "a"}, "x", {}, {}); }) == ErrorKind::SchemaError);
  CHECK(error_of([] { GroupChart({"e", "e"}, "e", {}, {}); }) == ErrorKind::SchemaError);
  CHECK(error_of([] { GroupChart({"e", "a"}, "e", {{"e", "a", "e"}}, {}); }) ==
        ErrorKind::SchemaError);
  GroupChart z2({"a", "e"}, "e", {{"a", "a", "e"}}, {{"a", "a"}});
  CHECK(z2.label(0) == "e");
  CHECK(z2.mul(1, 1) == Element{0});
  CHECK(z2.mul(0, 1) == Element{1});
}

TEST_CASE("incomplete charts are hard errors") {
  ChartProduct p = raag_charts(1);
  CHECK(error_of([&] { normal_form(p, to_word(p, {{0, 1}, {0, 1}})); }) ==
        ErrorKind::ChartIncomplete);
  CHECK(normal_form(p, to_word(p, {{0, 1}, {0, -1}})).word.empty());
  CHECK(error_of([&] { derive_k_sets(p, {to_word(p, {{0, 1}}), to_word(p, {{0, -1}})}); }) ==
        ErrorKind::ChartIncomplete);
}

TEST_CASE("derive_k_sets examples") {
  ChartProduct p = raag_charts(2);
  KSets empty = derive_k_sets(p, {Word{}});
  CHECK(empty.k_prime == std::vector<Word>{Word{}});
  for (const auto& kv : empty.k_v) CHECK(kv == std::set<Element>{0});

  GroupChart z2({"e", "a"}, "e", {{"a", "a", "e"}}, {{"a", "a"}});
  ChartProduct q(SimplicialGraph({"u"}, {}), {z2});
  KSets two = derive_k_sets(q, {Word{{0, 1}}});
  CHECK(std::set<Word>(two.k_prime.begin(), two.k_prime.end()) == std::set<Word>{{}, {{0, 1}}});
  CHECK(two.k_v[0] == std::set<Element>{0, 1});
}

TEST_CASE("K sets for x, y, xy over the integer charts") {
  ChartProduct p = raag_charts(2);
  std::vector<FreeWord> k{kX, kY, kXY};
  // Oracle: free reduction of all k^-1 k' over K and e.
  std::vector<FreeWord> with_e{FreeWord{}};
  with_e.insert(with_e.end(), k.begin(), k.end());
  std::set<FreeWord> expected;
  std::vector<std::set<long long>> exponents(2, {0});
  for (const FreeWord& a : with_e)
    for (const FreeWord& b : with_e) {
      FreeWord r = free_reduce([&] {
        FreeWord c = free_inverse(a);
        c.insert(c.end(), b.begin(), b.end());
        return c;
      }());
      expected.insert(r);
      for (auto [v, e] : r) exponents[v].insert(e);
    }
  REQUIRE(expected.size() == 11);

  std::vector<Word> words;
  for (const FreeWord& w : k) words.push_back(to_word(p, w));
  KSets sets = derive_k_sets(p, words);
  std::set<FreeWord> got;
  for (const Word& w : sets.k_prime) got.insert(to_free(p, w));
  CHECK(got == expected);
  CHECK(sets.k_prime.size() == expected.size());
  for (VertexId v = 0; v < 2; ++v) {
    std::set<Element> ev;
    for (long long e : exponents[v]) ev.insert(at(p.chart(v), e));
    CHECK(sets.k_v[v] == ev);
    CHECK(exponents[v] == std::set<long long>{-1, 0, 1});
  }
}

TEST_CASE("assembling reduction mod 5") {
  ChartProduct p = raag_charts(2);
  std::vector<FreeWord> k{kX, kY, kXY, kYX};
  std::vector<Word> words;
  for (const FreeWord& w : k) words.push_back(to_word(p, w));
  AlmostHom mod5 = integer_reduction(2, 5);
  AssembledAlmostHom a = assemble_almost_hom(p, words, {mod5, mod5});
  CHECK(a.k.size() == 4);
  std::set<FreeWord> distinct;
  for (std::size_t i = 0; i < k.size(); ++i) {
    FreeWord expected = mod_reduce(k[i], 5);
    CHECK(as_free(a.image_table.at(a.k[i])) == expected);
    distinct.insert(expected);
    for (std::size_t j = 0; j < k.size(); ++j) {
      FreeWord both = k[i];
      both.insert(both.end(), k[j].begin(), k[j].end());
      Word product = normal_form(p, to_word(p, free_reduce(both))).word;
      CHECK(as_free(a.image(product)) == mod_reduce(both, 5));
    }
  }
  CHECK(distinct.size() == 4);
  for (const Word& g : a.k_sets.k_prime) CHECK(is_reduced(a.f, a.image_table.at(g)));
}

TEST_CASE("assembling reduction mod 2 fails on x, x^-1, x^2") {
  ChartProduct p = raag_charts(2);
  AlmostHom mod2 = integer_reduction(2, 2);
  std::vector<Word> k{to_word(p, {{0, 1}}), to_word(p, {{0, -1}}), to_word(p, {{0, 2}})};
  CHECK(error_of([&] { assemble_almost_hom(p, k, {mod2, mod2}); }) ==
        ErrorKind::AlmostHomViolated);
  std::vector<Word> with_e{Word{}, to_word(p, {{0, 2}})};
  CHECK(error_of([&] { assemble_almost_hom(p, with_e, {mod2, mod2}); }) ==
        ErrorKind::AlmostHomViolated);
}

TEST_CASE("identity maps on finite vertex groups assemble for any K") {
  FiniteGroup s3 = group("S3"), z2 = group("Z2");
  ChartProduct p(SimplicialGraph({"u", "v", "w"}, {{"u", "v"}}),
                 {chart_of(s3), chart_of(z2), chart_of(s3)});
  GraphProduct g(p.graph(), {s3, z2, s3});
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Word> k;
    for (int i = 0; i < 3; ++i) {
      Word w;
      for (int j = 0; j < 3; ++j) {
        VertexId v = rng() % 3;
        w.push_back({v, static_cast<Element>(rng() % g.group(v).order())});
      }
      k.push_back(w);
    }
    AssembledAlmostHom a = assemble_almost_hom(p, k, {identity_map(s3), identity_map(z2), identity_map(s3)});
    for (const Word& w : a.k) CHECK(a.image(w) == normal_form(g, w).word);
  }
}

TEST_CASE("coverage and mutation errors") {
  ChartProduct p = raag_charts(2);
  std::vector<Word> k{to_word(p, kX), to_word(p, kY), to_word(p, kXY), to_word(p, kYX)};
  AlmostHom mod5 = integer_reduction(2, 5);
  AlmostHom narrow = mod5;
  narrow.k.erase(at(mod5.source, -1));
  CHECK(error_of([&] { assemble_almost_hom(p, k, {narrow, mod5}); }) == ErrorKind::CoverageMissing);

  GroupChart broken = p.chart(0).with_product(at(p.chart(0), 1), at(p.chart(0), 1), at(p.chart(0), -1));
  ChartProduct q(p.graph(), {broken, p.chart(1)});
  AlmostHom bad = mod5;
  bad.source = broken;
  std::vector<Word> kk{to_word(q, kX), to_word(q, kY), to_word(q, kXY), to_word(q, {{0, 1}, {0, 1}})};
  CHECK(error_of([&] { assemble_almost_hom(q, kk, {bad, mod5}); }) == ErrorKind::AlmostHomViolated);
  CHECK(error_of([&] { assemble_almost_hom(p, k, {mod5}); }) == ErrorKind::SchemaError);
}

TEST_CASE("finitize") {
  ChartProduct p = raag_charts(2);
  AlmostHom mod5 = integer_reduction(2, 5);

  AssembledAlmostHom single = assemble_almost_hom(p, {to_word(p, kX)}, {mod5, mod5});
  FinitizedAlmostHom trivial = finitize(single, ClassTag::finite());
  CHECK(trivial.target.order() == 1);
  CHECK(trivial.separations == 0);

  std::vector<Word> k{to_word(p, kX), to_word(p, kY), to_word(p, kXY), to_word(p, kYX)};
  AssembledAlmostHom a = assemble_almost_hom(p, k, {mod5, mod5});
  FinitizedAlmostHom f = finitize(a, ClassTag::finite());
  CHECK(std::set<Element>(f.k_images.begin(), f.k_images.end()).size() == 4);
  CHECK_FALSE(verify_finitized(p, k, f, ClassTag::finite()));
  CHECK(f.separations >= 1);
  CHECK(f.separations <= 6);

  FinitizedAlmostHom five = finitize(a, ClassTag::pgroup(5));
  CHECK(class_membership(five.target, ClassTag::pgroup(5)));
  CHECK_FALSE(verify_finitized(p, k, five, ClassTag::pgroup(5)));

  // Corrupting one image breaks the re-check.
  FinitizedAlmostHom corrupt = f;
  corrupt.vertex_maps[1][at(p.chart(1), 1)] = corrupt.vertex_maps[0][at(p.chart(0), 1)];
  CHECK(verify_finitized(p, k, corrupt, ClassTag::finite()));

  CHECK(error_of([&] { finitize(a, ClassTag::pgroup(2)); }) == ErrorKind::PreconditionViolated);
}
