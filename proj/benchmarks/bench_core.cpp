#include <benchmark/benchmark.h>

#include <random>

#include "gpcert/algebra/catalog.hpp"
#include "gpcert/algebra/hom_search.hpp"
#include "gpcert/separation/engine.hpp"
#include "gpcert/words/rewriting.hpp"

namespace {

using namespace gpcert;

GraphProduct cycle_product(std::size_t n, const char* group) {
  std::vector<std::string> names;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
    edges.emplace_back(i, (i + 1) % n);
  }
  return GraphProduct(SimplicialGraph::from_ids(names, edges),
                      std::vector<FiniteGroup>(n, *catalog_group(group)));
}

Word random_word(const GraphProduct& g, std::size_t length, std::mt19937& rng) {
  Word w;
  for (std::size_t i = 0; i < length; ++i) {
    VertexId v = rng() % g.graph().vertex_count();
    w.push_back({v, static_cast<Element>(rng() % g.group(v).order())});
  }
  return w;
}

void BM_NormalForm(benchmark::State& state) {
  GraphProduct g = cycle_product(6, "S3");
  std::mt19937 rng(1);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(g, state.range(0), rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(g, words[i++ % words.size()]));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NormalForm)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_Separate(benchmark::State& state) {
  GraphProduct g = cycle_product(4, "Z3");
  std::mt19937 rng(2);
  std::vector<Word> words;
  while (words.size() < 16) {
    Word w = normal_form(g, random_word(g, state.range(0), rng)).word;
    if (!w.empty()) words.push_back(w);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(separate(g, words[i++ % words.size()], ClassTag::finite()));
  }
}
BENCHMARK(BM_Separate)->Arg(2)->Arg(4)->Arg(6);

void BM_EnumerateHoms(benchmark::State& state) {
  // <a, b | a^2, b^3>
  GroupPresentation p{2, {{1, 1}, {2, 2, 2}}};
  FiniteGroup target = *catalog_group(state.range(0) == 0 ? "S4" : "S5");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_homs(p, target, 1'000'000));
}
BENCHMARK(BM_EnumerateHoms)->Arg(0)->Arg(1);

}  // namespace
BENCHMARK_MAIN();
