#include <doctest.h>

#include "fixtures.hpp"

using namespace gpcert;
using namespace gpcert::testing;

namespace {

SimplicialGraph path_uvw() { return SimplicialGraph({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}}); }

}  // namespace

TEST_CASE("link") {
  SimplicialGraph isolated({"u"}, {});
  CHECK(link(isolated, 0).empty());
  SimplicialGraph p = path_uvw();
  CHECK(link(p, p.id("v")) == VertexSet{p.id("u"), p.id("w")});
  SimplicialGraph triangle = family_graph("complete", 3);
  for (VertexId v = 0; v < 3; ++v) {
    VertexSet others = triangle.all_vertices();
    others.erase(v);
    CHECK(link(triangle, v) == others);
  }
  try {
    link(p, 7);
    FAIL("expected UnknownVertex");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVertex);
  }
}

TEST_CASE("full_subgraph") {
  SimplicialGraph square = family_graph("cycle", 4);
  CHECK(full_subgraph(square, {}).vertex_count() == 0);
  CHECK(full_subgraph(square, square.all_vertices()) == square);
  SimplicialGraph edge = full_subgraph(square, {0, 1});
  CHECK(edge.vertex_count() == 2);
  CHECK(edge.edges().size() == 1);
  CHECK(full_subgraph(square, {0, 2}).edges().empty());
  CHECK_THROWS_AS(full_subgraph(square, {0, 9}), Error);
}

TEST_CASE("graph construction errors") {
  auto kind = [](auto&& make) {
    try {
      make();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::UnknownCommand;
  };
  CHECK(kind([] { SimplicialGraph({"u", "u"}, {}); }) == ErrorKind::SchemaError);
  CHECK(kind([] { SimplicialGraph({"u"}, {{"u", "u"}}); }) == ErrorKind::SchemaError);
  CHECK(kind([] { SimplicialGraph({"u"}, {{"u", "x"}}); }) == ErrorKind::UnknownVertex);
  SimplicialGraph repeated({"u", "v"}, {{"u", "v"}, {"v", "u"}});
  CHECK(repeated.edges().size() == 1);
}

TEST_CASE("link symmetry and nested full subgraphs") {
  for (const char* kind : {"edgeless", "path", "cycle", "complete"}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      SimplicialGraph g = family_graph(kind, n);
      for (VertexId u = 0; u < n; ++u) {
        CHECK_FALSE(link(g, u).contains(u));
        for (VertexId v = 0; v < n; ++v) CHECK(link(g, u).contains(v) == link(g, v).contains(u));
      }
      // Y subset of X, both as masks; compare by names.
      for (unsigned x = 0; x < (1u << n); ++x) {
        for (unsigned y = x;; y = (y - 1) & x) {
          VertexSet xs, ys;
          for (VertexId i = 0; i < n; ++i) {
            if (x >> i & 1) xs.insert(i);
            if (y >> i & 1) ys.insert(i);
          }
          SimplicialGraph gx = full_subgraph(g, xs);
          VertexSet ys_in_x;
          for (VertexId i : ys) ys_in_x.insert(gx.id(g.name(i)));
          CHECK(full_subgraph(gx, ys_in_x) == full_subgraph(g, ys));
          if (y == 0) break;
        }
      }
    }
  }
}
