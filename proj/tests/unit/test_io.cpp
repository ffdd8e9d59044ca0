#include <doctest.h>

#include "corpus.hpp"
#include "hyperfactor/errors.hpp"
#include "hyperfactor/io.hpp"
#include "hyperfactor/limits.hpp"

using namespace hyperfactor;
using testing::hg;

TEST_SUITE("io") {
  TEST_CASE("canonical text and JSON writers") {
    const auto h = hg(4, {{2, 3}, {0, 1, 2}});
    CHECK(to_text(h) == "hypergraph 4 2\ne 0 1 2\ne 2 3\n");
    CHECK(to_text(h, "first\nsecond") == "# first\n# second\nhypergraph 4 2\ne 0 1 2\ne 2 3\n");
    CHECK(to_json_text(h) == "{\"n\":4,\"edges\":[[0,1,2],[2,3]]}\n");
    CHECK(to_text(Hypergraph()) == "hypergraph 1 0\n");
  }

  TEST_CASE("parser accepts comments, blank lines and CRLF") {
    const auto h = parse_text("# head\n\nhypergraph 3 2\r\n# mid\ne 0 1\n\ne 1 2\n# tail\n");
    CHECK(h == testing::path(3));
    CHECK(parse_any("  {\"n\": 3, \"edges\": [[0,1],[1,2]]}") == testing::path(3));
    CHECK(parse_any("hypergraph 3 2\ne 0 1\ne 1 2\n") == testing::path(3));
  }

  TEST_CASE("malformed input raises ParseError") {
    const char* bad[] = {
        "",
        "graph 3 1\ne 0 1\n",
        "hypergraph 3\ne 0 1\n",
        "hypergraph 3 2\ne 0 1\n",
        "hypergraph 3 1\ne 0 1\ne 1 2\n",
        "hypergraph 3 1\ne 1 0\n",
        "hypergraph 3 1\ne 0 3\n",
        "hypergraph 3 2\ne 0 1\ne 0 1\n",
        "hypergraph 3 1\ne 0 x\n",
        "hypergraph 0 0\n",
        "hypergraph 3 1\nf 0 1\n",
        "hypergraph 3 1\ne\n",
        "hypergraph 3 1\ne 0 0\n",
        "{\"n\": 3}",
        "{\"n\": -1, \"edges\": []}",
        "{\"n\": 3, \"edges\": [[1,0]]}",
        "{\"n\": 3, \"edges\": [[0,1],[0,1]]}",
        "{\"n\": 3, \"edges\": [[0,1]",
    };
    for (const char* text : bad) {
      CAPTURE(text);
      CHECK_THROWS_AS(parse_any(text), ParseError);
    }
  }

  TEST_CASE("round trip on random instances") {
    testing::CorpusSpec spec;
    spec.count = 40;
    spec.n_max = 10;
    spec.rank_max = 4;
    spec.connected = false;
    for (const auto& h : testing::random_hypergraphs(spec)) {
      CHECK(parse_text(to_text(h, "note")) == h);
      CHECK(parse_json(to_json_text(h)) == h);
      CHECK(to_text(parse_text(to_text(h))) == to_text(h));
    }
  }

  TEST_CASE("missing file raises ParseError") { CHECK_THROWS_AS(load("/nonexistent/file.hg"), ParseError); }
}

TEST_SUITE("limits") {
  TEST_CASE("overrides") {
    const auto l = parse_limits("iso_max_vertices=10, gen_attempts=5");
    CHECK(l.iso_max_vertices == 10);
    CHECK(l.gen_attempts == 5);
    CHECK(l.product_max_vertices == Limits{}.product_max_vertices);
    CHECK(parse_limits("").brute_pfd_max_vertices == 12);
    CHECK_THROWS_AS(parse_limits("nope=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_limits("rank_max=abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_limits("rank_max"), std::invalid_argument);
  }
}
