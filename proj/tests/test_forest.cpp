#include <doctest.h>

#include "rhp/enumeration.hpp"
#include "rhp/errors.hpp"
#include "rhp/forest.hpp"
#include "rhp/tuple_io.hpp"
#include "support.hpp"

using namespace rhp;
using rhp::testing::brute_cycles;
using rhp::testing::walkthrough_states;

namespace {

ForestTuple make(int n, int k, std::vector<std::vector<ColoredEdge>> graphs) {
  ForestTuple t(n, k);
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    for (const auto& e : graphs[g]) t.graphs[g].set(e.src, e.dst, e.color);
  }
  return t;
}

constexpr Color B = Color::Black;
constexpr Color R = Color::Red;

}  // namespace

TEST_CASE("functional graph rejects loops and out-of-range nodes") {
  FunctionalGraph g(3);
  CHECK_THROWS_AS(g.set(2, 2), MalformedState);
  CHECK_THROWS_AS(g.set(1, 4), MalformedState);
  g.set(1, 2);
  g.set(1, 3, R);
  CHECK(g.edge_count() == 1);
  CHECK(g.out(1)->dst == 3);
  CHECK(g.out(1)->color == R);
}

TEST_CASE("ForestTuple needs 1 <= k <= n") {
  CHECK_THROWS_AS(ForestTuple(3, 0), InvalidSpec);
  CHECK_THROWS_AS(ForestTuple(3, 4), InvalidSpec);
  CHECK(ForestTuple(3, 3).graphs.size() == 3);
}

TEST_CASE("meta-edges follow a single graph") {
  // 3->4->2, 1->3, 2->5->1 spread over three graphs
  auto t = make(5, 3, {{{3, 4, B}, {4, 2, B}}, {{1, 3, B}}, {{2, 5, B}, {5, 1, B}}});
  auto me = trace_meta_edge(t, 0, 3);
  CHECK(me.end == 2);
  CHECK(me.path.size() == 2);
  CHECK_FALSE(me.cyclic);
  CHECK(trace_meta_edge(t, 1, 1).end == 3);
  CHECK(trace_meta_edge(t, 2, 2).end == 1);

  auto cyc = make(3, 1, {{{1, 2, B}, {2, 3, B}, {3, 2, B}}});
  auto c = trace_meta_edge(cyc, 0, 1);
  CHECK(c.cyclic);
  CHECK(c.end == 2);
}

TEST_CASE("the three meta-edges 3->2, 1->3, 2->1 form one forbidden meta-cycle") {
  auto t = make(5, 3, {{{3, 4, B}, {4, 2, B}}, {{1, 3, B}}, {{2, 5, B}, {5, 1, B}}});
  auto meta = find_forbidden_meta_cycles(t);
  REQUIRE(meta.size() == 1);
  CHECK(meta[0].kind == CycleKind::ForbiddenMetaCycle);
  CHECK(meta[0].nodes == std::vector<NodeId>{1, 2, 3, 4, 5});
  CHECK(meta[0].edges.size() == 5);
  CHECK(meta[0].max_node == 5);
}

TEST_CASE("a spanning tree rooted at 0 has no cycles") {
  auto t = make(3, 1, {{{1, 0, B}, {2, 1, B}, {3, 1, B}}});
  CHECK(find_ordinary_cycles(t.graphs[0]).empty());
}

TEST_CASE("ordinary cycles agree with a brute-force search on every graph over 5 nodes") {
  const int n = 4;
  std::vector<int> choice(static_cast<std::size_t>(n), 0);  // 0 = no edge, else target index
  int graphs = 0;
  while (true) {
    FunctionalGraph g(n);
    bool ok = true;
    for (NodeId v = 1; v <= n; ++v) {
      const int c = choice[static_cast<std::size_t>(v - 1)];
      if (c == 0) continue;
      const NodeId dst = c - 1;
      if (dst == v) {
        ok = false;
        break;
      }
      g.set(v, dst);
    }
    if (ok) {
      ++graphs;
      std::set<std::set<NodeId>> found;
      NodeId prev_max = -1;
      for (const auto& c : find_ordinary_cycles(g)) {
        found.insert(std::set<NodeId>(c.nodes.begin(), c.nodes.end()));
        CHECK(c.max_node > prev_max);
        prev_max = c.max_node;
        CHECK(c.edges.size() == c.nodes.size());
      }
      CHECK(found == brute_cycles(g));
    }
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] > n + 1) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  CHECK(graphs == 5 * 5 * 5 * 5);
}

TEST_CASE("classify the worked example's states") {
  const auto states = walkthrough_states();
  REQUIRE(states.size() == 16);
  CHECK(classify(states[0]) == MembershipTag{SetName::S0, +1});
  CHECK(classify(states[2]) == MembershipTag{SetName::S2, +1});
  // one red forbidden meta-cycle
  CHECK(classify(states[3]) == MembershipTag{SetName::S2, -1});
  // two red ordinary cycles
  CHECK(classify(states[6]) == MembershipTag{SetName::S2, +1});
  CHECK(classify(states[9]) == MembershipTag{SetName::S1, -1});
  CHECK(classify(states[10]) == MembershipTag{SetName::S1, +1});
  CHECK(classify(states[15]) == MembershipTag{SetName::S3, +1});
  // mid-phi1 state: graph 0 holds both 2 and 3
  CHECK(classify(states[4]).set == SetName::Invalid);
  CHECK_THROWS_AS(sign_of(states[4]), ShapeMismatch);
}

TEST_CASE("red edges must cover whole cycles") {
  // S1 shape, n=3, k=2: graph 0 out on 1..3, graph 1 out on 3
  auto t = make(3, 2, {{{1, 2, B}, {2, 1, B}, {3, 0, B}}, {{3, 1, B}}});
  CHECK(classify(t) == MembershipTag{SetName::S1, +1});
  t.graphs[0].set_color(1, R);
  CHECK(classify(t).set == SetName::Invalid);
  t.graphs[0].set_color(2, R);
  CHECK(classify(t) == MembershipTag{SetName::S1, -1});
  t.graphs[0].set_color(3, R);
  CHECK(classify(t).set == SetName::Invalid);
}

TEST_CASE("membership agrees with an independent colouring rule on every S1-shaped colouring") {
  // n=3, k=2: 4 edges, 3^4 shapes, 2^4 colourings each
  const int n = 3, k = 2;
  std::size_t members = 0;
  for (int code = 0; code < 81; ++code) {
    ForestTuple shape(n, k);
    int c = code;
    auto pick = [&](int g, NodeId v) {
      NodeId dst = c % 3;
      c /= 3;
      if (dst >= v) ++dst;
      shape.graphs[static_cast<std::size_t>(g)].set(v, dst);
    };
    for (NodeId v = 1; v <= 3; ++v) pick(0, v);
    pick(1, 3);
    for (int mask = 0; mask < 16; ++mask) {
      ForestTuple t = shape;
      std::vector<std::pair<int, NodeId>> slots = {{0, 1}, {0, 2}, {0, 3}, {1, 3}};
      std::set<std::pair<int, NodeId>> red;
      for (int b = 0; b < 4; ++b) {
        if (mask & (1 << b)) {
          t.graphs[static_cast<std::size_t>(slots[b].first)].set_color(slots[b].second, R);
          red.insert(slots[b]);
        }
      }
      // oracle: every red edge sits on a cycle and each cycle is all red or all black
      bool valid = true;
      int red_cycles = 0;
      std::set<std::pair<int, NodeId>> on_cycle;
      for (int g = 0; g < k; ++g) {
        for (const auto& cyc : brute_cycles(shape.graphs[static_cast<std::size_t>(g)])) {
          int reds = 0;
          for (NodeId v : cyc) {
            on_cycle.insert({g, v});
            reds += red.count({g, v}) ? 1 : 0;
          }
          if (reds != 0 && reds != static_cast<int>(cyc.size())) valid = false;
          if (reds != 0) ++red_cycles;
        }
      }
      for (const auto& s : red) {
        if (!on_cycle.count(s)) valid = false;
      }
      CHECK(is_in(t, SetName::S1) == valid);
      if (valid) {
        ++members;
        CHECK(sign_of(t) == (red_cycles % 2 ? -1 : +1));
      }
    }
  }
  CHECK(members == enumerate_set(n, k, SetName::S1).size());
}

TEST_CASE("toggle_cycle twice restores the tuple") {
  const auto states = walkthrough_states();
  auto t = states[6];
  const auto cycles = find_all_ordinary_cycles(t);
  REQUIRE(cycles.size() == 2);
  auto u = t;
  toggle_cycle(u, cycles[0]);
  CHECK(u != t);
  CHECK(classify(u).sign == -1);
  toggle_cycle(u, cycles[0]);
  CHECK(u == t);
}

TEST_CASE("weight multiset ignores colour and position") {
  const auto states = walkthrough_states();
  for (const auto& s : states) CHECK(weight_multiset(s) == weight_multiset(states[0]));
  CHECK(weight_multiset(states[0]).size() == 9);
}

TEST_CASE("tuple JSON round trip and parse errors") {
  const auto states = walkthrough_states();
  for (const auto& s : states) CHECK(parse_tuple(dump_tuple(s)) == s);
  CHECK(dump_tuple(states[3]).rfind("{\"n\":5,\"k\":3,\"graphs\":", 0) == 0);
  CHECK_THROWS_AS(parse_tuple("{"), ParseError);
  CHECK_THROWS_AS(parse_tuple(R"({"n":2,"k":1,"graphs":[{"edges":[[1,1,"black"]]}]})"), ParseError);
  CHECK_THROWS_AS(parse_tuple(R"({"n":2,"k":1,"graphs":[{"edges":[[1,0,"black"],[1,2,"red"]]}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_tuple(R"({"n":2,"k":1,"graphs":[{"edges":[[1,0,"blue"]]}]})"), ParseError);
  CHECK_THROWS_AS(parse_tuple(R"({"n":2,"k":2,"graphs":[{"edges":[]}]})"), ParseError);
  CHECK(brief(states[3]) == "[ 3>4* 4>1* 5>0 | 1>5* 4>3* 5>4* | 2>0 4>2 5>2 ]");
}

TEST_CASE("set names") {
  for (auto s : {SetName::S0, SetName::S1, SetName::S2, SetName::S3}) CHECK(parse_set_name(to_string(s)) == s);
  CHECK_FALSE(parse_set_name("S4").has_value());
}
