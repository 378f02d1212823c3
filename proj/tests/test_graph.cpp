#include <gtest/gtest.h>

#include <sstream>

#include "evslice/graph.hpp"

using namespace evslice;

TEST(ParseEvents, TabSeparated) {
  const auto events = parse_events("0\ta\tb\n1\tb\tc");
  ASSERT_EQ(events.size(), 2u);
  EXPECT_EQ(events[0].timestamp, 0.0);
  EXPECT_EQ(events[0].source, "a");
  EXPECT_EQ(events[0].target, "b");
  EXPECT_EQ(events[1].source, "b");
  EXPECT_EQ(events[1].target, "c");
  EXPECT_EQ(events[1].line, 2u);
}

TEST(ParseEvents, CommentsAndBlankLinesSkipped) {
  const auto events = parse_events("# c\n5\tx\ty");
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].timestamp, 5.0);
  EXPECT_EQ(events[0].line, 2u);
  EXPECT_EQ(parse_events("\n  \n1 a b\n").size(), 1u);
}

TEST(ParseEvents, MissingFieldReportsLine) {
  try {
    parse_events("0\ta");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  try {
    parse_events("0 a b\nx a b\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseEvents, EmptyInputRejected) {
  EXPECT_THROW(parse_events(""), ParseError);
  EXPECT_THROW(parse_events("# only a comment\n"), ParseError);
}

TEST(ParseEvents, DelimiterAndHeader) {
  ParseOptions opts;
  opts.delimiter = ',';
  opts.skip_header = true;
  const auto events = parse_events("time,src,dst\n1.5,alice smith,bob\n", opts);
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].timestamp, 1.5);
  EXPECT_EQ(events[0].source, "alice smith");
}

TEST(ParseEvents, NonFiniteTimestampRejected) {
  EXPECT_THROW(parse_events("inf a b"), ParseError);
  EXPECT_THROW(parse_events("nan a b"), ParseError);
}

TEST(ParseEvents, StreamOverload) {
  std::istringstream in("3 p q\n4 q r\n");
  EXPECT_EQ(parse_events(in).size(), 2u);
}

TEST(BuildGraph, SortsByTimestamp) {
  const auto g = build_graph(parse_events("1 b c\n0 a b\n"));
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.vertex_name(g.edge(0).u), "a");
  EXPECT_EQ(g.vertex_name(g.edge(0).v), "b");
  EXPECT_EQ(g.vertex_name(g.edge(1).u), "b");
  EXPECT_EQ(g.vertex_name(g.edge(1).v), "c");
}

TEST(BuildGraph, EqualTimestampsKeepInputOrder) {
  const auto g = build_graph(parse_events("0 a b\n0 b c\n"));
  EXPECT_EQ(g.vertex_name(g.edge(0).u), "a");
  EXPECT_EQ(g.vertex_name(g.edge(1).u), "b");
}

TEST(BuildGraph, RunningExampleCounts) {
  const auto g = build_graph(parse_events("0 a b\n1 b c\n2 a b\n3 c a\n4 c d\n"));
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_FALSE(g.directed());
}

TEST(BuildGraph, InternRoundTrip) {
  const auto g = build_graph(parse_events("0 x y\n1 y z\n2 z x\n3 w w\n"));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto found = g.find_vertex(g.vertex_name(v));
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(*found, v);
  }
  EXPECT_FALSE(g.find_vertex("nobody").has_value());
}

TEST(BuildGraph, Deterministic) {
  const auto events = parse_events("5 a b\n1 c d\n1 a c\n3 d d\n");
  const auto g1 = build_graph(events), g2 = build_graph(events);
  ASSERT_EQ(g1.edge_count(), g2.edge_count());
  for (EdgeIndex k = 0; k < static_cast<EdgeIndex>(g1.edge_count()); ++k) {
    EXPECT_EQ(g1.edge(k).u, g2.edge(k).u);
    EXPECT_EQ(g1.edge(k).v, g2.edge(k).v);
    EXPECT_EQ(g1.edge(k).line, g2.edge(k).line);
  }
}

TEST(BuildGraph, InfluentialNames) {
  BuildOptions opts;
  opts.directed = true;
  opts.influential = {"s"};
  const auto g = build_graph(parse_events("0 s a\n1 x v\n2 a v\n"), opts);
  ASSERT_EQ(g.influential().size(), 1u);
  EXPECT_EQ(g.vertex_name(g.influential()[0]), "s");
  EXPECT_TRUE(g.is_influential(*g.find_vertex("s")));
  EXPECT_FALSE(g.is_influential(*g.find_vertex("a")));

  opts.influential = {"ghost"};
  EXPECT_THROW(build_graph(parse_events("0 s a\n"), opts), std::invalid_argument);
  opts.vertices = {"ghost"};
  const auto g2 = build_graph(parse_events("0 s a\n"), opts);
  EXPECT_EQ(g2.vertex_count(), 3u);
  EXPECT_EQ(g2.vertex_name(0), "ghost");
}

TEST(BuildGraph, SelfLoopsAndParallelEdgesKept) {
  const auto g = build_graph(parse_events("0 a a\n1 a b\n2 a b\n"));
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edge(0).u, g.edge(0).v);
}

TEST(Graph, SliceChecks) {
  const auto g = build_graph(parse_events("0 a b\n1 b c\n"));
  EXPECT_NO_THROW(g.check_slice({0, 1}));
  EXPECT_THROW(g.check_slice({1, 0}), std::out_of_range);
  EXPECT_THROW(g.check_slice({0, 2}), std::out_of_range);
  EXPECT_THROW(g.check_slice({-1, 0}), std::out_of_range);
  EXPECT_EQ((Slice{2, 4}.width()), 3);
}

TEST(Graph, TimeWindow) {
  const auto g = build_graph(parse_events("0 a b\n1 b c\n1 c d\n5 d e\n"));
  EXPECT_EQ(g.time_window(1, 4), (Slice{1, 2}));
  EXPECT_EQ(g.time_window(-10, 100), (Slice{0, 3}));
  EXPECT_EQ(g.time_window(2, 4), std::nullopt);
  EXPECT_EQ(g.time_window(5, 1), std::nullopt);
}

TEST(Graph, ConstructorValidates) {
  EXPECT_THROW(RelationalEventGraph(2, {Edge{0, 2, 0.0, 1}}, false), std::invalid_argument);
  EXPECT_THROW(RelationalEventGraph(2, {Edge{0, 1, 1.0, 1}, Edge{0, 1, 0.0, 2}}, false), std::invalid_argument);
  EXPECT_THROW(RelationalEventGraph(2, {Edge{0, 1, 0.0, 1}}, false, {5}), std::invalid_argument);
}
