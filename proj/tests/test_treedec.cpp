#include <doctest.h>

#include "helpers.hpp"
#include "netglue/isomorphism.hpp"

using namespace netglue;
using testing::Rng;

namespace {

TreeDecomp two_bag_path_decomp() {
    return TreeDecomp({"n0", "n1"}, {{"n1", "n0"}},
                      {{"n0", {"1", "2"}}, {"n1", {"2", "3"}}}, "n0", "n1");
}

}  // namespace

TEST_CASE("validity conditions") {
    Digraph path3({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    TreeDecomp single({"n"}, {}, {{"n", {"1", "2", "3"}}}, "n", "n");
    CHECK(is_valid_decomposition(single, path3));

    CHECK(is_valid_decomposition(two_bag_path_decomp(), path3));

    Digraph with_chord({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
    CHECK_FALSE(is_valid_decomposition(two_bag_path_decomp(), with_chord));

    // vertex missing from every bag
    Digraph bigger({"1", "2", "3", "4"}, {{"1", "2"}});
    CHECK_FALSE(is_valid_decomposition(two_bag_path_decomp(), bigger));

    // occurrence subtree disconnected
    TreeDecomp disconnected(
        {"n0", "n1", "n2"}, {{"n1", "n0"}, {"n2", "n1"}},
        {{"n0", {"1", "2"}}, {"n1", {"2", "3"}}, {"n2", {"1", "3"}}}, "n0", "n2");
    Digraph path_badly({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    CHECK_FALSE(is_valid_decomposition(disconnected, path_badly));
}

TEST_CASE("width") {
    CHECK(width(two_bag_path_decomp()) == 1);
    TreeDecomp wide({"n"}, {}, {{"n", {"a", "b", "c", "d"}}}, "n", "n");
    CHECK(width(wide) == 3);
    TreeDecomp tiny({"n"}, {}, {{"n", {"a"}}}, "n", "n");
    CHECK(width(tiny) == 0);
}

TEST_CASE("type invariants rejected") {
    CHECK_THROWS_AS(TreeDecomp({"n0", "n1"}, {{"n1", "n0"}},
                               {{"n0", {"1", "2"}}, {"n1", {"3"}}}, "n0", "n1"),
                    InvalidNode);  // non-uniform bags
    CHECK_THROWS_AS(TreeDecomp({"n0", "n1"}, {{"n1", "n0"}},
                               {{"n0", {"1", "1"}}, {"n1", {"2", "3"}}}, "n0", "n1"),
                    InvalidNode);  // repeated vertex in a bag
    CHECK_THROWS_AS(TreeDecomp({"n0", "n1", "n2"}, {{"n1", "n0"}, {"n2", "n1"}},
                               {{"n0", {"1"}}, {"n1", {"2"}}, {"n2", {"3"}}}, "n0", "n1"),
                    InvalidNode);  // designated leaf has a child
}

TEST_CASE("bag substitution propagates through the right operand") {
    TreeDecomp left({"m0", "m1"}, {{"m1", "m0"}},
                    {{"m0", {"1", "3"}}, {"m1", {"4", "5"}}}, "m0", "m1");
    TreeDecomp right({"r0", "r1", "r2"}, {{"r1", "r0"}, {"r2", "r1"}},
                     {{"r0", {"7", "6"}}, {"r1", {"7", "10"}}, {"r2", {"10", "11"}}},
                     "r0", "r2");
    TreeDecomp glued = glue_td(left, right);
    CHECK(glued.nodes().size() == 4);
    CHECK(glued.root() == "m0");
    CHECK(glued.bag("m1") == std::vector<std::string>{"4", "5"});
    CHECK(glued.bag("r1") == std::vector<std::string>{"4", "10"});
    CHECK(glued.bag(glued.designated_leaf()) == std::vector<std::string>{"10", "11"});
    CHECK(width(glued) == width(left));
}

TEST_CASE("single-node self glue collapses") {
    TreeDecomp single({"n"}, {}, {{"n", {"a", "b"}}}, "n", "n");
    TreeDecomp glued = glue_td(single, single);
    CHECK(glued.nodes().size() == 1);
    CHECK(glued.bag(glued.root()) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("glue_td node count and width mismatch") {
    auto t = two_bag_path_decomp();
    CHECK(glue_td(t, t).nodes().size() == t.nodes().size() * 2 - 1);
    TreeDecomp wide({"n"}, {}, {{"n", {"a", "b", "c"}}}, "n", "n");
    CHECK_THROWS_AS(glue_td(t, wide), WidthMismatch);
}

TEST_CASE("boundaried subgraph") {
    Digraph g({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    auto t = two_bag_path_decomp();
    auto whole = boundaried_subgraph(t, g, "n0");
    CHECK(whole.size() == 3);
    CHECK(whole.primary_ports() == std::vector<std::string>{"1", "2"});
    auto leaf = boundaried_subgraph(t, g, "n1");
    CHECK(leaf.size() == 2);
    CHECK(leaf.graph().edge_count() == 1);
    CHECK_THROWS_AS(boundaried_subgraph(t, g, "zz"), InvalidNode);
}

TEST_CASE("boundaried subgraph spans the subtree") {
    // chain of four bags over a five-vertex path; the node with bag (4,5)
    // spans everything below it
    Digraph g({"1", "2", "3", "4", "5"},
              {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}});
    TreeDecomp t({"n0", "n1", "n2", "n3"},
                 {{"n1", "n0"}, {"n2", "n1"}, {"n3", "n2"}},
                 {{"n0", {"1", "2"}}, {"n1", {"2", "3"}}, {"n2", {"3", "4"}},
                  {"n3", {"4", "5"}}},
                 "n0", "n3");
    auto part = boundaried_subgraph(t, g, "n2");
    CHECK(part.size() == 3);
    CHECK(part.primary_ports() == std::vector<std::string>{"3", "4"});
    CHECK(part.graph().edge_count() == 2);
}

TEST_CASE("n_length") {
    Digraph two({"a", "b"}, {{"a", "b"}});
    TreeDecomp same_bags({"n0", "n1"}, {{"n1", "n0"}},
                         {{"n0", {"a", "b"}}, {"n1", {"a", "b"}}}, "n0", "n1");
    CHECK(n_length(same_bags, two, {"n0", "n1"}) == 1);

    Digraph path3({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    CHECK(n_length(two_bag_path_decomp(), path3, {"n0", "n1"}) == 2);

    // five nodes, three distinct boundaried subgraphs
    Digraph path4({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}});
    TreeDecomp t({"n0", "n1", "n2", "n3", "n4"},
                 {{"n1", "n0"}, {"n2", "n1"}, {"n3", "n2"}, {"n4", "n3"}},
                 {{"n0", {"1", "2"}}, {"n1", {"2", "3"}}, {"n2", {"2", "3"}},
                  {"n3", {"3", "4"}}, {"n4", {"3", "4"}}},
                 "n0", "n4");
    CHECK(n_length(t, path4, {"n0", "n1", "n2", "n3", "n4"}) == 3);

    CHECK_THROWS_AS(n_length(t, path4, {"n1", "n0"}), InvalidPath);
    CHECK_THROWS_AS(n_length(t, path4, {"n0", "n2"}), InvalidPath);
}

TEST_CASE("remark 2 on single letters and a hand pair") {
    Rng rng(11);
    auto family = testing::random_paired_family(rng);
    CHECK(remark2_check(family.gadgets, family.decomps, "1"));
    CHECK(remark2_check(family.gadgets, family.decomps, "2"));
    CHECK(remark2_check(family.gadgets, family.decomps, "12"));
}

TEST_CASE("remark 2 randomized families") {
    Rng rng(12);
    for (int trial = 0; trial < 150; ++trial) {
        auto family = testing::random_paired_family(rng);
        auto word = testing::random_word(rng, family.gadgets.members.size());
        CHECK(remark2_check(family.gadgets, family.decomps, word));
    }
}

TEST_CASE("remark 2 precondition violations") {
    Rng rng(13);
    auto family = testing::random_paired_family(rng);
    DecompFamily missing;
    CHECK_THROWS_AS(remark2_check(family.gadgets, missing, "1"), FamilyMismatch);
}

TEST_CASE("lambda mirrors delta") {
    Rng rng(14);
    auto family = testing::random_paired_family(rng);

    // length-one word: the member itself
    auto single = lambda(family.decomps, "1");
    CHECK(single.nodes() == family.decomps.members.at('1').nodes());
    CHECK(single.bag(single.root()) ==
          family.decomps.members.at('1').bag(single.root()));

    // repeated word: one node merged per glue, valid for the glued graph
    auto chain = lambda(family.decomps, "111");
    CHECK(chain.nodes().size() ==
          3 * family.decomps.members.at('1').nodes().size() - 2);
    CHECK(is_valid_decomposition(chain, delta(family.gadgets, "111").graph()));

    auto t = lambda(family.decomps, "121");
    auto g = delta(family.gadgets, "121");
    CHECK(is_valid_decomposition(t, g.graph()));
    CHECK(width(t) == family.decomps.width);
    CHECK_THROWS_AS(lambda(family.decomps, "9"), UnknownSymbol);
}

TEST_CASE("validity is stable under node reordering") {
    Digraph path3({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    TreeDecomp reordered({"n1", "n0"}, {{"n1", "n0"}},
                         {{"n0", {"1", "2"}}, {"n1", {"2", "3"}}}, "n0", "n1");
    CHECK(is_valid_decomposition(reordered, path3));
}
