#include <doctest.h>

#include "corpus.hpp"
#include "netglue/evaluate.hpp"

using namespace netglue;
using testing::Rng;

namespace {

Digraph self_loop() { return Digraph({"a"}, {{"a", "a"}}); }

Digraph cycle(std::size_t n) {
    std::vector<std::string> verts;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i) verts.push_back("c" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(verts[i], verts[(i + 1) % n]);
    return Digraph(std::move(verts), std::move(edges));
}

const char* kStrongComponent =
    "existsS X. (exists x. x in X) & "
    "(forall x. x in X => (exists y. (y in X) & x != y & (x -> y)))";

const char* kInjective =
    "forall x. forall y. forall u. forall v. "
    "((x -> y) & (u -> v) & y = v) => x = u";

Digraph from_successors(const std::vector<std::size_t>& succ) {
    std::vector<std::string> verts;
    for (std::size_t i = 0; i < succ.size(); ++i) verts.push_back("f" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < succ.size(); ++i) edges.emplace_back(verts[i], verts[succ[i]]);
    return Digraph(std::move(verts), std::move(edges));
}

}  // namespace

TEST_CASE("parsing shapes") {
    Formula f = parse_formula("exists x. x -> x");
    CHECK(f.kind == FormulaKind::ExistsVertex);
    CHECK(f.children[0].kind == FormulaKind::EdgeAtom);

    Formula set_f = parse_formula("existsS X. exists x. x in X");
    CHECK(set_f.kind == FormulaKind::ExistsSet);
    CHECK(set_f.children[0].children[0].kind == FormulaKind::MemberAtom);

    Formula chi_text = parse_formula(
        "forall x. exists y. (x -> y) & (forall z. z != y => !(x -> z))");
    CHECK(chi_text == chi());
}

TEST_CASE("parser rejections carry positions") {
    CHECK_THROWS_AS(parse_formula("exists x. x -> "), SyntaxError);
    CHECK_THROWS_AS(parse_formula("x -> x"), SyntaxError);  // unbound
    CHECK_THROWS_AS(parse_formula("exists x. exists x. x -> x"), SyntaxError);  // rebound
    CHECK_THROWS_AS(parse_formula("exists X. existsS X2. x in X2"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("existsS X. exists x. X in x"), SyntaxError);  // kinds
    CHECK_THROWS_AS(parse_formula("exists x. (x -> x"), SyntaxError);
    try {
        parse_formula("exists x. x -> @");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("print/parse round trip") {
    Rng rng(21);
    testing::FormulaCorpus corpus(rng);
    std::vector<std::string> named = {
        "exists x. x -> x",
        "forall x. exists y. x -> y",
        kStrongComponent,
        kInjective,
        "forall x. exists y. (x -> y) & (forall z. z != y => !(x -> z))",
    };
    for (const auto& text : named) {
        Formula f = parse_formula(text);
        CHECK(parse_formula(print_formula(f)) == f);
    }
    for (int i = 0; i < 150; ++i) {
        Formula f = corpus.formula(1 + testing::pick(rng, 2));
        CHECK(parse_formula(print_formula(f)) == f);
    }
}

TEST_CASE("rank") {
    CHECK(rank(parse_formula("exists x. x -> x")) == 1);
    CHECK(rank(chi()) == 3);
    CHECK(rank(parse_formula(kInjective)) == 4);
    Formula loose;
    loose.kind = FormulaKind::EdgeAtom;
    loose.var = "x";
    loose.var2 = "x";
    CHECK_THROWS_AS(rank(loose), FreeVariable);
}

TEST_CASE("evaluation basics") {
    Formula fp = parse_formula("exists x. x -> x");
    CHECK(evaluate(fp, self_loop()));
    CHECK_FALSE(evaluate(fp, cycle(2)));

    Formula scc = parse_formula(kStrongComponent);
    CHECK(evaluate(scc, cycle(2)));
    CHECK_FALSE(evaluate(scc, Digraph({"a", "b"}, {{"a", "b"}})));
}

TEST_CASE("chi agrees with the out-degree checker") {
    CHECK(evaluate(chi(), cycle(2)));
    CHECK_FALSE(evaluate(chi(), Digraph({"a", "b"}, {{"a", "a"}, {"a", "b"}})));

    // every functional digraph on up to six vertices satisfies chi
    Rng rng(22);
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::size_t> succ(n, 0);
        for (;;) {
            CHECK(evaluate(chi(), from_successors(succ)));
            std::size_t i = 0;
            while (i < n && ++succ[i] == n) succ[i++] = 0;
            if (i == n) break;
        }
    }
    for (int trial = 0; trial < 200; ++trial) {
        Digraph g = testing::random_digraph(rng, 1 + testing::pick(rng, 6));
        CHECK(evaluate(chi(), g) == out_degree_exactly(g, 1));
    }
    for (std::size_t n = 5; n <= 6; ++n)
        for (int trial = 0; trial < 100; ++trial)
            CHECK(evaluate(chi(), testing::random_functional_digraph(rng, n)));
}

TEST_CASE("negation, De Morgan and quantifier duality") {
    Rng rng(23);
    testing::FormulaCorpus corpus(rng);
    for (int trial = 0; trial < 60; ++trial) {
        Formula f = corpus.formula(1 + testing::pick(rng, 2));
        Digraph g = testing::random_digraph(rng, 1 + testing::pick(rng, 4));

        Formula negated;
        negated.kind = FormulaKind::Not;
        negated.children = {f};
        CHECK(evaluate(negated, g) == !evaluate(f, g));

        if (f.kind == FormulaKind::ExistsVertex || f.kind == FormulaKind::ExistsSet) {
            // exists v. phi  ==  ! forall v. ! phi
            Formula inner_not;
            inner_not.kind = FormulaKind::Not;
            inner_not.children = {f.children[0]};
            Formula dual;
            dual.kind = f.kind == FormulaKind::ExistsVertex ? FormulaKind::ForallVertex
                                                            : FormulaKind::ForallSet;
            dual.var = f.var;
            dual.slot = f.slot;
            dual.children = {inner_not};
            Formula outer_not;
            outer_not.kind = FormulaKind::Not;
            outer_not.children = {dual};
            CHECK(evaluate(f, g) == evaluate(outer_not, g));
        }
    }
}

TEST_CASE("evaluation is isomorphism invariant") {
    Rng rng(24);
    testing::FormulaCorpus corpus(rng);
    for (int trial = 0; trial < 60; ++trial) {
        Formula f = corpus.formula(1 + testing::pick(rng, 2));
        Digraph g = testing::random_digraph(rng, 1 + testing::pick(rng, 4));
        CHECK(evaluate(f, g) == evaluate(f, testing::relabel(rng, g)));
    }
}

TEST_CASE("evaluation bounds") {
    Formula set_f = parse_formula("existsS X. exists x. x in X");
    EvalLimits limits;
    limits.set_bound = 3;
    CHECK_THROWS_AS(evaluate(set_f, cycle(4), limits), SizeBoundExceeded);
    EvalLimits point_limits;
    point_limits.point_bound = 3;
    CHECK_THROWS_AS(evaluate(parse_formula("exists x. x -> x"), cycle(4), point_limits),
                    SizeBoundExceeded);
}

TEST_CASE("ef game basics") {
    CHECK(ef_equiv(cycle(3), cycle(3), 3));
    CHECK_FALSE(ef_equiv(cycle(2), cycle(3), 2));
    Rng rng(25);
    Digraph g = testing::random_digraph(rng, 4);
    CHECK(ef_equiv(g, testing::relabel(rng, g), 2));
    CHECK_THROWS_AS(ef_equiv(cycle(3), cycle(3), 4), SizeBoundExceeded);
    Digraph big = testing::random_digraph(rng, 7);
    CHECK_THROWS_AS(ef_equiv(big, big, 1), SizeBoundExceeded);
}

TEST_CASE("ef equivalence implies corpus agreement on small pairs") {
    Rng rng(26);
    testing::FormulaCorpus corpus(rng);
    std::vector<Formula> formulas;
    for (int i = 0; i < 40; ++i) formulas.push_back(corpus.formula(2));
    for (int trial = 0; trial < 120; ++trial) {
        Digraph g = testing::random_digraph(rng, 1 + testing::pick(rng, 4));
        Digraph h = testing::random_digraph(rng, 1 + testing::pick(rng, 4));
        if (!ef_equiv(g, h, 2)) continue;
        for (const auto& f : formulas)
            if (rank(f) <= 2) CHECK(evaluate(f, g) == evaluate(f, h));
    }
}
