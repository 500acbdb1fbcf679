#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "netglue/cli.hpp"
#include "netglue/demos.hpp"
#include "netglue/isomorphism.hpp"
#include "netglue/json_io.hpp"

using namespace netglue;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("netglue-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

struct CliResult {
    int code;
    Json json;  // first line parsed when possible
    std::string raw;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    CliResult r{code, Json(), out.str(), err.str()};
    std::istringstream lines(r.raw);
    std::string first;
    if (std::getline(lines, first) && !first.empty()) {
        try {
            r.json = Json::parse(first);
        } catch (...) {
        }
    }
    return r;
}

}  // namespace

TEST_CASE("mc check matches the library") {
    TempDir dir;
    write_text(dir.file("psi.txt"), "exists x. x -> x\n");
    Digraph loop({"a"}, {{"a", "a"}});
    write_json_file(dir.file("g.json"), digraph_to_json(loop), false);

    auto r = run({"mc", "check", "--psi", dir.file("psi.txt"), "--graph", dir.file("g.json")});
    CHECK(r.code == 0);
    CHECK(r.json["result"] == true);
    CHECK(evaluate(parse_formula("exists x. x -> x"), loop) == true);

    Digraph two({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    write_json_file(dir.file("g2.json"), digraph_to_json(two), false);
    auto r2 = run({"mc", "check", "--psi", dir.file("psi.txt"), "--graph", dir.file("g2.json")});
    CHECK(r2.code == 1);
    CHECK(r2.json["result"] == false);
}

TEST_CASE("glue subcommand equals delta") {
    TempDir dir;
    PortedGraph edge(Digraph({"x", "y"}, {{"x", "y"}}), {"x"}, {"y"});
    write_json_file(dir.file("1.json"), ported_to_json(edge), false);
    auto r = run({"glue", "--family", dir.path.string(), "--word", "111"});
    REQUIRE(r.code == 0);
    PortedGraph direct = delta(GadgetFamily({{'1', edge}}), "111");
    CHECK(ported_from_json(r.json).graph().edges() == direct.graph().edges());
}

TEST_CASE("td validate and glue") {
    TempDir dir;
    TreeDecomp t({"n0", "n1"}, {{"n1", "n0"}},
                 {{"n0", {"1", "2"}}, {"n1", {"2", "3"}}}, "n0", "n1");
    Digraph g({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    write_json_file(dir.file("t.json"), treedec_to_json(t), false);
    write_json_file(dir.file("g.json"), digraph_to_json(g), false);
    auto r = run({"td", "validate", "--decomp", dir.file("t.json"), "--graph",
                  dir.file("g.json")});
    CHECK(r.code == 0);
    CHECK(r.json["result"] == true);

    auto rg = run({"td", "glue", "--left", dir.file("t.json"), "--right", dir.file("t.json")});
    REQUIRE(rg.code == 0);
    TreeDecomp glued = glue_td(t, t);
    CHECK(treedec_from_json(rg.json).nodes() == glued.nodes());
}

TEST_CASE("arith solve lists witnesses then a summary") {
    auto r = run({"arith", "solve", "--a", "2", "--b", "4", "--q", "2", "--nmax", "5"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.raw);
    std::string line;
    std::vector<Json> rows;
    while (std::getline(lines, line))
        if (!line.empty()) rows.push_back(Json::parse(line));
    REQUIRE(rows.size() == 5);  // four witnesses plus the summary
    CHECK(rows[0]["witness"]["K"] == "0");
    CHECK(rows[0]["witness"]["N"] == 2);
    CHECK(rows[3]["witness"]["K"] == "14");
    CHECK(rows[3]["witness"]["N"] == 5);
    CHECK(rows[4]["geometric_sequence"]["mu"] == 1);
    CHECK(rows[4]["geometric_sequence"]["N0"] == 2);
    CHECK(rows[4]["periodicity"]["mu"] == 1);
}

TEST_CASE("dyn expand writes the dynamics") {
    TempDir dir;
    Digraph two_cycle({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    auto d = lookup_table_network(two_cycle, {2});
    write_json_file(dir.file("d.json"), descriptor_to_json(d), false);
    auto r = run({"dyn", "expand", "--descriptor", dir.file("d.json"), "-o",
                  dir.file("dyn.json")});
    REQUIRE(r.code == 0);
    Digraph expanded = digraph_from_json(read_json_file(dir.file("dyn.json")));
    CHECK(isomorphic(expanded, two_cycle));
}

TEST_CASE("pump pipeline through files") {
    TempDir dir;
    auto fixture = demos::chain_pump_fixture();
    write_json_file(dir.file("model.json"), digraph_to_json(fixture.model), false);
    write_json_file(dir.file("decomp.json"), treedec_to_json(fixture.decomp), false);
    write_text(dir.file("psi.txt"), print_formula(fixture.psi));
    fs::create_directories(dir.file("ctx"));
    for (std::size_t i = 0; i < fixture.ctx.contexts.size(); ++i)
        write_json_file(dir.file("ctx/c" + std::to_string(i) + ".json"),
                        ported_to_json(fixture.ctx.contexts[i]), false);

    auto found = run({"pump", "find", "--model", dir.file("model.json"), "--decomp",
                      dir.file("decomp.json"), "--psi", dir.file("psi.txt"), "--ctx",
                      dir.file("ctx"), "-o", dir.file("triple")});
    REQUIRE(found.code == 0);

    auto verified = run({"pump", "verify", "--triple", dir.file("triple"), "--psi",
                         dir.file("psi.txt"), "--lmax", "6", "--functional"});
    CHECK(verified.code == 0);
    CHECK(verified.json["result"] == true);

    // assembly through files, with a segment triple whose ports do not overlap
    fs::create_directories(dir.file("seg"));
    write_json_file(dir.file("seg/g1.json"),
                    ported_to_json(PortedGraph(
                        Digraph({"p", "m", "v"}, {{"p", "m"}, {"m", "v"}}), {"p"}, {"v"})),
                    false);
    write_json_file(dir.file("seg/g2.json"),
                    ported_to_json(PortedGraph(Digraph({"r", "p"}, {{"r", "p"}}),
                                               {"r"}, {"p"})),
                    false);
    write_json_file(dir.file("seg/g3.json"),
                    ported_to_json(PortedGraph(Digraph({"v"}, {{"v", "v"}}), {"v"}, {"v"})),
                    false);
    Digraph omega({"z"}, {{"z", "z"}});
    write_json_file(dir.file("omega.json"), digraph_to_json(omega), false);
    auto assembled = run({"pump", "assemble", "--triple", dir.file("seg"), "--omega",
                          dir.file("omega.json"), "--q", "2", "-o", dir.file("gadgets")});
    CHECK(assembled.code == 0);
    CHECK(fs::exists(dir.file("gadgets/gadgets.json")));
    auto gadgets = gadgets_from_json(read_json_file(dir.file("gadgets/gadgets.json")));
    CHECK(conditions_check(gadgets));
}

TEST_CASE("reduce build and verify round trip") {
    TempDir dir;
    auto gadgets = demos::fixed_point_gadgets();
    fs::create_directories(dir.file("gadgets"));
    write_json_file(dir.file("gadgets/gadgets.json"), gadgets_to_json(gadgets), false);
    write_text(dir.file("s.txt"), "(x1 | x2) & (!x1 | !x2) & x3");
    write_text(dir.file("psi.txt"), "exists x. x -> x");

    auto built = run({"reduce", "build", "--gadgets", dir.file("gadgets"), "--formula",
                      dir.file("s.txt"), "--mode", "boolean", "--kind", "an", "--orient",
                      "sat", "-o", dir.file("out.json")});
    REQUIRE(built.code == 0);
    CHECK(built.json["total"] == 16);

    auto verified = run({"reduce", "verify", "--output", dir.file("out.json"), "--psi",
                         dir.file("psi.txt")});
    CHECK(verified.code == 0);
    CHECK(verified.json["dynamics_matches_delta"] == true);
}

TEST_CASE("usage errors exit with two") {
    auto r = run({"mc", "check", "--nonsense"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    auto r2 = run({"no-such-command"});
    CHECK(r2.code == 2);
    auto r3 = run({"mc", "check", "--psi", "/nonexistent/psi.txt", "--graph",
                   "/nonexistent/g.json"});
    CHECK(r3.code == 2);
}
