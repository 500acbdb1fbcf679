#include "netglue/cli.hpp"

#include <filesystem>
#include <ostream>

#include <CLI11.hpp>

#include "netglue/demos.hpp"
#include "netglue/isomorphism.hpp"
#include "netglue/json_io.hpp"

namespace netglue {

namespace {

namespace fs = std::filesystem;

struct CliState {
    bool pretty = false;
    std::uint64_t seed = 0;  // reserved for randomized subcommands
    std::ostream* out = nullptr;
};

void emit(const CliState& st, const Json& j) {
    *st.out << (st.pretty ? j.dump(2) : j.dump()) << "\n";
}

Formula load_formula(const std::string& path) { return parse_formula(read_text_file(path)); }

GadgetFamily load_family_dir(const std::string& dir, const Word& word) {
    std::map<char, PortedGraph> members;
    for (char symbol : word) {
        if (members.count(symbol)) continue;
        fs::path p = fs::path(dir) / (std::string(1, symbol) + ".json");
        members.emplace(symbol, ported_from_json(read_json_file(p.string())));
    }
    return GadgetFamily(std::move(members));
}

PumpTriple load_triple_dir(const std::string& dir) {
    auto graph = [&](const char* name) {
        return ported_from_json(read_json_file((fs::path(dir) / name).string()));
    };
    return PumpTriple(graph("g1.json"), graph("g2.json"), graph("g3.json"));
}

ContextFamily load_ctx_dir(const std::string& dir) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    std::vector<PortedGraph> contexts;
    for (const auto& f : files) contexts.push_back(ported_from_json(read_json_file(f)));
    return ContextFamily(std::move(contexts));
}

int cmd_dyn_expand(CliState& st, const std::string& descriptor_path,
                   const std::string& out_path, std::uint64_t bound) {
    NetworkDescriptor d = descriptor_from_json(read_json_file(descriptor_path));
    Digraph dynamics = expand_dynamics(d, bound);
    Json j = digraph_to_json(dynamics);
    if (out_path.empty())
        emit(st, j);
    else
        write_json_file(out_path, j, st.pretty);
    return 0;
}

int cmd_mc_check(CliState& st, const std::string& psi_path, const std::string& graph_path) {
    Formula psi = load_formula(psi_path);
    Digraph g = digraph_from_json(read_json_file(graph_path));
    const bool result = evaluate(psi, g);
    emit(st, Json{{"result", result}});
    return result ? 0 : 1;
}

int cmd_glue(CliState& st, const std::string& family_dir, const std::string& word,
             const std::string& out_path) {
    GadgetFamily family = load_family_dir(family_dir, word);
    PortedGraph result = delta(family, word);
    Json j = ported_to_json(result);
    if (out_path.empty())
        emit(st, j);
    else
        write_json_file(out_path, j, st.pretty);
    return 0;
}

int cmd_td_validate(CliState& st, const std::string& decomp_path,
                    const std::string& graph_path) {
    TreeDecomp t = treedec_from_json(read_json_file(decomp_path));
    Digraph g = digraph_from_json(read_json_file(graph_path));
    const bool result = is_valid_decomposition(t, g);
    emit(st, Json{{"result", result, }, {"width", width(t)}});
    return result ? 0 : 1;
}

int cmd_td_glue(CliState& st, const std::string& left_path, const std::string& right_path,
                const std::string& out_path) {
    TreeDecomp left = treedec_from_json(read_json_file(left_path));
    TreeDecomp right = treedec_from_json(read_json_file(right_path));
    Json j = treedec_to_json(glue_td(left, right));
    if (out_path.empty())
        emit(st, j);
    else
        write_json_file(out_path, j, st.pretty);
    return 0;
}

int cmd_arith_solve(CliState& st, std::uint64_t a, std::uint64_t b, std::uint64_t q,
                    std::uint32_t nmax) {
    arith::PumpArithmetic family(a, b, q);
    for (const auto& w : family.solutions(nmax))
        emit(st, Json{{"witness", {{"K", w.K.to_string()}, {"N", w.N}}}});
    auto cop = arith::coprime_power(a, q);
    Json summary{{"eta", cop.eta}, {"a_prime", cop.a_prime}};
    if (auto per = family.period())
        summary["periodicity"] = {{"mu", per->mu}, {"kappa", per->kappa.to_string()}};
    else
        summary["periodicity"] = nullptr;
    if (auto seq = family.sequence())
        summary["geometric_sequence"] = {{"N0", seq->N0}, {"mu", seq->mu}};
    else
        summary["geometric_sequence"] = nullptr;
    emit(st, summary);
    return 0;
}

int cmd_pump_find(CliState& st, const std::string& model_path, const std::string& decomp_path,
                  const std::string& psi_path, const std::string& ctx_dir,
                  const std::string& out_dir) {
    Digraph model = digraph_from_json(read_json_file(model_path));
    TreeDecomp decomp = treedec_from_json(read_json_file(decomp_path));
    Formula psi = load_formula(psi_path);
    ContextFamily ctx = load_ctx_dir(ctx_dir);
    auto triple = find_pump(model, decomp, psi, ctx);
    if (!triple) {
        emit(st, Json{{"result", nullptr}});
        return 1;
    }
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_json_file((fs::path(out_dir) / "g1.json").string(), ported_to_json(triple->g1),
                        st.pretty);
        write_json_file((fs::path(out_dir) / "g2.json").string(), ported_to_json(triple->g2),
                        st.pretty);
        write_json_file((fs::path(out_dir) / "g3.json").string(), ported_to_json(triple->g3),
                        st.pretty);
    }
    emit(st, Json{{"result", triple_to_json(*triple)}});
    return 0;
}

int cmd_pump_verify(CliState& st, const std::string& triple_dir, const std::string& psi_path,
                    std::size_t lmax, bool functional) {
    PumpTriple triple = load_triple_dir(triple_dir);
    Formula psi = load_formula(psi_path);
    const bool result = verify_pump(triple, psi, lmax, functional);
    emit(st, Json{{"result", result}});
    return result ? 0 : 1;
}

int cmd_pump_assemble(CliState& st, const std::string& triple_dir,
                      const std::string& omega_path, std::int64_t q,
                      const std::string& out_dir) {
    PumpTriple triple = load_triple_dir(triple_dir);
    Digraph omega = digraph_from_json(read_json_file(omega_path));
    std::optional<std::uint64_t> q_opt;
    if (q > 0) q_opt = static_cast<std::uint64_t>(q);
    AssembledGadgets gadgets = assemble_gadgets(triple, omega, q_opt);
    fs::create_directories(out_dir);
    write_json_file((fs::path(out_dir) / "gadgets.json").string(), gadgets_to_json(gadgets),
                    st.pretty);
    const PortedGraph* graphs[] = {&gadgets.g0, &gadgets.g1, &gadgets.g2, &gadgets.g3,
                                   &gadgets.g4};
    for (int i = 0; i < 5; ++i)
        write_json_file((fs::path(out_dir) / ("g" + std::to_string(i) + ".json")).string(),
                        ported_to_json(*graphs[i]), st.pretty);
    emit(st, Json{{"alpha", gadgets.alpha}, {"a", gadgets.a}, {"b", gadgets.b}});
    return 0;
}

int cmd_reduce_build(CliState& st, const std::string& gadgets_dir,
                     const std::string& formula_path, const std::string& mode_text,
                     const std::string& kind_text, const std::string& orient_text,
                     std::uint32_t vars, const std::string& out_path) {
    AssembledGadgets gadgets = gadgets_from_json(
        read_json_file((fs::path(gadgets_dir) / "gadgets.json").string()));
    PropFormula S = parse_prop(read_text_file(formula_path));
    const std::uint32_t s = vars > 0 ? vars : S.max_var();

    ReduceMode mode;
    if (mode_text == "boolean") {
        mode.q = std::nullopt;
    } else if (mode_text.rfind("q:", 0) == 0) {
        mode.q = static_cast<std::uint32_t>(std::stoul(mode_text.substr(2)));
    } else {
        throw CLI::ValidationError("--mode must be boolean or q:<q>");
    }
    const NetworkKind kind =
        kind_text == "an" ? NetworkKind::Deterministic : NetworkKind::Nondeterministic;
    const Orientation orient =
        orient_text == "sat" ? Orientation::FromSat : Orientation::FromUnsat;

    ReductionOutput out = compile_reduction(gadgets, S, s, kind, mode, orient);
    write_json_file(out_path, reduction_to_json(out, gadgets), st.pretty);
    emit(st, Json{{"total", out.layout.total},
                  {"n", out.layout.n},
                  {"q", out.layout.q},
                  {"gates", out.descriptor.circuit.gate_count()},
                  {"word_length", out.expected_word.size()}});
    return 0;
}

int cmd_reduce_verify(CliState& st, const std::string& output_path,
                      const std::string& psi_path) {
    auto [out, gadgets] = reduction_from_json(read_json_file(output_path));
    Formula psi = load_formula(psi_path);
    ReductionReport report = verify_reduction(out, gadgets, psi);
    emit(st, Json{{"dynamics_matches_delta", report.dynamics_matches_delta},
                  {"psi_matches_word", report.psi_matches_word},
                  {"satisfiability_matches_word", report.satisfiability_matches_word},
                  {"details", report.details}});
    return report.all_ok() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliState st;
    st.out = &out;

    CLI::App app{"automata-network dynamics toolkit"};
    app.require_subcommand(1);
    app.add_flag("--pretty", st.pretty, "pretty-print JSON output");
    app.add_option("--seed", st.seed, "seed for randomized corpora (reserved)");

    int rc = 0;
    auto run = [&rc](auto fn) {
        return [&rc, fn]() { rc = fn(); };
    };

    // dyn
    auto* dyn = app.add_subcommand("dyn", "expand circuit-encoded dynamics");
    auto* dyn_expand = dyn->add_subcommand("expand", "materialize the dynamics digraph");
    {
        auto opts = std::make_shared<std::tuple<std::string, std::string, std::uint64_t>>(
            "", "", kDefaultExpandBound);
        dyn_expand->add_option("--descriptor", std::get<0>(*opts), "network descriptor JSON")
            ->required();
        dyn_expand->add_option("-o,--output", std::get<1>(*opts), "output graph JSON");
        dyn_expand->add_option("--bound", std::get<2>(*opts), "configuration-count bound");
        dyn_expand->callback(run([&st, opts]() {
            return cmd_dyn_expand(st, std::get<0>(*opts), std::get<1>(*opts),
                                  std::get<2>(*opts));
        }));
    }

    // mc
    auto* mc = app.add_subcommand("mc", "MSO model checking");
    auto* mc_check = mc->add_subcommand("check", "evaluate a formula on a digraph");
    {
        auto opts = std::make_shared<std::pair<std::string, std::string>>();
        mc_check->add_option("--psi", opts->first, "formula file")->required();
        mc_check->add_option("--graph", opts->second, "graph JSON")->required();
        mc_check->callback(
            run([&st, opts]() { return cmd_mc_check(st, opts->first, opts->second); }));
    }

    // glue
    auto* glue_cmd = app.add_subcommand("glue", "fold a gadget family along a word");
    {
        auto opts = std::make_shared<std::tuple<std::string, std::string, std::string>>();
        glue_cmd->add_option("--family", std::get<0>(*opts), "directory of <symbol>.json")
            ->required();
        glue_cmd->add_option("--word", std::get<1>(*opts), "index word")->required();
        glue_cmd->add_option("-o,--output", std::get<2>(*opts), "output graph JSON");
        glue_cmd->callback(run([&st, opts]() {
            return cmd_glue(st, std::get<0>(*opts), std::get<1>(*opts), std::get<2>(*opts));
        }));
    }

    // td
    auto* td = app.add_subcommand("td", "tree-decompositions");
    auto* td_validate = td->add_subcommand("validate", "check the decomposition conditions");
    {
        auto opts = std::make_shared<std::pair<std::string, std::string>>();
        td_validate->add_option("--decomp", opts->first, "decomposition JSON")->required();
        td_validate->add_option("--graph", opts->second, "graph JSON")->required();
        td_validate->callback(
            run([&st, opts]() { return cmd_td_validate(st, opts->first, opts->second); }));
    }
    auto* td_glue = td->add_subcommand("glue", "bag-substitution gluing");
    {
        auto opts = std::make_shared<std::tuple<std::string, std::string, std::string>>();
        td_glue->add_option("--left", std::get<0>(*opts), "left decomposition JSON")
            ->required();
        td_glue->add_option("--right", std::get<1>(*opts), "right decomposition JSON")
            ->required();
        td_glue->add_option("-o,--output", std::get<2>(*opts), "output JSON");
        td_glue->callback(run([&st, opts]() {
            return cmd_td_glue(st, std::get<0>(*opts), std::get<1>(*opts), std::get<2>(*opts));
        }));
    }

    // arith
    auto* arith_cmd = app.add_subcommand("arith", "pumping arithmetic");
    auto* arith_solve = arith_cmd->add_subcommand("solve", "witnesses of a*K + b = q^N");
    {
        auto opts = std::make_shared<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t,
                                                std::uint32_t>>(
            0, 0, 0, arith::kDefaultSolutionExponentBound);
        arith_solve->add_option("--a", std::get<0>(*opts), "step size a")->required();
        arith_solve->add_option("--b", std::get<1>(*opts), "base size b")->required();
        arith_solve->add_option("--q", std::get<2>(*opts), "alphabet size q")->required();
        arith_solve->add_option("--nmax", std::get<3>(*opts), "largest exponent searched");
        arith_solve->callback(run([&st, opts]() {
            return cmd_arith_solve(st, std::get<0>(*opts), std::get<1>(*opts),
                                   std::get<2>(*opts), std::get<3>(*opts));
        }));
    }

    // pump
    auto* pump = app.add_subcommand("pump", "pump extraction and verification");
    auto* pump_find = pump->add_subcommand("find", "extract a pump triple");
    {
        auto opts = std::make_shared<std::array<std::string, 5>>();
        pump_find->add_option("--model", (*opts)[0], "model graph JSON")->required();
        pump_find->add_option("--decomp", (*opts)[1], "tree decomposition JSON")->required();
        pump_find->add_option("--psi", (*opts)[2], "formula file")->required();
        pump_find->add_option("--ctx", (*opts)[3], "context directory")->required();
        pump_find->add_option("-o,--output", (*opts)[4], "output triple directory");
        pump_find->callback(run([&st, opts]() {
            return cmd_pump_find(st, (*opts)[0], (*opts)[1], (*opts)[2], (*opts)[3],
                                 (*opts)[4]);
        }));
    }
    auto* pump_verify = pump->add_subcommand("verify", "check psi over the pumped words");
    {
        auto opts = std::make_shared<std::tuple<std::string, std::string, std::size_t, bool>>(
            "", "", 8, false);
        pump_verify->add_option("--triple", std::get<0>(*opts), "triple directory")
            ->required();
        pump_verify->add_option("--psi", std::get<1>(*opts), "formula file")->required();
        pump_verify->add_option("--lmax", std::get<2>(*opts), "largest repetition count");
        pump_verify->add_flag("--functional", std::get<3>(*opts),
                              "also require out-degree one");
        pump_verify->callback(run([&st, opts]() {
            return cmd_pump_verify(st, std::get<0>(*opts), std::get<1>(*opts),
                                   std::get<2>(*opts), std::get<3>(*opts));
        }));
    }
    auto* pump_assemble = pump->add_subcommand("assemble", "build the five-gadget family");
    {
        auto opts = std::make_shared<std::tuple<std::string, std::string, std::int64_t,
                                                std::string>>("", "", 0, "");
        pump_assemble->add_option("--triple", std::get<0>(*opts), "triple directory")
            ->required();
        pump_assemble->add_option("--omega", std::get<1>(*opts), "saturating graph JSON")
            ->required();
        pump_assemble->add_option("--q", std::get<2>(*opts),
                                  "choose alpha as a power of this q");
        pump_assemble->add_option("-o,--output", std::get<3>(*opts), "output directory")
            ->required();
        pump_assemble->callback(run([&st, opts]() {
            return cmd_pump_assemble(st, std::get<0>(*opts), std::get<1>(*opts),
                                     std::get<2>(*opts), std::get<3>(*opts));
        }));
    }

    // reduce
    auto* reduce = app.add_subcommand("reduce", "metareduction compiler");
    auto* reduce_build = reduce->add_subcommand("build", "compile a network from gadgets + S");
    {
        auto opts = std::make_shared<std::tuple<std::string, std::string, std::string,
                                                std::string, std::string, std::uint32_t,
                                                std::string>>(
            "", "", "boolean", "an", "sat", 0, "");
        reduce_build->add_option("--gadgets", std::get<0>(*opts), "gadget directory")
            ->required();
        reduce_build->add_option("--formula", std::get<1>(*opts), "propositional formula file")
            ->required();
        reduce_build->add_option("--mode", std::get<2>(*opts), "boolean or q:<q>");
        reduce_build->add_option("--kind", std::get<3>(*opts), "an or nan")
            ->check(CLI::IsMember({"an", "nan"}));
        reduce_build->add_option("--orient", std::get<4>(*opts), "sat or unsat")
            ->check(CLI::IsMember({"sat", "unsat"}));
        reduce_build->add_option("--vars", std::get<5>(*opts),
                                 "variable count s (default: largest index in S)");
        reduce_build->add_option("-o,--output", std::get<6>(*opts), "output JSON")->required();
        reduce_build->callback(run([&st, opts]() {
            return cmd_reduce_build(st, std::get<0>(*opts), std::get<1>(*opts),
                                    std::get<2>(*opts), std::get<3>(*opts),
                                    std::get<4>(*opts), std::get<5>(*opts),
                                    std::get<6>(*opts));
        }));
    }
    auto* reduce_verify = reduce->add_subcommand("verify", "verify a compiled reduction");
    {
        auto opts = std::make_shared<std::pair<std::string, std::string>>();
        reduce_verify->add_option("--output", opts->first, "compiled reduction JSON")
            ->required();
        reduce_verify->add_option("--psi", opts->second, "formula file")->required();
        reduce_verify->callback(
            run([&st, opts]() { return cmd_reduce_verify(st, opts->first, opts->second); }));
    }

    std::vector<const char*> argv;
    argv.push_back("netglue");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace netglue
