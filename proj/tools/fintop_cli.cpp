// Command line front end. Exit codes: 0 verified/ok, 1 property violated
// (counterexample emitted), 2 usage or input error, 3 resource budget
// exceeded.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fintop/docio.hpp"
#include "fintop/enumerate.hpp"
#include "fintop/errors.hpp"
#include "fintop/game.hpp"
#include "fintop/generate.hpp"
#include "fintop/quotient.hpp"
#include "fintop/sweeps.hpp"
#include "fintop/transfer.hpp"

namespace {

using namespace fintop;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

ParseMode mode_of(bool lax) { return lax ? ParseMode::lax : ParseMode::strict; }

SpaceDoc load_space_file(const std::string& path, bool lax, bool auto_close) {
    return load_space(read_file(path), mode_of(lax), auto_close);
}

std::pair<int, int> parse_edge(const std::string& text) {
    auto lt = text.find('<');
    if (lt == std::string::npos)
        throw input_error("edge '" + text + "' is not of the form a<b");
    return {std::stoi(text.substr(0, lt)), std::stoi(text.substr(lt + 1))};
}

PointSet parse_block(const std::string& text) {
    PointSet s;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string part = text.substr(pos, comma - pos);
        if (part.empty()) throw input_error("block '" + text + "' has an empty entry");
        int x = std::stoi(part);
        if (x < 0 || x >= 64) throw input_error("block point " + part + " out of range");
        s = s.with(x);
        pos = comma + 1;
    }
    return s;
}

SetFamily role_family(const FiniteSpace& space, const std::string& role) {
    if (role == "base") return topology_as_base(space);
    if (role == "pi_base") return nonempty_opens_pi_base(space);
    throw input_error("unknown family role '" + role + "'");
}

std::string pair_counterexample(const SetFamily& family, int i, int j) {
    return "violated pair " + std::to_string(i) + " " + std::to_string(j) + "\n" +
           "U=" + family.member(i).to_string() + " V=" + family.member(j).to_string() + "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"finite topology workbench"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a space document");
    std::string gen_kind;
    GenSpec spec;
    std::vector<std::string> gen_edges, gen_blocks;
    std::string gen_name, gen_out;
    gen->add_option("--kind", gen_kind, "discrete|indiscrete|sierpinski|alexandrov|random|cluster")
        ->required();
    gen->add_option("--n", spec.n, "point count");
    gen->add_option("--seed", spec.seed, "random seed");
    gen->add_option("--density", spec.density, "openness knob in [0,1]");
    gen->add_option("--edge", gen_edges, "poset edge a<b (repeatable)");
    gen->add_option("--block", gen_blocks, "cluster block 0,1 (repeatable)");
    gen->add_option("--name", gen_name, "space name");
    gen->add_option("-o,--out", gen_out, "output path (default stdout)");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "all topologies on n points");
    int enum_points = 0;
    std::string enum_out;
    enumerate->add_option("--points", enum_points, "point count, 1..4")->required();
    enumerate->add_option("-o,--out", enum_out, "directory for the space documents");

    // verify-fns / verify-fn
    auto* vfns = app.add_subcommand("verify-fns", "check a separation operator document");
    auto* vfn = app.add_subcommand("verify-fn", "check an up/down operator document");
    std::string v_space, v_witness;
    bool v_lax = false;
    for (auto* sub : {vfns, vfn}) {
        sub->add_option("--space", v_space, "space document")->required();
        sub->add_option("--witness", v_witness, "witness document")->required();
        sub->add_flag("--lax", v_lax, "skip unknown directives");
    }

    // search-fns
    auto* search = app.add_subcommand("search-fns", "minimal uniform separation bound");
    std::string s_space, s_role = "base", s_out;
    int s_kmax = 3;
    search->add_option("--space", s_space, "space document")->required();
    search->add_option("--family-role", s_role, "base|pi_base (family drawn from the topology)");
    search->add_option("--kmax", s_kmax, "largest bound to try")->required();
    search->add_option("-o,--out", s_out, "witness output path");

    // develop-fn
    auto* develop = app.add_subcommand("develop-fn", "up/down operators from a development");
    std::string d_space, d_out;
    std::vector<std::string> d_covers;
    develop->add_option("--space", d_space, "space document")->required();
    develop->add_option("--covers", d_covers, "cover family documents, coarse to fine")
        ->required()
        ->expected(-1);
    develop->add_option("-o,--out", d_out, "witness output path");

    // quotient
    auto* quot = app.add_subcommand("quotient", "quotient by an open family");
    std::string q_space, q_family, q_out;
    bool q_check_wcr = false, q_strict_empty = false;
    int q_kcap = 0;
    quot->add_option("--space", q_space, "space document")->required();
    quot->add_option("--family", q_family, "family document")->required();
    quot->add_flag("--check-wcr", q_check_wcr, "decide weak complete regularity first");
    quot->add_option("--kcap", q_kcap, "intersection arity cap (default family size)");
    quot->add_flag("--strict-empty", q_strict_empty,
                   "treat unmet empty intersections as failures");
    quot->add_option("-o,--out", q_out, "output path");

    // play
    auto* play_cmd = app.add_subcommand("play", "one game against a scripted opponent");
    std::string p_space, p_witness, p_adversary = "first_fit", p_out;
    std::vector<std::string> p_script;
    int p_horizon = 0;
    play_cmd->add_option("--space", p_space, "space document")->required();
    play_cmd->add_option("--witness", p_witness, "separation witness document")->required();
    play_cmd->add_option("--adversary", p_adversary, "first_fit|max_avoider|repeater|scripted");
    play_cmd->add_option("--script", p_script, "family documents for the scripted opponent");
    play_cmd->add_option("--horizon", p_horizon, "round limit")->required();
    play_cmd->add_option("-o,--out", p_out, "transcript output path");

    // oracle-win
    auto* oracle = app.add_subcommand("oracle-win", "exhaust every legal opponent");
    std::string o_space, o_witness;
    int o_horizon = 0;
    long long o_budget = 2'000'000;
    oracle->add_option("--space", o_space, "space document")->required();
    oracle->add_option("--witness", o_witness, "separation witness document")->required();
    oracle->add_option("--horizon", o_horizon, "round limit")->required();
    oracle->add_option("--budget", o_budget, "node budget");

    // transfer
    auto* transfer_cmd = app.add_subcommand("transfer", "carry a witness across a triple");
    std::string t_triple, t_base, t_witness;
    bool t_lax = false;
    transfer_cmd->add_option("--triple", t_triple, "triple document")->required();
    transfer_cmd->add_option("--base", t_base, "pi-base document over the x side")->required();
    transfer_cmd->add_option("--witness", t_witness, "witness document over the base")
        ->required();
    transfer_cmd->add_flag("--lax", t_lax, "skip unknown directives");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run an acceptance suite");
    std::string sw_suite, sw_out;
    int sw_max_points = 0, sw_workers = 1;
    sweep->add_option("suite", sw_suite, "lemmas|quotient|game|witness")->required();
    sweep->add_option("--max-points", sw_max_points, "largest point count")->required();
    sweep->add_option("--workers", sw_workers, "worker threads (output independent)");
    sweep->add_option("-o,--out", sw_out, "report output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (gen->parsed()) {
        auto kind = gen_kind_from_name(gen_kind);
        if (!kind) throw input_error("unknown kind '" + gen_kind + "'");
        spec.kind = *kind;
        for (const std::string& e : gen_edges) spec.poset_edges.push_back(parse_edge(e));
        for (const std::string& b : gen_blocks) spec.blocks.push_back(parse_block(b));
        FiniteSpace space = generate(spec);
        std::optional<std::string> name;
        if (!gen_name.empty()) name = gen_name;
        emit(save_space(space, name), gen_out);
        return exit_ok;
    }

    if (enumerate->parsed()) {
        std::vector<FiniteSpace> all = enumerate_topologies(enum_points);
        if (!enum_out.empty()) {
            std::filesystem::create_directories(enum_out);
            for (std::size_t i = 0; i < all.size(); ++i) {
                char tail[32];
                std::snprintf(tail, sizeof tail, "t%d-%03zu", enum_points, i);
                write_file(enum_out + "/" + tail + ".doc", save_space(all[i], tail));
            }
        }
        std::cout << "count " << all.size() << "\n";
        return exit_ok;
    }

    if (vfns->parsed()) {
        SpaceDoc doc = load_space_file(v_space, v_lax, false);
        FnsWitness w = load_fns(read_file(v_witness), doc.space, mode_of(v_lax));
        WitnessVerdict verdict = verify_fns(w);
        if (verdict.ok) {
            std::cout << "ok\n";
            return exit_ok;
        }
        auto [i, j] = *verdict.counterexample;
        std::cout << pair_counterexample(w.family, i, j);
        return exit_violation;
    }

    if (vfn->parsed()) {
        SpaceDoc doc = load_space_file(v_space, v_lax, false);
        FnWitness w = load_fn(read_file(v_witness), doc.space, mode_of(v_lax));
        WitnessVerdict verdict = verify_fn(w);
        if (verdict.ok) {
            std::cout << "ok\n";
            return exit_ok;
        }
        auto [i, j] = *verdict.counterexample;
        std::cout << pair_counterexample(w.base, i, j);
        return exit_violation;
    }

    if (search->parsed()) {
        SpaceDoc doc = load_space_file(s_space, false, false);
        SetFamily family = role_family(doc.space, s_role);
        std::optional<FnsSearchResult> found = search_fns(family, s_kmax);
        if (!found) {
            std::cout << "k-min none within " << s_kmax << "\n";
            return exit_ok;
        }
        std::cout << "k-min " << found->k_min << "\n";
        emit(save_fns(found->witness), s_out);
        return exit_ok;
    }

    if (develop->parsed()) {
        SpaceDoc doc = load_space_file(d_space, false, false);
        std::vector<SetFamily> covers;
        for (const std::string& path : d_covers)
            covers.push_back(load_family(read_file(path), doc.space));
        DevelopableFn out = developable_fn(doc.space, CoverSequence(doc.space, covers));
        emit(save_fn(out.witness), d_out);
        return exit_ok;
    }

    if (quot->parsed()) {
        SpaceDoc doc = load_space_file(q_space, false, false);
        SetFamily p = load_family(read_file(q_family), doc.space);
        if (q_check_wcr) {
            int cap = q_kcap > 0 ? q_kcap : std::max(1, p.size());
            WcrResult w = is_wcr(doc.space, p, cap, q_strict_empty);
            if (!w.ok) {
                const WcrFailure& f = *w.failure;
                std::cout << "wcr failed at intersection " << f.intersection.to_string();
                if (f.at_point) std::cout << " point " << *f.at_point;
                std::cout << "\n";
                return exit_violation;
            }
            std::cout << "wcr ok\n";
        }
        QuotientResult q = build_quotient(doc.space, p);
        emit(save_space(q.quotient) + save_family(q.base_image), q_out);
        return exit_ok;
    }

    if (play_cmd->parsed()) {
        SpaceDoc doc = load_space_file(p_space, false, false);
        FnsWitness w = load_fns(read_file(p_witness), doc.space);
        auto kind = adversary_kind_from_name(p_adversary);
        if (!kind) throw input_error("unknown adversary '" + p_adversary + "'");
        std::vector<SetFamily> script;
        for (const std::string& path : p_script)
            script.push_back(load_family(read_file(path), doc.space));
        SetFamily base = w.family;
        SigmaStrategy one(base, w);
        auto two = make_adversary(*kind, base, std::move(script));
        GameTranscript t = play(doc.space, base, one, *two, p_horizon);
        emit(save_transcript(t), p_out);
        return t.dense ? exit_ok : exit_violation;
    }

    if (oracle->parsed()) {
        SpaceDoc doc = load_space_file(o_space, false, false);
        FnsWitness w = load_fns(read_file(o_witness), doc.space);
        SetFamily base = w.family;
        SigmaStrategy one(base, w);
        WinResult win = exhaustive_win(doc.space, base, one, o_horizon, o_budget);
        if (win.wins_all) {
            std::cout << "wins within " << win.max_rounds << " rounds, " << win.nodes_visited
                      << " nodes\n";
            return exit_ok;
        }
        std::cout << "loses; one losing line:\n";
        if (win.worst_line) std::cout << save_transcript(*win.worst_line);
        return exit_violation;
    }

    if (transfer_cmd->parsed()) {
        AbsoluteTriple triple = load_triple(read_file(t_triple), mode_of(t_lax));
        const FiniteSpace& x = triple.g.target();
        SetFamily base = load_family(read_file(t_base), x, mode_of(t_lax));
        FnsWitness w = load_fns(read_file(t_witness), x, mode_of(t_lax));
        TransferResult out = transfer_witness(triple, base, w);
        std::cout << save_fns(out.s_z);
        return exit_ok;
    }

    if (sweep->parsed()) {
        ReportDoc report;
        if (sw_suite == "lemmas")
            report = sweep_lemmas(sw_max_points, sw_workers);
        else if (sw_suite == "quotient")
            report = sweep_quotient(sw_max_points, sw_workers);
        else if (sw_suite == "game")
            report = sweep_game(sw_max_points, sw_workers);
        else if (sw_suite == "witness")
            report = sweep_witness(sw_max_points, sw_workers);
        else
            throw input_error("unknown suite '" + sw_suite + "'");
        emit(save_report(report), sw_out);
        return report.findings.empty() ? exit_ok : exit_violation;
    }

    return exit_usage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const resource_limit_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return exit_budget;
    } catch (const parse_error& e) {
        std::cerr << "parse: " << e.what() << "\n";
        return exit_usage;
    } catch (const game_error& e) {
        std::cerr << "game: " << e.what() << "\n";
        return exit_usage;
    } catch (const input_error& e) {
        std::cerr << "input: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant falsified: " << e.what() << "\n";
        return exit_violation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
