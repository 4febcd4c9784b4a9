// Command-line front end: presentation configs in, one subcommand per library
// operation family, DOT/JSON-lines out. Deterministic output; sampling is
// controlled by --seed; GPKIT_THREADS caps suite parallelism.

#include <CLI11.hpp>

#include <cstdlib>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include "gpkit/gpkit.hpp"

using namespace gpkit;

namespace {

struct CheckResult {
    std::string check;
    std::string instance;
    bool pass = true;
    std::string value;
    std::string expected;
};

std::string json_line(const CheckResult& r) {
    auto esc = [](const std::string& s) {
        std::string out;
        for (char c : s)
            if (c == '"' || c == '\\')
                out += std::string("\\") + c;
            else
                out += c;
        return out;
    };
    std::ostringstream os;
    os << "{\"check\":\"" << esc(r.check) << "\",\"instance\":\"" << esc(r.instance)
       << "\",\"status\":\"" << (r.pass ? "pass" : "fail") << "\",\"value\":\"" << esc(r.value)
       << "\",\"expected\":\"" << esc(r.expected) << "\"}";
    return os.str();
}

Word sample_word(const Presentation& p, std::mt19937& rng, int len) {
    std::vector<Syllable> raw;
    for (int i = 0; i < len; ++i) {
        VertexId v = VertexId(rng() % p.graph.size());
        auto elts = p.group(v).nontrivial_elements();
        raw.push_back({v, elts[rng() % elts.size()]});
    }
    return reduce(p, raw);
}

std::vector<CheckResult> check_reduce(const Presentation& p, unsigned radius, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<CheckResult> out;
    for (int t = 0; t < 50; ++t) {
        Word x = sample_word(p, rng, int(radius) + 2);
        bool ok = reduce(p, x) == x && compose(p, x, invert(p, x)).empty();
        out.push_back({"reduce-idempotent-inverse", print_word(p, x), ok, ok ? "ok" : "broken",
                       "reduce(x)=x and x.x^-1=1"});
        if (!ok) break;
    }
    return out;
}

std::vector<CheckResult> check_distance(const Presentation& p, unsigned radius, unsigned seed) {
    std::mt19937 rng(seed + 1);
    std::vector<CheckResult> out;
    for (int t = 0; t < 40; ++t) {
        Word x = sample_word(p, rng, int(radius));
        Word y = sample_word(p, rng, int(radius));
        auto seps = separating_hyperplanes(p, x, y);
        bool distinct = true;
        for (std::size_t i = 0; i < seps.size(); ++i)
            for (std::size_t j = i + 1; j < seps.size(); ++j)
                if (seps[i] == seps[j]) distinct = false;
        GradedDistance g = graded_distance(p, x, y);
        unsigned sum_d = 0, sum_delta = 0;
        for (VertexId u = 0; u < p.graph.size(); ++u) {
            sum_d += g.d_u[u];
            sum_delta += g.delta_u[u];
        }
        bool ok = seps.size() == g.d && distinct && sum_d == g.d && sum_delta == g.delta;
        out.push_back({"distance-separators", print_word(p, x) + " | " + print_word(p, y), ok,
                       std::to_string(seps.size()), std::to_string(g.d)});
        if (!ok) break;
    }
    return out;
}

std::vector<CheckResult> check_projection(const Presentation& p, unsigned radius, unsigned seed) {
    std::mt19937 rng(seed + 2);
    std::vector<CheckResult> out;
    for (int t = 0; t < 25; ++t) {
        Word x = sample_word(p, rng, int(radius));
        VertexSet lambda = 0;
        for (int k = 0; k < 2; ++k) lambda |= set_single(rng() % p.graph.size());
        Coset c = make_coset(p, sample_word(p, rng, 2), lambda);
        Word g = project(p, x, c);
        bool ok = coset_contains(p, g, c);
        // gate identity on nearby coset points
        for (VertexId u = 0; u < p.graph.size() && ok; ++u) {
            if (!set_contains(lambda, u)) continue;
            for (Elt e : p.group(u).nontrivial_elements(1)) {
                Word m = compose(p, g, Word{Syllable{u, e}});
                if (distance(p, x, m) != distance(p, x, g) + distance(p, g, m)) ok = false;
            }
        }
        out.push_back({"projection-gate", print_word(p, x), ok, ok ? "gate" : "not-a-gate",
                       "d(x,m)=d(x,g)+d(g,m)"});
        if (!ok) break;
    }
    return out;
}

std::vector<CheckResult> check_median(const Presentation& p, unsigned radius, unsigned seed) {
    std::mt19937 rng(seed + 3);
    std::vector<CheckResult> out;
    for (int t = 0; t < 15; ++t) {
        Word x = sample_word(p, rng, int(radius) / 2 + 1);
        Word y = sample_word(p, rng, int(radius) / 2 + 1);
        Word z = sample_word(p, rng, int(radius) / 2 + 1);
        bool ok = true;
        std::string value = "identities hold";
        try {
            MedianTriangle m = median_triangle(p, x, y, z);
            ok = p.graph.is_complete(m.prism.lambda) && coset_contains(p, m.x1, m.prism);
        } catch (const std::exception& e) {
            ok = false;
            value = e.what();
        }
        out.push_back({"median-triangle",
                       print_word(p, x) + " | " + print_word(p, y) + " | " + print_word(p, z), ok,
                       value, "unique median triangle in a prism"});
        if (!ok) break;
    }
    return out;
}

std::vector<CheckResult> check_walls(const Presentation& p, unsigned radius, unsigned) {
    std::vector<CheckResult> out;
    HyperplaneWindow win = build_window(p, {}, std::min(radius, 2u));
    unsigned transverse_pairs = 0;
    bool ok = true;
    for (std::size_t i = 0; i < win.walls.size() && ok; ++i)
        for (std::size_t j = i + 1; j < win.walls.size(); ++j)
            if (win.adjacent[i][j]) {
                ++transverse_pairs;
                if (!p.graph.adjacent(win.walls[i].label, win.walls[j].label)) ok = false;
            }
    out.push_back({"transverse-implies-adjacent",
                   "window radius " + std::to_string(std::min(radius, 2u)), ok,
                   std::to_string(transverse_pairs) + " transverse pairs", "labels adjacent"});
    return out;
}

std::vector<CheckResult> check_coneoff(const Presentation& p, unsigned radius, unsigned seed) {
    std::mt19937 rng(seed + 4);
    std::vector<CheckResult> out;
    for (int t = 0; t < 15; ++t) {
        Word x = sample_word(p, rng, int(radius));
        Word y = sample_word(p, rng, int(radius));
        BlockChainCertificate cert = block_chain_certificate(p, x, y);
        auto dy = coneoff_distance(p, x, y, distance(p, x, y) + 2);
        bool ok = dy && *dy >= lower_bound(cert) && *dy <= distance(p, x, y);
        if (x == y) ok = dy && *dy == 0;
        out.push_back({"coneoff-block-bound", print_word(p, x) + " | " + print_word(p, y), ok,
                       dy ? std::to_string(*dy) : "unknown",
                       ">= " + std::to_string(lower_bound(cert))});
        if (!ok) break;
    }
    return out;
}

std::vector<CheckResult> check_trees(const Presentation& p, unsigned radius, unsigned seed) {
    std::mt19937 rng(seed + 5);
    std::vector<CheckResult> out;
    for (int t = 0; t < 25; ++t) {
        Word x = sample_word(p, rng, int(radius));
        Word y = sample_word(p, rng, int(radius));
        GradedDistance g = graded_distance(p, x, y);
        unsigned st = 0, sts = 0;
        for (VertexId u = 0; u < p.graph.size(); ++u) {
            TreeDistances td = tree_distance(p, u, x, y);
            st += td.d_T;
            sts += td.d_TS;
        }
        bool ok = st == 2 * g.d && sts == 2 * g.d + g.delta;
        out.push_back({"tree-distance-sums", print_word(p, x) + " | " + print_word(p, y), ok,
                       std::to_string(st) + "," + std::to_string(sts),
                       std::to_string(2 * g.d) + "," + std::to_string(2 * g.d + g.delta)});
        if (!ok) break;
    }
    return out;
}

int run_suite(const PresentationConfig& cfg, unsigned radius, unsigned seed) {
    const Presentation& p = cfg.presentation;
    using Battery = std::vector<CheckResult> (*)(const Presentation&, unsigned, unsigned);
    std::vector<std::pair<std::string, Battery>> batteries = {
        {"reduce", &check_reduce},         {"distance", &check_distance},
        {"projection", &check_projection}, {"median", &check_median},
        {"walls", &check_walls},           {"coneoff", &check_coneoff},
        {"trees", &check_trees},
    };
    unsigned threads = 1;
    if (const char* env = std::getenv("GPKIT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) threads = unsigned(v);
    }
    std::vector<std::vector<CheckResult>> results(batteries.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < batteries.size(); ++i)
            results[i] = batteries[i].second(p, radius, seed);
    } else {
        // output order stays fixed by battery id regardless of scheduling
        std::vector<std::future<std::vector<CheckResult>>> futs;
        for (std::size_t i = 0; i < batteries.size(); ++i)
            futs.push_back(
                std::async(std::launch::async, batteries[i].second, std::cref(p), radius, seed));
        for (std::size_t i = 0; i < batteries.size(); ++i) results[i] = futs[i].get();
    }
    bool all_ok = true;
    for (const auto& group : results)
        for (const CheckResult& r : group) {
            std::cout << json_line(r) << "\n";
            all_ok = all_ok && r.pass;
        }
    return all_ok ? 0 : 1;
}

std::string answer_with_conditions(const Verdict& v) {
    std::ostringstream os;
    os << to_string(v.answer) << "\n";
    for (const Condition& c : v.conditions)
        os << "  [" << (c.holds ? "+" : "-") << "] " << c.name
           << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    if (!v.missing.empty()) os << "  missing metadata: " << v.missing << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in graph products of groups"};
    app.require_subcommand(1);

    std::string config_path, x_text, y_text = "", z_text, target = "aut", dot_what = "graph";
    unsigned radius = 3, seed = 1, depth = 6, root_bound = 8;
    long k_min = -2, k_max = 2;
    bool small = false, kernel_finite = true;

    auto add_config = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "presentation config file")->required();
    };

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "canonical graphically reduced form");
    add_config(reduce_cmd);
    reduce_cmd->add_option("--x", x_text, "word")->required();

    CLI::App* dist_cmd = app.add_subcommand("dist", "graded distances d, d_u, delta");
    add_config(dist_cmd);
    dist_cmd->add_option("--x", x_text)->required();
    dist_cmd->add_option("--y", y_text);

    CLI::App* hyp_cmd = app.add_subcommand("hyperplanes", "walls separating two vertices");
    add_config(hyp_cmd);
    hyp_cmd->add_option("--x", x_text)->required();
    hyp_cmd->add_option("--y", y_text);

    CLI::App* med_cmd = app.add_subcommand("median", "median triangle of three vertices");
    add_config(med_cmd);
    med_cmd->add_option("--x", x_text)->required();
    med_cmd->add_option("--y", y_text)->required();
    med_cmd->add_option("--z", z_text)->required();

    CLI::App* cross_cmd = app.add_subcommand("crossing", "crossing-graph window summary");
    add_config(cross_cmd);
    cross_cmd->add_option("--radius", radius);
    cross_cmd->add_flag("--small", small, "restrict to prec-maximal labels");

    CLI::App* axis_cmd = app.add_subcommand("axis", "contracting axis chain verdicts");
    add_config(axis_cmd);
    axis_cmd->add_option("--x", x_text)->required();
    axis_cmd->add_option("--kmin", k_min);
    axis_cmd->add_option("--kmax", k_max);

    CLI::App* cone_cmd = app.add_subcommand("coneoff", "cone-off distance and block bound");
    add_config(cone_cmd);
    cone_cmd->add_option("--x", x_text)->required();
    cone_cmd->add_option("--y", y_text);
    cone_cmd->add_option("--depth", depth);

    CLI::App* trees_cmd = app.add_subcommand("trees", "tree and tree-of-spaces distances");
    add_config(trees_cmd);
    trees_cmd->add_option("--x", x_text)->required();
    trees_cmd->add_option("--y", y_text);

    CLI::App* root_cmd = app.add_subcommand("root", "bounded primitive root search");
    add_config(root_cmd);
    root_cmd->add_option("--x", x_text)->required();
    root_cmd->add_option("--bound", root_bound);

    CLI::App* verdict_cmd = app.add_subcommand("verdict", "structural verdicts");
    add_config(verdict_cmd);
    verdict_cmd->add_option("--target", target,
                            "group | aut | raag | racg | structure | vastness | extension");
    verdict_cmd->add_option("--kernel-finite", kernel_finite, "assertion for target=extension");

    CLI::App* genset_cmd = app.add_subcommand("genset", "pairwise non-commuting generating set");
    add_config(genset_cmd);

    CLI::App* dot_cmd = app.add_subcommand("export-dot", "DOT export of the graph or a window");
    add_config(dot_cmd);
    dot_cmd->add_option("--what", dot_what, "graph | opposite | window");
    dot_cmd->add_option("--radius", radius);

    CLI::App* suite_cmd = app.add_subcommand("suite", "invariant batteries as JSON lines");
    add_config(suite_cmd);
    suite_cmd->add_option("--radius", radius);
    suite_cmd->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        PresentationConfig cfg = parse_config(config_path);
        const Presentation& p = cfg.presentation;

        if (reduce_cmd->parsed()) {
            std::cout << print_word(p, parse_word(p, x_text)) << "\n";
        } else if (dist_cmd->parsed()) {
            GradedDistance g = graded_distance(p, parse_word(p, x_text), parse_word(p, y_text));
            std::cout << "d=" << g.d;
            for (VertexId u = 0; u < p.graph.size(); ++u)
                if (g.d_u[u] > 0) std::cout << " d_" << p.graph.name(u) << "=" << g.d_u[u];
            std::cout << " delta=" << g.delta << "\n";
        } else if (hyp_cmd->parsed()) {
            auto seps = separating_hyperplanes(p, parse_word(p, x_text), parse_word(p, y_text));
            for (const Hyperplane& j : seps)
                std::cout << p.graph.name(j.label) << " @ " << print_word(p, j.carrier.rep) << "\n";
        } else if (med_cmd->parsed()) {
            MedianTriangle m = median_triangle(p, parse_word(p, x_text), parse_word(p, y_text),
                                               parse_word(p, z_text));
            std::cout << "corners: " << print_word(p, m.x1) << " | " << print_word(p, m.y1)
                      << " | " << print_word(p, m.z1) << "\n";
            std::cout << "size: " << m.size << "\n";
            std::cout << "prism: " << print_word(p, m.prism.rep) << " over "
                      << vertex_set_names(p.graph, m.prism.lambda) << "\n";
        } else if (cross_cmd->parsed()) {
            HyperplaneWindow win = build_window(p, {}, radius, small);
            std::cout << "walls: " << win.walls.size() << "\n";
            unsigned edges = 0;
            for (std::size_t i = 0; i < win.walls.size(); ++i)
                for (std::size_t j = i + 1; j < win.walls.size(); ++j)
                    if (win.adjacent[i][j]) ++edges;
            std::cout << "transversal edges: " << edges << "\n";
        } else if (axis_cmd->parsed()) {
            AxisChain ax = contracting_axis(p, parse_word(p, x_text), k_min, k_max);
            std::cout << "D=" << ax.opp_diam << " chain length " << ax.chain.size() << "\n";
            for (std::size_t i = 0; i < ax.chain.size(); ++i)
                for (std::size_t j = i + 1; j < ax.chain.size(); ++j)
                    std::cout << "pair k=" << ax.ks[i] << ",k=" << ax.ks[j] << ": "
                              << (ax.verdicts[i][j] ? "certified" : "refuted") << "\n";
            if (!ax.all_certified) return 1;
        } else if (cone_cmd->parsed()) {
            Word x = parse_word(p, x_text), y = parse_word(p, y_text);
            auto dy = coneoff_distance(p, x, y, depth);
            BlockChainCertificate cert = block_chain_certificate(p, x, y);
            std::cout << "d_Y " << (dy ? std::to_string(*dy) : "> " + std::to_string(depth))
                      << " blocks " << cert.blocks.size() << " lower-bound " << lower_bound(cert)
                      << "\n";
        } else if (trees_cmd->parsed()) {
            Word x = parse_word(p, x_text), y = parse_word(p, y_text);
            for (VertexId u = 0; u < p.graph.size(); ++u) {
                TreeDistances td = tree_distance(p, u, x, y);
                std::cout << p.graph.name(u) << ": d_T=" << td.d_T << " d_TS=" << td.d_TS << "\n";
            }
        } else if (root_cmd->parsed()) {
            auto r = primitive_root(p, parse_word(p, x_text), root_bound);
            if (r)
                std::cout << print_word(p, r->root) << " ^ " << r->exponent << "\n";
            else
                std::cout << "not-found within bound " << root_bound << "\n";
        } else if (verdict_cmd->parsed()) {
            if (target == "structure") {
                StructureReport r = structure_report(p, cfg.meta);
                std::cout << r.formula << "\n";
                for (const Condition& c : r.factor_flags)
                    std::cout << "  [" << (c.holds ? "+" : "-") << "] " << c.name << ": "
                              << c.detail << "\n";
            } else if (target == "vastness") {
                VastnessReport r = vastness_report(p, cfg.meta);
                std::cout << "sq-universal: " << to_string(r.sq_universal) << "\n"
                          << "many-quasimorphisms: " << to_string(r.many_quasimorphisms) << "\n"
                          << "not-boundedly-generated: " << to_string(r.not_boundedly_generated)
                          << "\n";
            } else if (target == "extension") {
                std::cout << answer_with_conditions(extension_verdict(p, cfg.meta, kernel_finite));
            } else {
                AcylTarget t = AcylTarget::Aut;
                if (target == "group")
                    t = AcylTarget::Group;
                else if (target == "raag")
                    t = AcylTarget::Raag;
                else if (target == "racg")
                    t = AcylTarget::Racg;
                else if (target != "aut")
                    throw std::invalid_argument("unknown target " + target);
                std::cout << answer_with_conditions(acyl_verdict(p, cfg.meta, t));
            }
        } else if (genset_cmd->parsed()) {
            for (const Word& g : build_noncommuting_genset(p))
                std::cout << print_word(p, g) << "\n";
        } else if (dot_cmd->parsed()) {
            if (dot_what == "graph")
                std::cout << dot_graph(p.graph);
            else if (dot_what == "opposite")
                std::cout << dot_graph(opposite_graph(p.graph), "opposite");
            else if (dot_what == "window")
                std::cout << dot_window(p, build_window(p, {}, radius));
            else
                throw std::invalid_argument("unknown --what " + dot_what);
        } else if (suite_cmd->parsed()) {
            return run_suite(cfg, radius, seed);
        }
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
