#include "cli.hpp"

#include "dendrex/error.hpp"
#include "dendrex/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace dendrex::cli {

namespace {

// Bad input that should end the run with a usage status.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError(path + ": cannot open");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

template <class F>
auto reading(const std::string& path, F&& f) {
    Json const j = read_json(path);
    try {
        return f(j);
    } catch (const ValidationError& e) {
        throw UsageError(path + ": " + e.what());
    } catch (const Json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

Tree read_tree(const std::string& path) {
    return reading(path, [](const Json& j) { return tree_from_json(j); });
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json edge_map_json(const TreeMorphism& m) { return to_json(m)["edge_map"]; }

Json elementary_list(const std::vector<ElementaryMap>& maps) {
    Json out = Json::array();
    for (const auto& m : maps) {
        out.push_back({{"kind", to_string(m.kind)},
                       {"site", m.site},
                       {"source", to_json(m.map.source())},
                       {"target", to_json(m.map.target())},
                       {"edge_map", edge_map_json(m.map)}});
    }
    return out;
}

std::vector<double> simplex_point(std::size_t n, std::mt19937_64& rng) {
    // Normalised exponentials are uniform on the simplex.
    std::exponential_distribution<double> exp(1.0);
    std::vector<double> p(n + 1);
    double sum = 0;
    for (auto& x : p) {
        x = exp(rng);
        sum += x;
    }
    for (auto& x : p) {
        x /= sum;
    }
    return p;
}

struct Options {
    std::string format = "json";
    std::size_t max_edges = 0;
    std::string file;
    std::string source;
    std::string target;
    std::string morphism;
    std::size_t bound = 0;
    std::string edge;
    bool abelian = false;
    bool no_degenerate = false;
    std::string dot_out;
    std::size_t n = 0;
    bool matrices = false;
    unsigned long long seed = default_seed;
    std::size_t points = 100;
};

int require_json(const Options& o, const std::string& command) {
    if (o.format != "json") {
        throw UsageError(command + " has no " + o.format + " output");
    }
    return pass;
}

int trees_enum(const Options& o, std::ostream& out) {
    Json list = Json::array();
    for (const auto& c : enumerate_trees(o.max_edges)) {
        list.push_back({{"code", c.code}, {"edges", c.tree.edge_count()}, {"tree", to_json(c.tree)}});
    }
    emit(out, {{"max_edges", o.max_edges}, {"count", list.size()}, {"trees", list}});
    return pass;
}

int tree_auts(const Options& o, std::ostream& out) {
    Tree const t = read_tree(o.file);
    Json list = Json::array();
    for (const auto& m : automorphisms(t)) {
        list.push_back(edge_map_json(TreeMorphism::from_edge_map(t, t, m)));
    }
    emit(out, {{"tree", to_json(t)}, {"count", list.size()}, {"automorphisms", list}});
    return pass;
}

int omega_hom(const Options& o, std::ostream& out) {
    Tree const s = read_tree(o.source);
    Tree const t = read_tree(o.target);
    Json list = Json::array();
    for (const auto& m : hom_set(s, t)) {
        list.push_back({{"edge_map", edge_map_json(m)}, {"normal_form", to_json(normal_form(m))}});
    }
    emit(out, {{"source", to_json(s)}, {"target", to_json(t)}, {"count", list.size()}, {"morphisms", list}});
    return pass;
}

int dendrex_map(const Options& o, std::ostream& out, std::ostream& err) {
    Tree const s = read_tree(o.source);
    Tree const t = read_tree(o.target);
    TreeMorphism const f = reading(o.morphism, [&](const Json& j) {
        try {
            return morphism_from_json(j, s, t);
        } catch (const PreconditionError& e) {
            throw UsageError(o.morphism + ": not an arrow: " + e.what());
        }
    });
    StarHom const h = induced_hom(f);
    HomReport const r = verify_hom(h);
    emit(out, {{"morphism", edge_map_json(f)},
               {"normal_form", to_json(normal_form(f))},
               {"hom", to_json(h)},
               {"generator_surjective", is_generator_surjective(h)},
               {"verification", to_json(r)}});
    if (!r.ok) {
        err << "verification failed: " << r.message() << '\n';
        return verification_failed;
    }
    return pass;
}

int presheaf_cmd(const std::string& which, const Options& o, std::ostream& out) {
    Tree const t = read_tree(o.file);
    try {
        if (which == "representable") {
            emit(out, to_json(*representable(t, o.bound)));
        } else if (which == "boundary") {
            emit(out, to_json(*boundary(t, o.bound).sub));
        } else {
            if (o.edge.empty()) {
                throw UsageError("horn needs --edge");
            }
            emit(out, to_json(*inner_horn(t, o.edge, o.bound).sub));
        }
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
    return pass;
}

int draw_cmd(const Options& o, std::ostream& out, std::ostream& err) {
    auto x = reading(o.file, [](const Json& j) { return presheaf_from_json(j); });
    Drawing const d = draw(x, !o.no_degenerate);
    DrawingReport const r = verify_drawing(d);
    if (!o.dot_out.empty()) {
        std::ofstream f(o.dot_out, std::ios::binary);
        if (!f) {
            throw UsageError(o.dot_out + ": cannot write");
        }
        f << to_dot(d);
    }
    if (o.format == "dot") {
        out << to_dot(d);
    } else {
        Json j = to_json(d);
        j["verification"] = to_json(r);
        emit(out, j);
    }
    if (!r.ok) {
        err << "verification failed: " << r.message << '\n';
        return verification_failed;
    }
    return pass;
}

int graph_ck(const Options& o, std::ostream& out) {
    DirectedGraph const g = reading(o.file, [](const Json& j) { return graph_from_json(j); });
    emit(out, to_json(ck_presentation(g)));
    return pass;
}

int graph_linear(const Options& o, std::ostream& out, std::ostream& err) {
    CKPresentation const p = ck_presentation(linear_graph(o.n));
    Json j = to_json(p);
    int status = pass;
    if (o.matrices) {
        MatrixAssignment const m = linear_graph_ck_matrices(o.n);
        MatrixReport const r = verify_matrix_assignment(p, m);
        j["matrices"] = to_json(m);
        j["verification"] = to_json(r);
        if (!r.ok) {
            err << "verification failed: " << r.message() << '\n';
            status = verification_failed;
        }
    }
    emit(out, j);
    return status;
}

int verify_identities(const Options& o, std::ostream& out, std::ostream& err) {
    IdentityReport const r = check_identities_up_to(o.max_edges);
    emit(out, to_json(r));
    if (!r.ok()) {
        err << "identity " << identity_label(r.failures.front().kind) << " fails: " << r.failures.front().description
            << '\n';
        return verification_failed;
    }
    return pass;
}

int verify_functoriality(const Options& o, std::ostream& out, std::ostream& err) {
    FunctorialityReport const r = check_functoriality(o.max_edges);
    Json j{{"ok", r.ok()}, {"trees", r.trees}, {"morphisms", r.morphisms}, {"pairs", r.pairs}};
    if (!r.ok()) {
        j["failure"] = r.failure;
    }
    emit(out, j);
    if (!r.ok()) {
        err << "verification failed: " << r.failure << '\n';
        return verification_failed;
    }
    return pass;
}

int verify_sm(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.n == 0) {
        throw UsageError("verify sm needs N >= 1");
    }
    std::optional<std::string> failure;
    auto note = [&](const std::string& what, const MatrixReport& r) {
        if (!r.ok && !failure) {
            failure = what + ": " + r.message();
        }
        return to_json(r);
    };
    Json j{{"n", o.n}, {"seed", o.seed}, {"points", o.points}};
    j["matrix_rep_s"] =
        note("matrix_rep_s", verify_matrix_assignment(dendrex_presentation(linear_graph_tree(o.n)), matrix_rep_s(o.n)));
    j["ck_matrices"] = note("ck_matrices", verify_matrix_assignment(ck_presentation(linear_graph(o.n)),
                                                                   linear_graph_ck_matrices(o.n)));
    StarHom const pi = pi_n(o.n);
    HomReport const hr = verify_hom(pi);
    bool const surjective = is_generator_surjective(pi);
    j["pi_n"] = {{"verification", to_json(hr)}, {"generator_surjective", surjective}};
    if ((!hr.ok || !surjective) && !failure) {
        failure = hr.ok ? "pi_n: not generator-surjective" : "pi_n: " + hr.message();
    }
    std::mt19937_64 rng(o.seed);
    std::size_t passed = 0;
    for (std::size_t k = 0; k < o.points; ++k) {
        std::vector<double> const p = simplex_point(o.n, rng);
        MatrixReport const r = verify_scalar_assignment(simplex_eval(o.n, p));
        if (r.ok) {
            ++passed;
        } else if (!failure) {
            failure = "simplex point " + std::to_string(k) + ": " + r.message();
        }
    }
    j["simplex"] = {{"tolerance", simplex_tolerance}, {"passed", passed}};
    j["ok"] = !failure;
    if (failure) {
        j["failure"] = *failure;
    }
    emit(out, j);
    if (failure) {
        err << "verification failed: " << *failure << '\n';
        return verification_failed;
    }
    return pass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app("Trees, dendrices, dendroidal sets and their C*-algebraic drawings", "dendrex");
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));

    auto* trees = app.add_subcommand("trees", "Tree enumeration")->require_subcommand(1);
    auto* trees_enum_cmd = trees->add_subcommand("enum", "One tree per shape, by edge count then code");
    trees_enum_cmd->add_option("--max-edges", o.max_edges)->required();

    auto* tree = app.add_subcommand("tree", "Generating maps of one tree")->require_subcommand(1);
    std::vector<CLI::App*> tree_cmds;
    for (const char* name : {"faces", "degeneracies", "auts"}) {
        auto* c = tree->add_subcommand(name);
        c->add_option("FILE", o.file, "Tree JSON")->required();
        tree_cmds.push_back(c);
    }

    auto* omega = app.add_subcommand("omega", "Arrows of the tree category")->require_subcommand(1);
    auto* omega_hom_cmd = omega->add_subcommand("hom", "Every arrow SRC -> TGT with its normal form");
    omega_hom_cmd->add_option("SRC", o.source)->required();
    omega_hom_cmd->add_option("TGT", o.target)->required();

    auto* dx = app.add_subcommand("dendrex", "Dendrex presentations and induced homs")->require_subcommand(1);
    auto* dx_show = dx->add_subcommand("show", "Presentation of a tree");
    dx_show->add_option("FILE", o.file)->required();
    dx_show->add_flag("--abelian", o.abelian, "Commuting generators");
    auto* dx_map = dx->add_subcommand("map", "Hom induced by an arrow SRC -> TGT");
    dx_map->add_option("SRC", o.source)->required();
    dx_map->add_option("TGT", o.target)->required();
    dx_map->add_option("--morphism", o.morphism, "Morphism JSON; only its edge_map is read")->required();

    auto* psh = app.add_subcommand("presheaf", "Finite dendroidal sets")->require_subcommand(1);
    std::vector<CLI::App*> psh_cmds;
    for (const char* name : {"representable", "boundary", "horn"}) {
        auto* c = psh->add_subcommand(name);
        c->add_option("FILE", o.file, "Tree JSON")->required();
        c->add_option("--bound", o.bound, "Largest edge count of the truncation")->required();
        if (std::string(name) == "horn") {
            c->add_option("--edge", o.edge, "Inner edge whose face is left out")->required();
        }
        psh_cmds.push_back(c);
    }

    auto* draw_sub = app.add_subcommand("draw", "Drawing of a presheaf");
    draw_sub->add_option("FILE", o.file, "Presheaf JSON")->required();
    draw_sub->add_flag("--no-degenerate", o.no_degenerate, "Leave out degenerate elements");
    draw_sub->add_option("--dot", o.dot_out, "Also write Graphviz to this file");

    auto* graph = app.add_subcommand("graph", "Graph algebras")->require_subcommand(1);
    auto* graph_ck_cmd = graph->add_subcommand("ck", "Cuntz-Krieger presentation of a graph");
    graph_ck_cmd->add_option("FILE", o.file, "Graph JSON")->required();
    auto* graph_linear_cmd = graph->add_subcommand("linear", "Cuntz-Krieger presentation of T_N");
    graph_linear_cmd->add_option("N", o.n)->required();
    graph_linear_cmd->add_flag("--matrices", o.matrices, "Include and verify the exact matrix family");

    auto* verify = app.add_subcommand("verify", "Exhaustive and seeded checks")->require_subcommand(1);
    auto* v_id = verify->add_subcommand("identities", "Face/degeneracy identities on every shape");
    v_id->add_option("--max-edges", o.max_edges)->required();
    auto* v_fun = verify->add_subcommand("functoriality", "D on every composable pair");
    v_fun->add_option("--max-edges", o.max_edges)->required();
    auto* v_sm = verify->add_subcommand("sm", "Matrix and simplex checks for T_N");
    v_sm->add_option("N", o.n)->required();
    v_sm->add_option("--seed", o.seed, "Seed of the simplex points")->capture_default_str();
    v_sm->add_option("--points", o.points, "Number of simplex points")->capture_default_str();

    std::vector<std::string> argv_store{"dendrex"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return pass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return pass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    }

    try {
        if (!draw_sub->parsed()) {
            require_json(o, app.get_subcommands().front()->get_name());
        }
        if (trees_enum_cmd->parsed()) {
            return trees_enum(o, out);
        }
        if (tree_cmds[0]->parsed()) {
            emit(out, elementary_list(elementary_faces(read_tree(o.file))));
            return pass;
        }
        if (tree_cmds[1]->parsed()) {
            emit(out, elementary_list(elementary_degeneracies(read_tree(o.file))));
            return pass;
        }
        if (tree_cmds[2]->parsed()) {
            return tree_auts(o, out);
        }
        if (omega_hom_cmd->parsed()) {
            return omega_hom(o, out);
        }
        if (dx_show->parsed()) {
            Tree const t = read_tree(o.file);
            emit(out, to_json(o.abelian ? abelian_dendrex(t) : dendrex_presentation(t)));
            return pass;
        }
        if (dx_map->parsed()) {
            return dendrex_map(o, out, err);
        }
        for (auto* c : psh_cmds) {
            if (c->parsed()) {
                return presheaf_cmd(c->get_name(), o, out);
            }
        }
        if (draw_sub->parsed()) {
            return draw_cmd(o, out, err);
        }
        if (graph_ck_cmd->parsed()) {
            return graph_ck(o, out);
        }
        if (graph_linear_cmd->parsed()) {
            return graph_linear(o, out, err);
        }
        if (v_id->parsed()) {
            return verify_identities(o, out, err);
        }
        if (v_fun->parsed()) {
            return verify_functoriality(o, out, err);
        }
        if (v_sm->parsed()) {
            return verify_sm(o, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const InternalError& e) {
        err << "self-check failed: " << e.what() << '\n';
        return verification_failed;
    }
    err << "usage error: no command\n";
    return usage_error;
}

}  // namespace dendrex::cli
