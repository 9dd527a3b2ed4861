#pragma once

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "seqsr/seqsr.hpp"

namespace seqsr::cli {

inline constexpr const char* kSchema = "seqsr.report/1";

enum ExitCode : int { kOk = 0, kUsage = 1, kInputError = 2, kResourceError = 3 };

struct Options {
    int r = 2;
    std::string field = "q";
    std::string format = "text";
    int cap_n = 30;
    int cap_facets = 12;
    long seed = 0;

    std::string graph;
    std::string complex;
    std::string sub;

    Limits limits() const {
        Limits l;
        l.max_vertices = cap_n;
        l.max_facets = cap_facets;
        return l;
    }
    FieldSpec field_spec() const { return FieldSpec::parse(field); }
    bool json() const { return format == "json"; }
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A "bipartite-random:a:b:p" spec without its own seed takes --seed.
inline std::string with_default_seed(const std::string& spec, long seed) {
    if (spec.rfind("bipartite-random:", 0) == 0 && detail::split(spec, ':').size() == 4)
        return spec + ":" + std::to_string(seed);
    return spec;
}

inline Graph load_graph(const std::string& spec, long seed = 0) {
    if (is_generator_spec(spec)) return generate_graph(with_default_seed(spec, seed));
    try {
        return parse_graph(read_file(spec));
    } catch (const ParseError& e) {
        throw InputError(spec + ": " + e.what());
    }
}

inline SimplicialComplex load_complex(const std::string& path) {
    try {
        return parse_complex(read_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

/// --graph gives the independence complex; --complex reads a complex file.
inline SimplicialComplex load_target(const Options& o) {
    if (!o.graph.empty() && !o.complex.empty()) throw InputError("give either --graph or --complex, not both");
    if (!o.graph.empty()) return independence_complex(load_graph(o.graph, o.seed), o.limits());
    if (!o.complex.empty()) return load_complex(o.complex);
    throw InputError("no input: give --graph <spec|file> or --complex <file>");
}

inline nlohmann::ordered_json envelope(const std::string& command, const Options& o) {
    nlohmann::ordered_json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["field"] = o.field_spec().name();
    j["r"] = o.r;
    j["caps"] = {{"n", o.cap_n}, {"facets", o.cap_facets}};
    return j;
}

inline Face parse_face_arg(const std::string& s) {
    if (s == "-" || s.empty()) return Face{};
    std::istringstream in(s);
    std::string tok;
    Face f;
    while (std::getline(in, tok, tok.find(',') != std::string::npos ? ',' : ' ')) {
        for (const std::string& t : detail::split(tok, ',')) {
            if (t.empty()) continue;
            f.insert(static_cast<int>(detail::parse_long(t, s)));
        }
    }
    return f;
}

// ---------------------------------------------------------------- commands

inline CheckReport run_property(const std::string& prop, const Options& o, const std::optional<Graph>& graph,
                                const SimplicialComplex& c) {
    const FieldSpec k = o.field_spec();
    const Limits lim = o.limits();
    auto need_graph = [&]() -> const Graph& {
        if (!graph) throw InputError("property '" + prop + "' needs --graph");
        return *graph;
    };
    if (prop == "s") return is_Sr(c, o.r, k, lim);
    if (prop == "seq-s") return is_seq_Sr_skeleton(c, o.r, k, lim);
    if (prop == "seq-s-relative") return is_seq_Sr_relative(c, o.r, k, lim);
    if (prop == "seq-s2-local") return is_seq_S2_local(c, k);
    if (prop == "cm") return is_CM(c, k, lim);
    if (prop == "seq-cm") return is_seq_CM(c, k, lim);
    if (prop == "vd") return is_vertex_decomposable(c, lim);
    if (prop == "shellable") return is_shellable(c, lim);
    if (prop == "relative-s") {
        if (o.sub.empty()) throw InputError("property 'relative-s' needs --sub <file>");
        return is_relative_Sr(RelativePair(c, load_complex(o.sub)), o.r, k, lim);
    }
    if (prop == "cw-linear-dual")
        return is_cw_linear_first_r(sr_ideal(alexander_dual(c, lim), lim), o.r, k, lim);
    if (prop == "linear-dual") return is_linear_first_r(sr_ideal(alexander_dual(c, lim), lim), o.r, k, lim);
    if (prop == "condition-iv") return condition_iv(need_graph(), lim);
    if (prop == "chordless-conditions") return chordless_conditions(need_graph(), lim);
    if (prop == "whiskered-even-cycles") return whiskered_even_cycles(need_graph(), lim);
    throw InputError("unknown property '" + prop + "'");
}

inline const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names = {
        "s",  "seq-s",     "seq-s-relative", "seq-s2-local",   "cm",           "seq-cm",
        "vd", "shellable", "relative-s",     "cw-linear-dual", "linear-dual", "condition-iv",
        "chordless-conditions", "whiskered-even-cycles"};
    return names;
}

inline void emit_report(std::ostream& out, const Options& o, const std::string& command, const CheckReport& rep) {
    if (o.json()) {
        auto j = envelope(command, o);
        j["report"] = to_json(rep);
        out << j.dump(2) << "\n";
    } else {
        out << to_text(rep) << "\n";
    }
}

inline void cmd_check(std::ostream& out, const Options& o, const std::string& prop) {
    std::optional<Graph> graph;
    if (!o.graph.empty()) graph = load_graph(o.graph, o.seed);
    const SimplicialComplex c = graph ? independence_complex(*graph, o.limits()) : load_target(o);
    emit_report(out, o, "check", run_property(prop, o, graph, c));
}

inline void cmd_homology(std::ostream& out, const Options& o) {
    const SimplicialComplex c = load_target(o);
    const FieldSpec k = o.field_spec();
    const HomologyVector h = o.sub.empty() ? reduced_homology(c, k, o.limits())
                                           : relative_homology(RelativePair(c, load_complex(o.sub)), k, o.limits());
    if (o.json()) {
        auto j = envelope("homology", o);
        j["relative"] = !o.sub.empty();
        nlohmann::ordered_json dims = nlohmann::ordered_json::array();
        for (int i = -1; i <= h.top(); ++i) dims.push_back({{"degree", i}, {"dim", h[i]}});
        j["homology"] = dims;
        out << j.dump(2) << "\n";
    } else {
        out << h.to_string() << "\n";
    }
}

inline void cmd_betti(std::ostream& out, const Options& o, bool ideal, bool ideal_of_dual, bool koszul) {
    const SimplicialComplex c = load_target(o);
    const FieldSpec k = o.field_spec();
    Limits lim = o.limits();
    BettiTable t;
    std::string what = "face-ring";
    if (ideal || ideal_of_dual) {
        const SquarefreeIdeal I = ideal_of_dual ? sr_ideal(alexander_dual(c, lim), lim) : sr_ideal(c, lim);
        what = ideal_of_dual ? "ideal-of-dual" : "ideal";
        t = koszul ? koszul_betti(I, k, lim) : betti_ideal(I, k, lim);
    } else {
        t = koszul ? koszul_betti(c, k, lim) : betti_face_ring(c, k, lim);
    }
    if (o.json()) {
        auto j = envelope("betti", o);
        j["target"] = what;
        j["method"] = koszul ? "koszul" : "hochster";
        j["table"] = t.to_json();
        out << j.dump(2) << "\n";
    } else {
        out << "# betti " << what << " (" << (koszul ? "koszul" : "hochster") << ", " << k.name() << ")\n";
        out << t.to_macaulay();
    }
}

inline void emit_complex(std::ostream& out, const Options& o, const std::string& command, const SimplicialComplex& c,
                         const std::function<void(nlohmann::ordered_json&)>& extra = {}) {
    if (o.json()) {
        auto j = envelope(command, o);
        j["n"] = c.n();
        j["void"] = c.is_void();
        j["dim"] = c.is_void() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.dim());
        nlohmann::ordered_json facets = nlohmann::ordered_json::array();
        for (Face f : c.facets()) facets.push_back(f.labels());
        j["facets"] = facets;
        if (extra) extra(j);
        out << j.dump(2) << "\n";
    } else {
        out << format_complex(c);
    }
}

inline void cmd_classify_cycles(std::ostream& out, const Options& o, int min_n, int max_n) {
    if (min_n < 3 || max_n < min_n) throw InputError("classify-cycles: need 3 <= --min <= --max");
    const FieldSpec k = o.field_spec();
    const Limits lim = o.limits();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    auto cell = [](const std::string& v, std::size_t w) { return v + std::string(w > v.size() ? w - v.size() : 1, ' '); };
    const std::string seq_head = "seq-S_" + std::to_string(o.r), s_head = "S_" + std::to_string(o.r);
    if (!o.json()) out << cell("n", 4) << cell("odd", 7) << cell(seq_head, 9) << cell(s_head, 7) << "seq-CM\n";
    for (int n = min_n; n <= max_n; ++n) {
        const SimplicialComplex c = independence_complex(cycle_graph(n), lim);
        const bool seq = is_seq_Sr_skeleton(c, o.r, k, lim).verdict;
        const bool sr = is_Sr(c, o.r, k, lim).verdict;
        const bool scm = is_seq_CM(c, k, lim).verdict;
        if (o.json()) {
            rows.push_back({{"n", n}, {"odd", n % 2 == 1}, {"seq_s", seq}, {"s", sr}, {"seq_cm", scm}});
        } else {
            auto b = [](bool v) { return std::string(v ? "true" : "false"); };
            out << cell(std::to_string(n), 4) << cell(b(n % 2 == 1), 7) << cell(b(seq), 9) << cell(b(sr), 7) << b(scm)
                << "\n";
        }
    }
    if (o.json()) {
        auto j = envelope("classify-cycles", o);
        j["rows"] = rows;
        out << j.dump(2) << "\n";
    }
}

inline void cmd_battery(std::ostream& out, const Options& o) {
    if (o.graph.empty()) throw InputError("bipartite-battery needs --graph");
    const BipartiteBattery b = bipartite_battery(load_graph(o.graph, o.seed), o.field_spec(), o.limits());
    if (o.json()) {
        auto j = envelope("bipartite-battery", o);
        j["vertex_decomposable"] = to_json(b.vertex_decomposable);
        j["shellable"] = to_json(b.shellable);
        j["seq_cm"] = to_json(b.seq_cm);
        j["condition_iv"] = to_json(b.condition_iv);
        j["seq_s2"] = to_json(b.seq_s2);
        j["agree"] = b.agree();
        out << j.dump(2) << "\n";
    } else {
        for (const CheckReport* r : b.all()) out << to_text(*r) << "\n";
        out << "agree=" << (b.agree() ? "true" : "false") << "\n";
    }
}

inline SimplicialComplex load_side(const std::string& graph, const std::string& complex, const Options& o,
                                   const char* side) {
    if (graph.empty() == complex.empty())
        throw InputError(std::string("join-experiment: give exactly one of --") + side + "-graph / --" + side +
                         "-complex");
    return graph.empty() ? load_complex(complex) : independence_complex(load_graph(graph, o.seed), o.limits());
}

inline void cmd_join(std::ostream& out, const Options& o, const std::string& ag, const std::string& ac,
                     const std::string& bg, const std::string& bc) {
    const SimplicialComplex a = load_side(ag, ac, o, "a");
    const SimplicialComplex b = load_side(bg, bc, o, "b");
    const SimplicialComplex j = join(a, b);
    require_cap("max_vertices", o.cap_n, j.n());
    const FieldSpec k = o.field_spec();
    const CheckReport ra = is_seq_Sr_skeleton(a, o.r, k, o.limits());
    const CheckReport rb = is_seq_Sr_skeleton(b, o.r, k, o.limits());
    const CheckReport rj = is_seq_Sr_skeleton(j, o.r, k, o.limits());
    if (o.json()) {
        auto e = envelope("join-experiment", o);
        e["a"] = to_json(ra);
        e["b"] = to_json(rb);
        e["join"] = to_json(rj);
        e["join_n"] = j.n();
        e["join_facets"] = j.num_facets();
        out << e.dump(2) << "\n";
    } else {
        out << "A:    " << to_text(ra) << "\n";
        out << "B:    " << to_text(rb) << "\n";
        out << "A*B:  " << to_text(rj) << "\n";
    }
}

// ---------------------------------------------------------------- entry

/// Runs one command line. Exit status: 0 computed (any verdict), 1 usage, 2 input, 3 resource cap.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Serre's condition S_r and sequential S_r for simplicial complexes and graphs", "seqsr"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--r", o.r, "Serre index r")->capture_default_str();
    app.add_option("--field", o.field, "coefficient field: q or a prime")->capture_default_str();
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--cap-n", o.cap_n, "vertex cap for exponential enumerations")->capture_default_str();
    app.add_option("--cap-facets", o.cap_facets, "facet cap for the shellability search")->capture_default_str();
    app.add_option("--seed", o.seed, "seed for bipartite-random:a:b:p specs that omit one")->capture_default_str();
    auto add_target = [&](CLI::App* sub) {
        sub->add_option("--graph", o.graph, "graph file or generator (cycle:n, path:n, whisker:cycle:n:1,2, ...)");
        sub->add_option("--complex", o.complex, "complex file");
    };

    std::string prop;
    std::optional<int> positional_r;
    auto* check = app.add_subcommand("check", "decide a property");
    check->add_option("property", prop, "property")->required()->check(CLI::IsMember(property_names()));
    check->add_option("r", positional_r, "Serre index (overrides --r)");
    add_target(check);
    check->add_option("--sub", o.sub, "subcomplex file for relative-s");

    bool ideal = false, ideal_of_dual = false, koszul = false;
    auto* betti = app.add_subcommand("betti", "graded Betti numbers");
    add_target(betti);
    betti->add_flag("--ideal", ideal, "Betti numbers of I_Δ");
    betti->add_flag("--ideal-of-dual", ideal_of_dual, "Betti numbers of the Stanley-Reisner ideal of the dual");
    betti->add_flag("--koszul", koszul, "use the Koszul-homology oracle");

    auto* dual = app.add_subcommand("dual", "Alexander dual");
    add_target(dual);

    int skel_i = 0;
    bool pure = false, facet_gen = false;
    auto* skel = app.add_subcommand("skeleton", "i-skeleton");
    skel->add_option("i", skel_i, "dimension")->required();
    skel->add_flag("--pure", pure, "pure i-skeleton");
    skel->add_flag("--facet-generated", facet_gen, "subcomplex generated by the i-dimensional facets");
    add_target(skel);

    std::string face_arg;
    auto* lk = app.add_subcommand("link", "link of a face");
    lk->add_option("--face", face_arg, "face as '1 3' or '1,3'; '-' for the empty face")->required();
    add_target(lk);

    auto* hom = app.add_subcommand("homology", "reduced (or relative) homology");
    add_target(hom);
    hom->add_option("--sub", o.sub, "subcomplex file for relative homology");

    auto* norm = app.add_subcommand("normalize", "restrict to the support and relabel 1..m");
    add_target(norm);

    int min_n = 3, max_n = 11;
    auto* cyc = app.add_subcommand("classify-cycles", "S_r table for the cycles C_n");
    cyc->add_option("--min", min_n)->capture_default_str();
    cyc->add_option("--max", max_n)->capture_default_str();

    auto* battery = app.add_subcommand("bipartite-battery", "five equivalent checks on a bipartite graph");
    battery->add_option("--graph", o.graph, "graph file or generator")->required();

    std::string ag, ac, bg, bc;
    auto* joinx = app.add_subcommand("join-experiment", "sequential S_r of A, B and their join");
    joinx->add_option("--a-graph", ag);
    joinx->add_option("--a-complex", ac);
    joinx->add_option("--b-graph", bg);
    joinx->add_option("--b-complex", bc);

    std::string gen_spec;
    bool gen_complex = false;
    auto* gen = app.add_subcommand("generate", "print a generated graph");
    gen->add_option("spec", gen_spec, "generator spec")->required();
    gen->add_flag("--complex", gen_complex, "print its independence complex instead");

    std::vector<const char*> argv{"seqsr"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (positional_r) o.r = *positional_r;
        (void)o.field_spec();
        if (*check) {
            cmd_check(out, o, prop);
        } else if (*betti) {
            cmd_betti(out, o, ideal, ideal_of_dual, koszul);
        } else if (*dual) {
            emit_complex(out, o, "dual", alexander_dual(load_target(o), o.limits()));
        } else if (*skel) {
            const SimplicialComplex c = load_target(o);
            if (pure && facet_gen) throw InputError("skeleton: --pure and --facet-generated are exclusive");
            emit_complex(out, o, "skeleton",
                         pure ? pure_skeleton(c, skel_i) : facet_gen ? facet_generated(c, skel_i) : skeleton(c, skel_i));
        } else if (*lk) {
            emit_complex(out, o, "link", link(load_target(o), parse_face_arg(face_arg)));
        } else if (*hom) {
            cmd_homology(out, o);
        } else if (*norm) {
            const Normalized nc = normalize_support(load_target(o));
            if (!o.json()) {
                out << "# labels";
                for (int v : nc.labels) out << ' ' << v;
                out << "\n";
            }
            emit_complex(out, o, "normalize", nc.complex, [&](auto& j) { j["labels"] = nc.labels; });
        } else if (*cyc) {
            cmd_classify_cycles(out, o, min_n, max_n);
        } else if (*battery) {
            cmd_battery(out, o);
        } else if (*joinx) {
            cmd_join(out, o, ag, ac, bg, bc);
        } else if (*gen) {
            const Graph g = generate_graph(with_default_seed(gen_spec, o.seed));
            out << (gen_complex ? format_complex(independence_complex(g, o.limits())) : format_graph(g));
        }
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return kResourceError;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}

}  // namespace seqsr::cli
