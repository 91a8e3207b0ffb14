#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "stellar/coxeter.hpp"
#include "stellar/io.hpp"
#include "stellar/moves.hpp"
#include "stellar/prism.hpp"
#include "stellar/recognition.hpp"
#include "stellar/search.hpp"
#include "stellar/structure.hpp"

using json = nlohmann::ordered_json;
using namespace stellar;

namespace {

json simplex_json(const Simplex& s) {
    json arr = json::array();
    for (int v : s.vertices()) arr.push_back(v);
    return arr;
}

json complex_json(const Complex& k) {
    json arr = json::array();
    for (const auto& g : k.generators()) arr.push_back(simplex_json(g));
    return arr;
}

json counts_json(const QuotientCounts& qc) {
    json out;
    out["h"] = qc.h;
    out["s"] = qc.s;
    if (!qc.q.empty()) out["q"] = qc.q;
    out["quotient_euler"] = qc.chi_quotient;
    return out;
}

void emit(const json& report) { std::cout << report.dump(2) << '\n'; }

ParsedComplex load_complex(const std::string& path) {
    ParsedComplex pc = parse_complex_text(read_file(path));
    for (const auto& w : pc.warnings) std::cerr << "warning: " << w << '\n';
    return pc;
}

bool looks_like_structure(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line.compare(start, 4, "apex") == 0) return true;
    }
    return false;
}

StellarStructure load_structure(const std::string& path) {
    std::string text = read_file(path);
    if (looks_like_structure(text)) return parse_structure_text(text);
    ParsedComplex pc = parse_complex_text(text);
    require(pc.has_equiv, path + ": no structure data (needs an apex line or vequiv/gequiv)");
    return make_structure(pc.complex, pc.equiv);
}

int cmd_check(const std::string& path) {
    ParsedComplex pc = load_complex(path);
    json out;
    out["file"] = path;
    out["generators"] = pc.complex.size();
    out["uniform"] = pc.complex.uniform();
    if (pc.complex.uniform()) out["dim"] = pc.complex.dim();
    out["connected"] = connected_components(pc.complex).size() == 1;
    if (pc.complex.uniform()) {
        out["closed"] = is_closed(pc.complex);
        ManifoldReport mr = is_stellar_manifold(pc.complex);
        out["manifold"] = to_string(mr.verdict);
        json links = json::array();
        for (const auto& l : mr.links) {
            links.push_back({{"vertex", l.vertex},
                             {"verdict", to_string(l.ok)},
                             {"ball", to_string(l.ball)},
                             {"sphere", to_string(l.sphere)}});
        }
        out["links"] = links;
    }
    if (pc.has_equiv) {
        auto bad = validate_regular(pc.complex, pc.equiv);
        out["equivalence"] = {{"present", true}, {"valid", bad.empty()}, {"violations", bad}};
    } else {
        out["equivalence"] = {{"present", false}};
    }
    emit(out);
    return 0;
}

int cmd_euler(const std::string& path) {
    ParsedComplex pc = load_complex(path);
    json out;
    out["file"] = path;
    out["euler"] = euler(pc.complex);
    out["face_vector"] = pc.complex.face_vector();
    emit(out);
    return 0;
}

int cmd_structure(const std::string& path, const std::string& out_path) {
    ParsedComplex pc = load_complex(path);
    if (pc.has_equiv)
        std::cerr << "warning: equivalence data ignored; building a fresh structure\n";
    StellarStructure st = build_structure(pc.complex);
    json out;
    out["file"] = path;
    out["dim"] = pc.complex.dim();
    out["generators"] = pc.complex.size();
    out["closed"] = st.closed;
    out["apex"] = st.apex;
    out["sphere_facets"] = st.sphere.size();
    out["sphere"] = to_string(st.sphere_verdict);
    out["pairs"] = st.equiv.facet_pairs.size();
    json classes = json::array();
    for (const auto& cls : st.equiv.vertices.classes(st.sphere.vertices()))
        if (cls.size() > 1) classes.push_back(cls);
    out["vertex_classes"] = classes;
    out["counts"] = counts_json(quotient_counts(st));
    if (st.closed) {
        EulerRelation rel = verify_euler_relation(pc.complex, st);
        out["euler_relation"] = {{"manifold", rel.chi_manifold},
                                 {"quotient", rel.chi_quotient},
                                 {"expected_quotient", rel.expected_quotient},
                                 {"structure", rel.chi_structure},
                                 {"ok", rel.ok}};
        ensure(rel.ok, "euler relation failed on a built structure");
    }
    if (!out_path.empty()) {
        write_file(out_path, emit_structure_text(st));
        out["output"] = out_path;
    }
    emit(out);
    return 0;
}

int cmd_coxeter(const std::string& path, const std::string& dot_path) {
    StellarStructure st = load_structure(path);
    {
        auto bad = validate_regular(st.sphere, st.equiv);
        if (!bad.empty()) throw input_error("invalid equivalence: " + bad.front());
    }
    require(st.closed,
            path + ": the pairing is not perfect, permutation analysis needs a closed structure");
    CoxeterContext cx = coxeter_context(st);
    CoxeterMatrix mx = coxeter_matrix(cx);

    json out;
    out["file"] = path;
    out["facets"] = st.sphere.size();
    out["closed"] = st.closed;
    out["sphere"] = to_string(st.sphere_verdict);

    json gens = json::array();
    for (std::size_t i = 0; i < mx.labels.size(); ++i) {
        json g;
        g["id"] = mx.labels[i];
        if (i > 0) {
            g["size"] = mx.class_sizes[i];
            g["least"] = simplex_json(cx.classes[i - 1].front());
            g["parity"] = perm_parity(cx.p_alpha[i - 1]) == Parity::Even ? "even" : "odd";
            g["flat"] = flat_at(cx, static_cast<int>(i) - 1);
        } else {
            g["parity"] = perm_parity(cx.p0) == Parity::Even ? "even" : "odd";
        }
        gens.push_back(g);
    }
    out["generators"] = gens;
    out["matrix"] = mx.m;
    json degen = json::array();
    for (auto [i, j] : mx.degenerate) degen.push_back({mx.labels[i], mx.labels[j]});
    out["degenerate_pairs"] = degen;

    FlatReport fr = is_flat(cx);
    out["flat"] = fr.flat;
    if (!fr.flat) out["flat_witness"] = mx.labels[*fr.witness + 1];

    json singular = json::array();
    for (const auto& sc : singular_classes(cx)) {
        singular.push_back({{"id", mx.labels[sc.cls + 1]},
                            {"size", sc.size},
                            {"order_on_support", sc.order_on_support},
                            {"order", sc.order_global}});
    }
    out["singular"] = singular;

    AlternatingReport ar = alternating_check(cx);
    json alt;
    alt["applicable"] = ar.applicable;
    if (ar.applicable) {
        alt["collapsible_facet"] = ar.collapsible_facet;
        alt["all_classes_even"] = ar.all_alpha_even;
        alt["consistent"] = ar.consistent;
        if (!ar.witness.empty()) alt["witness"] = ar.witness;
    }
    out["alternating"] = alt;

    const long cap = 100000;
    ClosureResult cr = group_closure(cx, cap);
    json closure;
    closure["cap"] = cap;
    closure["overflow"] = cr.overflow;
    if (!cr.overflow) {
        closure["order"] = cr.order;
        auto confirms = closure_confirms_flat(cx, cap);
        if (confirms.has_value()) {
            closure["normal_pairing_subgroup"] = *confirms;
            ensure(*confirms == fr.flat, "flatness disagrees with the closure oracle");
        }
    }
    out["group_closure"] = closure;

    json comps = json::array();
    for (const auto& comp : diagram_components(mx)) {
        json one = json::array();
        for (int i : comp) one.push_back(mx.labels[i]);
        comps.push_back(one);
    }
    out["diagram_components"] = comps;
    out["counts"] = counts_json(quotient_counts(st));

    if (st.sphere.dim() == 2) {
        SurfaceClass sc = classify_quotient_surface(st.sphere, st.equiv);
        out["surface"] = {{"classification", to_string(sc.type)},
                          {"euler", sc.chi},
                          {"orientable", sc.orientable},
                          {"boundary_components", sc.boundary_components},
                          {"genuine", sc.genuine_surface}};
    }

    if (!dot_path.empty()) {
        write_file(dot_path, diagram_dot(mx));
        out["dot"] = dot_path;
    }
    emit(out);
    return 0;
}

int cmd_moves(const std::string& path, const std::string& script_path) {
    ParsedComplex pc = load_complex(path);
    MoveScript script = parse_script(read_file(script_path));
    Complex result = apply_script(pc.complex, script);
    json out;
    out["file"] = path;
    out["script"] = script_path;
    out["moves"] = script.size();
    json res;
    res["generators"] = complex_json(result);
    res["euler"] = euler(result);
    if (result.uniform()) res["closed"] = is_closed(result);
    out["result"] = res;
    emit(out);
    return 0;
}

int cmd_equiv(const std::string& a, const std::string& b, long max_nodes, int max_vertices) {
    ParsedComplex pa = load_complex(a);
    ParsedComplex pb = load_complex(b);
    SearchResult r = bounded_equivalence_search(pa.complex, pb.complex, {max_nodes, max_vertices});
    json out;
    out["files"] = {a, b};
    out["verdict"] = r.equivalent ? "equivalent" : "unknown";
    out["nodes"] = r.nodes_expanded;
    if (r.equivalent) {
        json moves = json::array();
        for (const auto& m : r.script) moves.push_back(m.str());
        out["moves"] = moves;
    }
    emit(out);
    return 0;
}

int cmd_prism(const std::string& path) {
    ParsedComplex pc = load_complex(path);
    Complex p = prism(pc.complex);
    json out;
    out["file"] = path;
    json copies = json::array();
    for (auto [v, j] : prism_copy_labels(pc.complex)) copies.push_back({v, j});
    out["copies"] = copies;
    out["generators"] = complex_json(p);
    out["euler_before"] = euler(pc.complex);
    out["euler_after"] = euler(p);
    emit(out);
    return 0;
}

int cmd_collapse(const std::string& path) {
    ParsedComplex pc = load_complex(path);
    json out;
    out["file"] = path;
    if (pc.has_equiv) {
        auto bad = validate_regular(pc.complex, pc.equiv);
        if (!bad.empty()) throw input_error("invalid equivalence: " + bad.front());
        QuotientCollapseResult r = collapse_quotient(pc.complex, pc.equiv);
        out["mode"] = "quotient";
        out["collapsible"] = r.collapsible;
        json steps = json::array();
        for (const auto& [f, m] : r.steps) steps.push_back({f, m});
        out["steps"] = steps;
        out["residue_cells"] = r.residue_cells;
    } else {
        CollapseResult r = free_face_collapse(pc.complex);
        out["mode"] = "complex";
        out["collapsible"] = r.collapsible;
        json steps = json::array();
        for (const auto& s : r.steps)
            steps.push_back(
                {{"free", simplex_json(s.free_face)}, {"with", simplex_json(s.removed_with)}});
        out["steps"] = steps;
        out["residue"] = complex_json(r.residue);
    }
    emit(out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stellar-manifold calculus: complexes, moves, cone structures, facet groups"};
    app.require_subcommand(1);

    std::string file, file2, out_path, dot_path, script_path;
    long max_nodes = 10000;
    int max_vertices = 0;

    auto* check = app.add_subcommand("check", "validate a complex and test the manifold property");
    check->add_option("file", file, "complex file")->required();

    auto* eul = app.add_subcommand("euler", "euler characteristic and face vector");
    eul->add_option("file", file, "complex file")->required();

    auto* structure = app.add_subcommand("structure", "build the cone structure of a manifold");
    structure->add_option("file", file, "complex file")->required();
    structure->add_option("-o,--output", out_path, "write the structure file here");

    auto* coxeter = app.add_subcommand("coxeter", "facet permutation analysis of a structure");
    coxeter->add_option("file", file, "structure file or complex file with equivalence data")
        ->required();
    coxeter->add_option("--dot", dot_path, "write the diagram in DOT form");

    auto* moves = app.add_subcommand("moves", "apply a move script to a complex");
    moves->add_option("file", file, "complex file")->required();
    moves->add_option("script", script_path, "move script")->required();

    auto* equiv = app.add_subcommand("equiv", "search for a stellar-move script between complexes");
    equiv->add_option("file1", file, "first complex")->required();
    equiv->add_option("file2", file2, "second complex")->required();
    equiv->add_option("--max-nodes", max_nodes, "search node budget");
    equiv->add_option("--max-vertices", max_vertices, "vertex cap during search");

    auto* prism_cmd = app.add_subcommand("prism", "build the prism over a complex");
    prism_cmd->add_option("file", file, "complex file")->required();

    auto* collapse = app.add_subcommand("collapse", "greedy free-face collapse");
    collapse->add_option("file", file, "complex file, quotient when equivalence data is present")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(file);
        if (eul->parsed()) return cmd_euler(file);
        if (structure->parsed()) return cmd_structure(file, out_path);
        if (coxeter->parsed()) return cmd_coxeter(file, dot_path);
        if (moves->parsed()) return cmd_moves(file, script_path);
        if (equiv->parsed()) return cmd_equiv(file, file2, max_nodes, max_vertices);
        if (prism_cmd->parsed()) return cmd_prism(file);
        if (collapse->parsed()) return cmd_collapse(file);
    } catch (const internal_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return 2;
    } catch (const input_error& e) {
        json err;
        err["error"] = e.what();
        emit(err);
        return 1;
    }
    return 0;
}
