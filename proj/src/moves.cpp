#include "stellar/moves.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace stellar {

Move Move::subdivide(Simplex a_face, int new_vertex) {
    Move m;
    m.kind = Kind::Subdivide;
    m.face = std::move(a_face);
    m.vertex = new_vertex;
    return m;
}

Move Move::weld(Simplex a_face, int old_vertex) {
    Move m;
    m.kind = Kind::Weld;
    m.face = std::move(a_face);
    m.vertex = old_vertex;
    return m;
}

Move Move::relabeling(std::map<int, int> map) {
    Move m;
    m.kind = Kind::Relabel;
    m.mapping = std::move(map);
    return m;
}

Move Move::inverse() const {
    switch (kind) {
    case Kind::Subdivide: return weld(face, vertex);
    case Kind::Weld: return subdivide(face, vertex);
    case Kind::Relabel: {
        std::map<int, int> inv;
        for (auto [from, to] : mapping) inv[to] = from;
        return relabeling(std::move(inv));
    }
    }
    throw internal_error("bad move kind");
}

std::string Move::str() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::Subdivide:
    case Kind::Weld: {
        os << (kind == Kind::Subdivide ? "SUB " : "WELD ") << vertex << " :";
        for (int v : face.vertices()) os << ' ' << v;
        break;
    }
    case Kind::Relabel: {
        os << "RELABEL ";
        bool first = true;
        for (auto [from, to] : mapping) {
            if (!first) os << ',';
            os << from << "->" << to;
            first = false;
        }
        break;
    }
    }
    return os.str();
}

Complex subdivide(const Complex& k, const Simplex& a_face, int new_vertex) {
    require(!a_face.empty(), "cannot subdivide at the empty simplex");
    require(k.has_simplex(a_face), "simplex " + a_face.str() + " is not in the complex");
    require(!k.has_simplex(Simplex{new_vertex}),
            "label " + std::to_string(new_vertex) + " is already a vertex");
    Complex rest = star_rest(a_face, k).rest;
    Complex lk = link(a_face, k);
    return cone(new_vertex, join(boundary(a_face), lk)) + rest;
}

namespace {

// Try to factor lk = ∂A ⋆ B; returns false when no such B exists.
bool factor_link(const Complex& lk, const Simplex& a_face, Complex& b_out) {
    if (lk.empty()) return false;
    if (a_face.dim() == 0) {
        b_out = lk; // ∂(vertex) = {empty}, which is the join identity
        return true;
    }
    const Simplex f0 = a_face.without(a_face.vertices().front());
    std::vector<Simplex> bs;
    for (const auto& g : lk.generators()) {
        if (!g.contains_all(f0)) continue;
        if (g.intersect(a_face) != f0) continue;
        Simplex b = g;
        for (int v : f0.vertices()) b = b.without(v);
        bs.push_back(std::move(b));
    }
    if (bs.empty()) return false;
    Complex b = Complex::from_set(std::move(bs));
    Complex rebuilt;
    try {
        rebuilt = join(boundary(a_face), b);
    } catch (const input_error&) {
        return false;
    }
    if (rebuilt != lk) return false;
    b_out = std::move(b);
    return true;
}

} // namespace

Complex weld(const Complex& k, const Simplex& a_face, int old_vertex) {
    require(!a_face.empty(), "cannot weld at the empty simplex");
    require(k.has_simplex(Simplex{old_vertex}),
            "label " + std::to_string(old_vertex) + " is not a vertex");
    require(!k.has_simplex(a_face), "simplex " + a_face.str() + " already in the complex");
    Complex lk = link(Simplex{old_vertex}, k);
    Complex b;
    require(factor_link(lk, a_face, b),
            "link of " + std::to_string(old_vertex) + " does not factor as d" + a_face.str() +
                " * B");
    Complex rest = star_rest(Simplex{old_vertex}, k).rest;
    return join(Complex::from_set({a_face}), b) + rest;
}

Complex apply_move(const Complex& k, const Move& m) {
    switch (m.kind) {
    case Move::Kind::Subdivide: return subdivide(k, m.face, m.vertex);
    case Move::Kind::Weld: return weld(k, m.face, m.vertex);
    case Move::Kind::Relabel: return relabel(k, m.mapping);
    }
    throw internal_error("bad move kind");
}

Complex apply_script(const Complex& k, const MoveScript& script) {
    Complex cur = k;
    for (std::size_t i = 0; i < script.size(); ++i) {
        try {
            cur = apply_move(cur, script[i]);
        } catch (const input_error& e) {
            throw move_error(i, e.what());
        }
    }
    return cur;
}

namespace {

std::vector<int> parse_ints(const std::string& s, const std::string& ctx) {
    std::istringstream is(s);
    std::vector<int> out;
    int v;
    while (is >> v) out.push_back(v);
    std::string rest;
    is.clear();
    is >> rest;
    require(rest.empty(), ctx + ": unexpected token '" + rest + "'");
    return out;
}

} // namespace

MoveScript parse_script(const std::string& text) {
    MoveScript script;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        const std::string ctx = "script line " + std::to_string(lineno);
        if (word == "SUB" || word == "WELD") {
            int a;
            std::string colon;
            require(static_cast<bool>(ls >> a >> colon) && colon == ":",
                    ctx + ": expected '" + word + " <vertex> : v1 v2 ...'");
            std::string rest;
            std::getline(ls, rest);
            auto vs = parse_ints(rest, ctx);
            require(!vs.empty(), ctx + ": empty face");
            Simplex face{std::vector<int>(vs)};
            script.push_back(word == "SUB" ? Move::subdivide(face, a) : Move::weld(face, a));
        } else if (word == "RELABEL") {
            std::string rest;
            std::getline(ls, rest);
            std::map<int, int> map;
            std::istringstream ps(rest);
            std::string item;
            while (std::getline(ps, item, ',')) {
                auto arrow = item.find("->");
                require(arrow != std::string::npos, ctx + ": expected 'x->y' pairs");
                int from = 0, to = 0;
                try {
                    from = std::stoi(item.substr(0, arrow));
                    to = std::stoi(item.substr(arrow + 2));
                } catch (const std::exception&) {
                    throw input_error(ctx + ": bad label in '" + item + "'");
                }
                require(!map.contains(from), ctx + ": duplicate source label");
                map[from] = to;
            }
            require(!map.empty(), ctx + ": empty relabeling");
            script.push_back(Move::relabeling(std::move(map)));
        } else {
            throw input_error(ctx + ": unknown move '" + word + "'");
        }
    }
    return script;
}

std::string emit_script(const MoveScript& script) {
    std::ostringstream os;
    for (const auto& m : script) os << m.str() << '\n';
    return os.str();
}

std::vector<Move> legal_welds(const Complex& k) {
    std::vector<Move> out;
    for (int v : k.vertices()) {
        Complex lk = link(Simplex{v}, k);
        if (lk.empty()) continue;
        const Simplex& g0 = lk.generators().front();
        if (g0.empty()) continue;
        std::set<int> lk_verts;
        for (const auto& g : lk.generators())
            lk_verts.insert(g.vertices().begin(), g.vertices().end());
        std::set<Simplex> candidates;
        for (const auto& f : g0.all_faces(false)) {
            for (int w : lk_verts) {
                if (g0.contains(w)) continue;
                candidates.insert(f.with(w));
            }
        }
        for (const auto& a_face : candidates) {
            if (k.has_simplex(a_face)) continue;
            Complex b;
            if (factor_link(lk, a_face, b)) out.push_back(Move::weld(a_face, v));
        }
    }
    std::sort(out.begin(), out.end(), [](const Move& x, const Move& y) {
        return std::tie(x.vertex, x.face) < std::tie(y.vertex, y.face);
    });
    return out;
}

std::vector<Move> legal_subdivisions(const Complex& k, int min_dim) {
    std::vector<Move> out;
    const int fresh = k.fresh_label();
    for (const auto& f : k.face_closure())
        if (f.dim() >= min_dim) out.push_back(Move::subdivide(f, fresh));
    return out;
}

} // namespace stellar
