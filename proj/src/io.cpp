#include "stellar/io.hpp"

#include <fstream>
#include <sstream>

#include "stellar/errors.hpp"

namespace stellar {
namespace {

std::vector<int> ints_of(const std::string& s, const std::string& ctx) {
    std::istringstream is(s);
    std::vector<int> out;
    int v;
    while (is >> v) out.push_back(v);
    std::string rest;
    is.clear();
    if (is >> rest) throw input_error(ctx + ": unexpected token '" + rest + "'");
    return out;
}

struct RawLines {
    std::optional<int> dim;
    std::vector<std::pair<std::size_t, Simplex>> simplexes; // with line numbers
    std::vector<std::pair<std::size_t, Simplex>> msimplexes;
    std::vector<std::pair<int, int>> vequiv;
    std::vector<std::pair<std::size_t, std::pair<Simplex, Simplex>>> gequiv;
    std::optional<int> apex;
};

RawLines scan(const std::string& text) {
    RawLines raw;
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
        const std::string ctx = "line " + std::to_string(lineno);
        std::string rest;
        std::getline(ls, rest);
        if (word == "dim") {
            auto vs = ints_of(rest, ctx);
            require(vs.size() == 1, ctx + ": dim takes one integer");
            raw.dim = vs[0];
        } else if (word == "simplex" || word == "msimplex") {
            auto vs = ints_of(rest, ctx);
            require(!vs.empty(), ctx + ": empty simplex");
            try {
                auto& dst = word == "simplex" ? raw.simplexes : raw.msimplexes;
                dst.emplace_back(lineno, Simplex(std::move(vs)));
            } catch (const input_error& e) {
                throw input_error(ctx + ": " + e.what());
            }
        } else if (word == "vequiv") {
            auto vs = ints_of(rest, ctx);
            require(vs.size() == 2, ctx + ": vequiv takes two labels");
            raw.vequiv.emplace_back(vs[0], vs[1]);
        } else if (word == "gequiv") {
            auto bar = rest.find('|');
            require(bar != std::string::npos, ctx + ": gequiv needs 'v.. | w..'");
            auto lhs = ints_of(rest.substr(0, bar), ctx);
            auto rhs = ints_of(rest.substr(bar + 1), ctx);
            require(!lhs.empty() && !rhs.empty(), ctx + ": empty gequiv side");
            require(lhs.size() == rhs.size(),
                    ctx + ": gequiv sides have arity " + std::to_string(lhs.size()) + " and " +
                        std::to_string(rhs.size()));
            try {
                raw.gequiv.emplace_back(
                    lineno, std::make_pair(Simplex(std::move(lhs)), Simplex(std::move(rhs))));
            } catch (const input_error& e) {
                throw input_error(ctx + ": " + e.what());
            }
        } else if (word == "apex") {
            auto vs = ints_of(rest, ctx);
            require(vs.size() == 1, ctx + ": apex takes one label");
            raw.apex = vs[0];
        } else {
            throw input_error(ctx + ": unknown keyword '" + word + "'");
        }
    }
    return raw;
}

Complex gens_to_complex(const std::vector<std::pair<std::size_t, Simplex>>& lines,
                        std::vector<std::string>& warnings) {
    std::vector<Simplex> gens;
    gens.reserve(lines.size());
    for (const auto& [ln, s] : lines) gens.push_back(s);
    Complex k = Complex::z2(gens);
    if (k.size() != gens.size())
        warnings.push_back("duplicate generators cancelled (Z2 sum)");
    return k;
}

void check_gequiv(const Complex& k,
                  const std::vector<std::pair<std::size_t, std::pair<Simplex, Simplex>>>& pairs) {
    for (const auto& [ln, pr] : pairs) {
        const std::string ctx = "line " + std::to_string(ln);
        require(k.has_generator(pr.first),
                ctx + ": " + pr.first.str() + " is not a generator");
        require(k.has_generator(pr.second),
                ctx + ": " + pr.second.str() + " is not a generator");
        require(pr.first != pr.second, ctx + ": a facet cannot pair with itself");
    }
}

} // namespace

ParsedComplex parse_complex_text(const std::string& text) {
    RawLines raw = scan(text);
    require(raw.msimplexes.empty() && !raw.apex.has_value(),
            "structure keywords in a complex file; use the structure parser");
    ParsedComplex out;
    require(!raw.simplexes.empty(), "no simplex lines");
    out.complex = gens_to_complex(raw.simplexes, out.warnings);
    require(!out.complex.empty(), "all generators cancelled");
    out.declared_dim = raw.dim;
    if (raw.dim) {
        require(out.complex.uniform() && out.complex.dim() == *raw.dim,
                "declared dim " + std::to_string(*raw.dim) + " does not match the generators");
    }
    check_gequiv(out.complex, raw.gequiv);
    for (auto [a, b] : raw.vequiv) out.equiv.vertices.merge(a, b);
    for (const auto& [ln, pr] : raw.gequiv) out.equiv.add_pair(pr.first, pr.second);
    out.has_equiv = !raw.vequiv.empty() || !raw.gequiv.empty();
    return out;
}

std::string emit_complex_text(const Complex& k, const RegularEquivalence* e) {
    std::ostringstream os;
    if (!k.empty() && k.uniform()) os << "dim " << k.dim() << '\n';
    for (const auto& g : k.generators()) {
        os << "simplex";
        for (int v : g.vertices()) os << ' ' << v;
        os << '\n';
    }
    if (e != nullptr) {
        for (auto [a, b] : e->vertices.merges(k.vertices())) os << "vequiv " << a << ' ' << b << '\n';
        for (const auto& [g, p] : e->facet_pairs) {
            os << "gequiv";
            for (int v : g.vertices()) os << ' ' << v;
            os << " |";
            for (int v : p.vertices()) os << ' ' << v;
            os << '\n';
        }
    }
    return os.str();
}

std::string emit_structure_text(const StellarStructure& st) {
    std::ostringstream os;
    os << "# stellar structure\n";
    os << "apex " << st.apex << '\n';
    if (st.original) {
        for (const auto& g : st.original->generators()) {
            os << "msimplex";
            for (int v : g.vertices()) os << ' ' << v;
            os << '\n';
        }
    }
    os << emit_complex_text(st.sphere, &st.equiv);
    return os.str();
}

StellarStructure parse_structure_text(const std::string& text) {
    RawLines raw = scan(text);
    require(raw.apex.has_value(), "structure file needs an apex line");
    require(!raw.simplexes.empty(), "structure file needs sphere simplex lines");
    std::vector<std::string> warnings;
    Complex sphere = gens_to_complex(raw.simplexes, warnings);
    check_gequiv(sphere, raw.gequiv);
    RegularEquivalence e;
    for (auto [a, b] : raw.vequiv) e.vertices.merge(a, b);
    for (const auto& [ln, pr] : raw.gequiv) e.add_pair(pr.first, pr.second);
    std::optional<Complex> original;
    if (!raw.msimplexes.empty()) original = gens_to_complex(raw.msimplexes, warnings);
    StellarStructure st = make_structure(sphere, std::move(e), std::move(original));
    require(!sphere.has_simplex(Simplex{*raw.apex}), "apex is a vertex of the sphere");
    st.apex = *raw.apex;
    return st;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), "cannot write " + path);
    out << content;
}

} // namespace stellar
