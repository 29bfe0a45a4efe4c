#include "monres/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace monres {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

/// One factor: a declared variable name, optionally followed by "^k" or
/// bare digits "k".  Longest declared name wins, so x1, x2, ... work.
std::pair<int, Exp> parse_factor(const std::string& tok,
                                 const std::vector<std::string>& vars) {
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t v = 0; v < vars.size(); ++v) {
        const std::string& name = vars[v];
        if (tok.starts_with(name) && name.size() > best_len) {
            best = static_cast<int>(v);
            best_len = name.size();
        }
    }
    if (best < 0) throw std::invalid_argument("unknown variable in token '" + tok + "'");
    std::string rest = tok.substr(best_len);
    if (rest.empty()) return {best, 1};
    if (rest.front() == '^') rest.erase(0, 1);
    if (rest.empty() || !std::ranges::all_of(rest, [](char c) { return std::isdigit(c); }))
        throw std::invalid_argument("bad exponent in token '" + tok + "'");
    return {best, static_cast<Exp>(std::stoll(rest))};
}

Monomial parse_monomial(const std::string& line, const std::vector<std::string>& vars) {
    std::string spaced = line;
    std::ranges::replace(spaced, '*', ' ');
    const std::vector<std::string> tokens = split_ws(spaced);
    std::vector<Exp> exps(vars.size(), 0);
    for (const std::string& tok : tokens) {
        if (tok == "1") continue;
        const auto [var, e] = parse_factor(tok, vars);
        exps[static_cast<std::size_t>(var)] = checked_add(exps[static_cast<std::size_t>(var)], e);
    }
    return Monomial(std::move(exps));
}

LoadedIdeal finish(std::vector<std::string> vars, const std::vector<Monomial>& monomials) {
    std::vector<Monomial> dropped;
    MonomialIdeal ideal = MonomialIdeal::minimalize(vars, monomials, &dropped);
    LoadedIdeal out{std::move(ideal), {}};
    for (const Monomial& m : dropped)
        out.dropped.push_back("dropped non-minimal generator " +
                              to_string(m, out.ideal.var_names()));
    return out;
}

}  // namespace

LoadedIdeal parse_ideal_text(std::istream& in) {
    std::string line;
    std::vector<std::string> vars;
    std::vector<Monomial> monomials;
    bool have_vars = false;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (split_ws(line).empty()) continue;
        if (!have_vars) {
            const std::string prefix = "vars:";
            const auto pos = line.find(prefix);
            if (pos == std::string::npos)
                throw std::invalid_argument("ideal text must start with a 'vars:' header");
            vars = split_ws(line.substr(pos + prefix.size()));
            if (vars.empty()) throw std::invalid_argument("empty variable list");
            have_vars = true;
            continue;
        }
        monomials.push_back(parse_monomial(line, vars));
    }
    if (!have_vars) throw std::invalid_argument("ideal text must start with a 'vars:' header");
    return finish(std::move(vars), monomials);
}

LoadedIdeal parse_ideal_json(const json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("generators"))
        throw std::invalid_argument("ideal JSON needs 'vars' and 'generators'");
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<Monomial> monomials;
    for (const auto& row : j.at("generators")) {
        std::vector<Exp> exps = row.get<std::vector<Exp>>();
        if (exps.size() != vars.size())
            throw std::invalid_argument("generator row length differs from variable count");
        monomials.emplace_back(std::move(exps));
    }
    return finish(std::move(vars), monomials);
}

LoadedIdeal parse_ideal(const std::string& content) {
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{')
        return parse_ideal_json(json::parse(content));
    std::istringstream in(content);
    return parse_ideal_text(in);
}

LoadedIdeal load_ideal_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_ideal(buffer.str());
}

SimplicialComplex parse_triangulation_json(const json& j) {
    const json& list = j.is_object() && j.contains("facets") ? j.at("facets") : j;
    if (!list.is_array()) throw std::invalid_argument("triangulation must be a list of facets");
    std::vector<Face> facets;
    int max_vertex = 0;
    for (const auto& row : list) {
        Face f = row.get<Face>();
        for (int& v : f) {
            if (v < 1) throw std::invalid_argument("facet vertices are 1-based");
            --v;
            max_vertex = std::max(max_vertex, v + 1);
        }
        std::ranges::sort(f);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(max_vertex, facets);
}

SimplicialComplex load_triangulation_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    return parse_triangulation_json(json::parse(in));
}

Face face_to_one_based(const Face& f) {
    Face out = f;
    for (int& v : out) ++v;
    return out;
}

std::string face_to_string(const Face& f) {
    std::string out = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f[i] + 1);
    }
    return out + "}";
}

ordered_json ideal_to_json(const MonomialIdeal& ideal) {
    ordered_json j;
    j["vars"] = ideal.var_names();
    ordered_json gens = ordered_json::array();
    for (const Monomial& g : ideal.generators()) gens.push_back(g.exponents());
    j["generators"] = std::move(gens);
    return j;
}

ordered_json scarf_to_json(const ScarfComplex& scarf) {
    ordered_json j;
    j["generic"] = scarf.generic;
    ordered_json faces = ordered_json::array();
    for (const Face& f : scarf.complex().faces()) {
        const Monomial label = scarf.base.label(f);
        ordered_json entry;
        entry["face"] = face_to_one_based(f);
        entry["label"] = label.exponents();
        entry["monomial"] = to_string(label, scarf.ideal().var_names());
        faces.push_back(std::move(entry));
    }
    j["faces"] = std::move(faces);
    return j;
}

ordered_json complex_to_json(const FreeChainComplex& complex) {
    ordered_json j;
    j["ranks"] = complex.ranks();
    ordered_json levels = ordered_json::array();
    for (int d = 0; d <= complex.length(); ++d) {
        ordered_json level;
        ordered_json faces = ordered_json::array();
        ordered_json degrees = ordered_json::array();
        for (const Face& f : complex.level(d).faces) faces.push_back(face_to_one_based(f));
        for (const Monomial& m : complex.level(d).degrees) degrees.push_back(m.exponents());
        level["faces"] = std::move(faces);
        level["degrees"] = std::move(degrees);
        levels.push_back(std::move(level));
    }
    j["levels"] = std::move(levels);
    ordered_json matrices = ordered_json::array();
    for (int d = 1; d <= complex.length(); ++d) {
        ordered_json entries = ordered_json::array();
        for (const Triplet& t : complex.diff(d)) {
            ordered_json e;
            e["row"] = t.row;
            e["col"] = t.col;
            e["coeff"] = t.sign;
            e["exponents"] = t.mono.exponents();
            entries.push_back(std::move(e));
        }
        ordered_json m;
        m["level"] = d;
        m["entries"] = std::move(entries);
        matrices.push_back(std::move(m));
    }
    j["matrices"] = std::move(matrices);
    return j;
}

ordered_json resolution_to_json(const Resolution& res) {
    ordered_json j;
    j["betti"] = betti_numbers(res);
    j["minimal"] = res.minimal;
    j["length"] = res.complex.length();
    j["source"] = to_string(res.source);
    ordered_json inner = complex_to_json(res.complex);
    j["levels"] = std::move(inner["levels"]);
    j["matrices"] = std::move(inner["matrices"]);
    return j;
}

ordered_json hilbert_to_json(const HilbertNumerator& numerator) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : numerator.terms) {
        ordered_json e;
        e["sign"] = t.sign;
        e["exponents"] = t.mono.exponents();
        terms.push_back(std::move(e));
    }
    ordered_json j;
    j["terms"] = std::move(terms);
    return j;
}

ordered_json decomposition_to_json(const Decomposition& d,
                                   const std::vector<std::string>& var_names) {
    ordered_json comps = ordered_json::array();
    for (const IrreducibleComponent& c : d.components) {
        ordered_json entry = ordered_json::object();
        for (const auto& [s, p] : c.entries)
            entry[var_names[static_cast<std::size_t>(s)]] = p;
        comps.push_back(std::move(entry));
    }
    ordered_json j;
    j["D"] = d.D;
    j["components"] = std::move(comps);
    ordered_json facets = ordered_json::array();
    for (const Face& f : d.facet_of_origin) facets.push_back(face_to_one_based(f));
    j["facets"] = std::move(facets);
    if (d.possibly_redundant) j["possibly_redundant"] = true;
    return j;
}

ordered_json labelings_to_json(const std::vector<Labeling>& labelings,
                               const std::vector<std::string>& var_names) {
    ordered_json out = ordered_json::array();
    for (const Labeling& l : labelings) {
        ordered_json facets = ordered_json::array();
        for (std::size_t k = 0; k < l.facets.size(); ++k) {
            ordered_json entry;
            entry["facet"] = face_to_one_based(l.facets[k]);
            ordered_json labels = ordered_json::object();
            for (std::size_t j = 0; j < l.facets[k].size(); ++j)
                labels[std::to_string(l.facets[k][j] + 1)] =
                    var_names[static_cast<std::size_t>(l.labels[k][j])];
            entry["labels"] = std::move(labels);
            facets.push_back(std::move(entry));
        }
        out.push_back(std::move(facets));
    }
    return out;
}

ordered_json bounds_to_json(const UpperBoundReport& report) {
    ordered_json j;
    j["n"] = report.n;
    j["r"] = report.r;
    j["deformed"] = report.deformed;
    j["cyclic_bounds"] = report.cyclic_bounds;
    j["face_counts"] = report.face_counts;
    ordered_json checks = ordered_json::array();
    for (const BoundCheck& c : report.checks) {
        ordered_json e;
        e["i"] = c.i;
        e["faces"] = c.faces;
        e["bound"] = c.bound;
        e["ok"] = c.ok;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["all_ok"] = report.all_ok;
    return j;
}

std::string hilbert_to_string(const HilbertNumerator& numerator,
                              const std::vector<std::string>& var_names) {
    std::string out;
    for (const auto& t : numerator.terms) {
        const std::string mono = to_string(t.mono, var_names);
        if (out.empty()) {
            if (t.sign < 0) out += "-";
            if (std::abs(t.sign) != 1) out += std::to_string(std::abs(t.sign)) + "*";
        } else {
            out += t.sign < 0 ? " - " : " + ";
            if (std::abs(t.sign) != 1) out += std::to_string(std::abs(t.sign)) + "*";
        }
        out += mono;
    }
    return out.empty() ? "0" : out;
}

std::string decomposition_to_string(const Decomposition& d,
                                    const std::vector<std::string>& var_names) {
    std::string out;
    for (const IrreducibleComponent& c : d.components) {
        if (!out.empty()) out += " ∩ ";
        out += "⟨";
        for (std::size_t i = 0; i < c.entries.size(); ++i) {
            if (i) out += ", ";
            const auto& [s, p] = c.entries[i];
            out += var_names[static_cast<std::size_t>(s)];
            if (p > 1) out += "^" + std::to_string(p);
        }
        out += "⟩";
    }
    return out.empty() ? "⟨⟩" : out;
}

std::string complex_to_string(const FreeChainComplex& complex,
                              const std::vector<std::string>& var_names) {
    std::ostringstream out;
    std::vector<long> ranks = complex.ranks();
    out << "ranks:";
    for (long r : ranks) out << ' ' << r;
    out << '\n';
    for (int d = 1; d <= complex.length(); ++d) {
        const ChainLevel& src = complex.level(d);
        const ChainLevel& dst = complex.level(d - 1);
        std::vector<std::vector<std::string>> cell(
            static_cast<std::size_t>(dst.rank()),
            std::vector<std::string>(static_cast<std::size_t>(src.rank()), "0"));
        for (const Triplet& t : complex.diff(d)) {
            std::string s = t.sign < 0 ? "-" : "";
            s += to_string(t.mono, var_names);
            cell[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col)] = std::move(s);
        }
        out << "d" << d << " : ";
        for (int c = 0; c < src.rank(); ++c)
            out << (c ? " " : "") << face_to_string(src.faces[static_cast<std::size_t>(c)]);
        out << '\n';
        for (int r = 0; r < dst.rank(); ++r) {
            out << "  " << face_to_string(dst.faces[static_cast<std::size_t>(r)]) << " :";
            for (int c = 0; c < src.rank(); ++c)
                out << ' ' << cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace monres
