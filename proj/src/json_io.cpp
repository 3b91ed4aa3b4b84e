#include "friezelab/json_io.hpp"

#include "friezelab/errors.hpp"

namespace friezelab {

namespace {

Json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

BigInt big_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::runtime_error&) {
            throw MalformedInput("'" + j.get<std::string>() + "' is not an integer");
        }
    }
    return BigInt(j.get<std::int64_t>());
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json to_json(const LaurentPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({{"coeff", c.str()}, {"exps", e}});
    return out;
}

LaurentPoly poly_from_json(const Json& j, std::size_t nvars) {
    if (!j.is_array()) throw MalformedInput("a Laurent polynomial is an array of terms");
    LaurentPoly p(nvars);
    for (const auto& term : j) {
        const auto exps = field(term, "exps").get<Exponents>();
        if (exps.size() != nvars) throw InvalidInput("exponent vector has the wrong length");
        p.add_term(exps, big_from_json(field(term, "coeff")));
    }
    return p;
}

Json to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrow_list()) arrows.push_back({a.tail, a.head, a.multiplicity});
    return {{"n", q.size()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const Json& j) {
    const int n = field(j, "n").get<int>();
    if (n < 1) throw InvalidInput("a quiver needs at least one vertex");
    std::vector<Arrow> arrows;
    for (const auto& a : field(j, "arrows")) {
        if (!a.is_array() || a.size() < 2 || a.size() > 3) throw MalformedInput("an arrow is [i, j] or [i, j, m]");
        arrows.push_back({a[0].get<int>(), a[1].get<int>(), a.size() == 3 ? a[2].get<int>() : 1});
    }
    return Quiver::from_arrows(n, arrows);
}

Json to_json(const Seed& s) {
    Json vars = Json::array();
    for (const auto& v : s.vars) vars.push_back(to_json(v));
    return {{"quiver", to_json(s.quiver)}, {"vars", vars}};
}

Seed seed_from_json(const Json& j) {
    Seed s{quiver_from_json(field(j, "quiver")), {}};
    const auto n = static_cast<std::size_t>(s.quiver.size());
    for (const auto& v : field(j, "vars")) s.vars.push_back(poly_from_json(v, n));
    validate_seed(s);
    return s;
}

Json to_json(const Diagonal& d) { return {d.a, d.b}; }

Diagonal diagonal_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw MalformedInput("a diagonal is [a, b]");
    return {j[0].get<int>(), j[1].get<int>()};
}

Json to_json(const Triangulation& t) {
    Json ds = Json::array();
    for (const auto& d : t.diagonals()) ds.push_back(to_json(d));
    return {{"N", t.polygon_size()}, {"diagonals", ds}};
}

Triangulation triangulation_from_json(const Json& j) {
    std::vector<Diagonal> ds;
    for (const auto& d : field(j, "diagonals")) ds.push_back(diagonal_from_json(d));
    return {field(j, "N").get<int>(), std::move(ds)};
}

Json to_json(const Frieze& f) {
    Json domain = Json::array();
    for (const auto& [d, v] : f.domain()) domain.push_back({d.a, d.b, big_to_json(v)});
    return {{"n", f.height()}, {"domain", domain}};
}

Frieze frieze_from_json(const Json& j) {
    const int n = field(j, "n").get<int>();
    std::map<Diagonal, BigInt> values;
    for (const auto& cell : field(j, "domain")) {
        if (!cell.is_array() || cell.size() != 3) throw MalformedInput("a frieze cell is [a, b, value]");
        const Diagonal d(cell[0].get<int>(), cell[1].get<int>());
        if (!values.emplace(d, big_from_json(cell[2])).second) throw MalformedFrieze("diagonal listed twice");
    }
    return Frieze::from_diagonal_values(n, values);
}

Json to_json(const LightningBolt& b) {
    Json cells = Json::array();
    for (const auto& c : b.cells()) cells.push_back({c.a, c.b});
    return {{"n", b.height()}, {"cells", cells}};
}

LightningBolt bolt_from_json(const Json& j) {
    if (j.is_string()) return LightningBolt::parse(j.get<std::string>());
    std::vector<BoltCell> cells;
    for (const auto& c : field(j, "cells")) {
        if (!c.is_array() || c.size() != 2) throw MalformedInput("a bolt cell is [a, b]");
        cells.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    LightningBolt bolt(std::move(cells));
    if (j.contains("n") && j.at("n").get<int>() != bolt.height()) throw InvalidInput("bolt height disagrees with n");
    return bolt;
}

Json to_json(const ZQVertex& v) { return {{"i", v.i}, {"m", v.m}}; }

ZQVertex zq_vertex_from_json(const Json& j) { return {field(j, "i").get<int>(), field(j, "m").get<int>()}; }

Json to_json(const ExchangeGraph& g) {
    Json nodes = Json::array();
    for (const auto& s : g.nodes) nodes.push_back(to_json(s));
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back({e.from, e.vertex, e.to});
    Json variables = Json::array();
    for (const auto& v : g.variables) variables.push_back(to_json(v));
    return {{"complete", g.complete}, {"nodes", nodes}, {"edges", edges}, {"variables", variables}};
}

Json to_json(const FiniteTypeResult& r) {
    Json out = {{"finite", r.finite}};
    if (r.finite) out["type"] = r.type;
    out["path"] = r.path;
    out["witness"] = to_json(r.witness);
    out["classes_visited"] = r.classes_visited;
    return out;
}

Json to_json(const CanonicalForm& c) { return {{"quiver", to_json(c.quiver)}, {"permutation", c.permutation}}; }

Json symbolic_cells_to_json(const std::map<Diagonal, LaurentPoly>& cells) {
    Json out = Json::array();
    for (const auto& [d, p] : cells) out.push_back({{"a", d.a}, {"b", d.b}, {"poly", to_json(p)}});
    return out;
}

}  // namespace friezelab
