#include "friezelab/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "friezelab/json_io.hpp"
#include "friezelab/server.hpp"

namespace friezelab {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Io {
    std::istream& in;
    std::ostream& out;
    std::string format = "json";
};

using TextFn = std::function<std::string()>;

void emit(Io& io, const Json& j, const TextFn& text = {}, const TextFn& dot = {}) {
    if (io.format == "json") {
        io.out << j.dump(2) << "\n";
    } else if (io.format == "text" && text) {
        io.out << text();
    } else if (io.format == "dot" && dot) {
        io.out << dot();
    } else {
        throw UsageError("--format " + io.format + " is not available for this command");
    }
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::logic_error&) {
            throw UsageError(what + ": '" + token + "' is not an integer");
        }
    }
    if (out.empty()) throw UsageError(what + " is empty");
    return out;
}

std::pair<int, int> parse_pair(const std::string& text, const std::string& what) {
    const auto v = parse_int_list(text, what);
    if (v.size() != 2) throw UsageError(what + " needs exactly two integers");
    return {v[0], v[1]};
}

Json read_json(Io& io, const std::string& path) {
    if (path == "-") return Json::parse(io.in);
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open " + path);
    return Json::parse(file);
}

std::string quiver_text(const Quiver& q) {
    std::ostringstream os;
    os << "n = " << q.size() << "\n";
    for (const auto& a : q.arrow_list()) {
        os << a.tail << " -> " << a.head;
        if (a.multiplicity > 1) os << " (x" << a.multiplicity << ")";
        os << "\n";
    }
    return os.str();
}

std::string quiver_dot(const Quiver& q) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (int i = 1; i <= q.size(); ++i) os << "  " << i << ";\n";
    for (const auto& a : q.arrow_list()) {
        os << "  " << a.tail << " -> " << a.head;
        if (a.multiplicity > 1) os << " [label=\"" << a.multiplicity << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string seed_text(const Seed& s) {
    std::ostringstream os;
    os << quiver_text(s.quiver);
    for (std::size_t i = 0; i < s.vars.size(); ++i) os << "f" << i + 1 << " = " << s.vars[i].to_string() << "\n";
    return os.str();
}

std::string triangulation_text(const Triangulation& t) {
    std::ostringstream os;
    os << "N=" << t.polygon_size() << ":";
    for (const auto& d : t.diagonals()) os << " {" << d.a << "," << d.b << "}";
    os << "\n";
    return os.str();
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

// Shared input options.

struct QuiverInput {
    std::string file;
    std::string dynkin;
    std::string orientation;

    void attach(CLI::App* app) {
        auto* f = app->add_option("--quiver", file, "quiver JSON file ('-' for stdin)");
        auto* d = app->add_option("--dynkin", dynkin, "Dynkin type such as A3, D4, E6");
        app->add_option("--orientation", orientation, "F/B per Dynkin edge (default all F)")->needs(d);
        f->excludes(d);
    }

    Quiver load(Io& io) const {
        if (!file.empty()) return quiver_from_json(read_json(io, file));
        if (dynkin.empty()) throw UsageError("one of --quiver or --dynkin is required");
        const auto [family, rank] = parse_dynkin_type(dynkin);
        std::vector<Orientation> o;
        for (char c : orientation) {
            if (c != 'F' && c != 'B') throw UsageError("--orientation letters must be F or B");
            o.push_back(c == 'F' ? Orientation::Forward : Orientation::Backward);
        }
        return friezelab::dynkin(family, rank, o);
    }
};

bool looks_inline(const std::string& s) {
    const auto colon = s.find(':');
    return colon != std::string::npos && colon > 0 &&
           s.find_first_not_of("-0123456789") >= colon;
}

// "N:a-b,a-b,..." or a JSON file.
Triangulation load_triangulation(Io& io, const std::string& spec) {
    if (!looks_inline(spec)) return triangulation_from_json(read_json(io, spec));
    const auto colon = spec.find(':');
    const int size = parse_int_list(spec.substr(0, colon), "polygon size").front();
    std::vector<Diagonal> ds;
    std::stringstream ss(spec.substr(colon + 1));
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto dash = token.find('-');
        if (dash == std::string::npos) throw UsageError("diagonal '" + token + "' must look like a-b");
        ds.emplace_back(parse_int_list(token.substr(0, dash), "diagonal").front(),
                        parse_int_list(token.substr(dash + 1), "diagonal").front());
    }
    return {size, std::move(ds)};
}

LightningBolt load_bolt(Io& io, const std::string& spec) {
    if (looks_inline(spec)) return LightningBolt::parse(spec);
    return bolt_from_json(read_json(io, spec));
}

Diagonal to_diagonal(const std::string& s) {
    const auto [a, b] = parse_pair(s, "diagonal");
    return {a, b};
}

class Cli {
public:
    Cli(std::istream& in, std::ostream& out) : io_{in, out} {
        app_.require_subcommand(1);
        app_.fallthrough();
        app_.add_option("--format", io_.format, "output format")
            ->check(CLI::IsMember({"json", "text", "dot"}));
        add_quiver();
        add_seed();
        add_exchange();
        add_polygon();
        add_frieze();
        add_category();
        add_serve();
    }

    CLI::App& app() { return app_; }

    int dispatch() {
        for (const auto& [sub, action] : actions_) {
            if (sub->parsed()) return action();
        }
        throw UsageError("no command given");
    }

private:
    CLI::App* group(const std::string& name, const std::string& help) {
        auto* g = app_.add_subcommand(name, help);
        g->require_subcommand(1);
        return g;
    }

    CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, std::function<int()> action) {
        auto* sub = parent->add_subcommand(name, help);
        actions_.emplace_back(sub, std::move(action));
        return sub;
    }

    void add_quiver() {
        auto* g = group("quiver", "quiver mutation and classification");
        {
            auto in = std::make_shared<QuiverInput>();
            auto word = std::make_shared<std::vector<int>>();
            auto* c = leaf(g, "mutate", "mutate at each vertex of a word", [this, in, word] {
                Quiver q = in->load(io_);
                for (int k : *word) q = q.mutate(k);
                emit(io_, to_json(q), [&] { return quiver_text(q); }, [&] { return quiver_dot(q); });
                return 0;
            });
            in->attach(c);
            c->add_option("word", *word, "mutation vertices, applied left to right")->required();
        }
        {
            auto in = std::make_shared<QuiverInput>();
            auto* c = leaf(g, "canon", "canonical form up to relabeling", [this, in] {
                const CanonicalForm cf = canonical_form(in->load(io_));
                emit(io_, to_json(cf), [&] {
                    return quiver_text(cf.quiver) + "permutation: " + join(cf.permutation) + "\n";
                });
                return 0;
            });
            in->attach(c);
        }
        {
            auto in = std::make_shared<QuiverInput>();
            auto* c = leaf(g, "finite-type", "decide mutation-finite Dynkin type", [this, in] {
                const FiniteTypeResult r = is_finite_type(in->load(io_));
                emit(io_, to_json(r), [&] {
                    return r.finite ? "finite " + r.type + "\n"
                                    : "infinite: mutation path [" + join(r.path) + "] reaches a multiple arrow\n";
                });
                return 0;
            });
            in->attach(c);
        }
    }

    void add_seed() {
        auto* g = group("seed", "seed mutation");
        auto in = std::make_shared<QuiverInput>();
        auto seed_file = std::make_shared<std::string>();
        auto word = std::make_shared<std::vector<int>>();
        auto* c = leaf(g, "mutate", "mutate a seed (initial seed of a quiver by default)", [this, in, seed_file, word] {
            Seed s = seed_file->empty() ? initial_seed(in->load(io_)) : seed_from_json(read_json(io_, *seed_file));
            s = mutate_seed(s, *word);
            emit(io_, to_json(s), [&] { return seed_text(s); });
            return 0;
        });
        in->attach(c);
        c->add_option("--seed", *seed_file, "seed JSON file");
        c->add_option("word", *word, "mutation vertices, applied left to right")->required();
    }

    void add_exchange() {
        auto* g = group("exchange", "exchange graph");
        auto in = std::make_shared<QuiverInput>();
        auto budget = std::make_shared<std::size_t>(10000);
        auto* c = leaf(g, "enumerate", "enumerate seeds up to isomorphism", [this, in, budget] {
            const ExchangeGraph graph = enumerate(in->load(io_), *budget);
            emit(
                io_, to_json(graph),
                [&] {
                    std::ostringstream os;
                    os << "seeds: " << graph.nodes.size() << "\n";
                    os << "edges: " << graph.undirected_edges().size() << "\n";
                    os << "variables: " << graph.variables.size() << "\n";
                    for (const auto& v : graph.variables) os << "  " << v.to_string() << "\n";
                    return os.str();
                },
                [&] { return to_dot(graph); });
            return 0;
        });
        in->attach(c);
        c->add_option("--budget", *budget, "maximum number of seeds")->check(CLI::PositiveNumber);
    }

    void add_polygon() {
        auto* g = group("polygon", "polygon triangulations");
        {
            auto size = std::make_shared<int>();
            auto* c = leaf(g, "enumerate", "all triangulations of the labeled N-gon", [this, size] {
                const auto all = enumerate_triangulations(*size);
                Json j = Json::array();
                for (const auto& t : all) j.push_back(to_json(t));
                emit(io_, j, [&] {
                    std::string s;
                    for (const auto& t : all) s += triangulation_text(t);
                    return s;
                });
                return 0;
            });
            c->add_option("N", *size, "polygon size")->required();
        }
        {
            auto spec = std::make_shared<std::string>();
            auto diag = std::make_shared<std::string>();
            auto* c = leaf(g, "flip", "flip one diagonal", [this, spec, diag] {
                const Triangulation t = flip(load_triangulation(io_, *spec), to_diagonal(*diag));
                emit(io_, to_json(t), [&] { return triangulation_text(t); });
                return 0;
            });
            c->add_option("--triangulation", *spec, "JSON file or N:a-b,c-d,...")->required();
            c->add_option("--diagonal", *diag, "a,b")->required();
        }
        {
            auto spec = std::make_shared<std::string>();
            auto* c = leaf(g, "quiddity", "quiddity sequence", [this, spec] {
                const auto q = quiddity(load_triangulation(io_, *spec));
                emit(io_, Json(q), [&] { return join(q) + "\n"; });
                return 0;
            });
            c->add_option("--triangulation", *spec, "JSON file or N:a-b,c-d,...")->required();
        }
    }

    void add_frieze() {
        auto* g = group("frieze", "frieze patterns");
        auto width = std::make_shared<int>(0);
        auto show = [this, width](const Frieze& f) {
            emit(io_, to_json(f), [&] { return render(f, *width > 0 ? *width : f.period()); });
        };
        auto width_option = [width](CLI::App* c) {
            c->add_option("--width", *width, "entries per rendered row (default n+3)")->check(CLI::PositiveNumber);
        };
        {
            auto seq = std::make_shared<std::string>();
            auto* c = leaf(g, "from-quiddity", "frieze with the given quiddity sequence", [seq, show] {
                show(from_quiddity(parse_int_list(*seq, "quiddity")));
                return 0;
            });
            c->add_option("quiddity", *seq, "comma-separated sequence")->required();
            width_option(c);
        }
        {
            auto spec = std::make_shared<std::string>();
            auto* c = leaf(g, "from-triangulation", "frieze of a triangulation", [this, spec, show] {
                show(from_triangulation(load_triangulation(io_, *spec)));
                return 0;
            });
            c->add_option("--triangulation", *spec, "JSON file or N:a-b,c-d,...")->required();
            width_option(c);
        }
        {
            auto spec = std::make_shared<std::string>();
            auto values = std::make_shared<std::string>();
            auto* c = leaf(g, "from-bolt", "frieze through values on a lightning bolt", [this, spec, values, show] {
                const LightningBolt bolt = load_bolt(io_, *spec);
                std::vector<BigInt> v(static_cast<std::size_t>(bolt.height()), BigInt(1));
                if (!values->empty()) {
                    v.clear();
                    for (int x : parse_int_list(*values, "values")) v.emplace_back(x);
                }
                show(from_bolt(bolt, v));
                return 0;
            });
            c->add_option("--bolt", *spec, "JSON file or a:LR...")->required();
            c->add_option("--values", *values, "comma-separated bolt values (default all 1)");
            width_option(c);
        }
        {
            auto spec = std::make_shared<std::string>();
            auto* c = leaf(g, "symbolic", "Laurent polynomial frieze with x_r on the bolt", [this, spec] {
                const auto cells = symbolic_from_bolt(load_bolt(io_, *spec));
                emit(io_, symbolic_cells_to_json(cells), [&] {
                    std::ostringstream os;
                    for (const auto& [d, p] : cells) os << "{" << d.a << "," << d.b << "}: " << p.to_string() << "\n";
                    return os.str();
                });
                return 0;
            });
            c->add_option("--bolt", *spec, "JSON file or a:LR...")->required();
        }
        {
            auto height = std::make_shared<int>();
            auto* c = leaf(g, "enumerate", "all friezes of a given height", [this, height] {
                const auto all = enumerate_friezes(*height);
                Json j = Json::array();
                for (const auto& f : all) j.push_back(to_json(f));
                emit(io_, j, [&] {
                    std::string s;
                    for (const auto& f : all) s += join(f.quiddity()) + "\n";
                    return s;
                });
                return 0;
            });
            c->add_option("height", *height, "frieze height n")->required();
        }
        {
            auto file = std::make_shared<std::string>();
            auto seq = std::make_shared<std::string>();
            auto* c = leaf(g, "check", "validate a frieze or a quiddity sequence", [this, file, seq] {
                Json report;
                try {
                    const Frieze f = file->empty() ? from_quiddity(parse_int_list(*seq, "quiddity"))
                                                   : frieze_from_json(read_json(io_, *file));
                    report = {{"valid", true}, {"n", f.height()}, {"quiddity", f.quiddity()}};
                } catch (const MalformedInput&) {
                    throw;
                } catch (const DomainError& e) {
                    report = {{"valid", false}, {"error", e.code()}, {"detail", e.what()}};
                }
                emit(io_, report, [&] {
                    return report["valid"].get<bool>() ? "valid\n"
                                                       : "invalid: " + report["detail"].get<std::string>() + "\n";
                });
                return 0;
            });
            auto* f = c->add_option("--frieze", *file, "frieze JSON file");
            c->add_option("quiddity", *seq, "comma-separated sequence")->excludes(f);
        }
        {
            auto file = std::make_shared<std::string>();
            auto seq = std::make_shared<std::string>();
            auto* c = leaf(g, "render", "text strip of a frieze", [this, file, seq, width] {
                if (file->empty() == seq->empty()) throw UsageError("give exactly one of --frieze or a quiddity");
                const Frieze f = file->empty() ? from_quiddity(parse_int_list(*seq, "quiddity"))
                                               : frieze_from_json(read_json(io_, *file));
                io_.out << render(f, *width > 0 ? *width : f.period());
                return 0;
            });
            auto* f = c->add_option("--frieze", *file, "frieze JSON file");
            c->add_option("quiddity", *seq, "comma-separated sequence")->excludes(f);
            width_option(c);
        }
    }

    void add_category() {
        auto* g = group("category", "type A cluster category");
        {
            auto rank = std::make_shared<int>();
            auto x = std::make_shared<std::string>();
            auto y = std::make_shared<std::string>();
            auto* c = leaf(g, "hom", "dim Hom(X,Y) in the derived category", [this, rank, x, y] {
                const auto [xi, xm] = parse_pair(*x, "--x");
                const auto [yi, ym] = parse_pair(*y, "--y");
                const ZQVertex vx{xi, xm}, vy{yi, ym};
                const MeshWindow w{*rank, std::min(xm, ym), std::max(xm, ym)};
                if (!w.contains(vx) || !w.contains(vy)) throw InvalidInput("vertex row outside 1..n");
                const int mesh = hom_dim_mesh(w, vx, vy);
                const int rect = hom_dim_rectangle(*rank, vx, vy);
                const Json j = {{"n", *rank}, {"x", to_json(vx)}, {"y", to_json(vy)}, {"mesh", mesh}, {"rectangle", rect}};
                emit(io_, j, [&] { return std::to_string(mesh) + "\n"; });
                return 0;
            });
            c->add_option("--n", *rank, "rank")->required();
            c->add_option("--x", *x, "i,m")->required();
            c->add_option("--y", *y, "i,m")->required();
        }
        {
            auto rank = std::make_shared<int>();
            auto x = std::make_shared<std::string>();
            auto y = std::make_shared<std::string>();
            auto* c = leaf(g, "compat", "compatibility of two diagonals", [this, rank, x, y] {
                const bool ok = compatible(*rank, to_diagonal(*x), to_diagonal(*y));
                emit(io_, Json{{"compatible", ok}}, [&] { return std::string(ok ? "compatible\n" : "crossing\n"); });
                return 0;
            });
            c->add_option("--n", *rank, "rank")->required();
            c->add_option("--x", *x, "a,b")->required();
            c->add_option("--y", *y, "a,b")->required();
        }
        {
            auto rank = std::make_shared<int>();
            auto* c = leaf(g, "ct-enumerate", "cluster-tilting objects", [this, rank] {
                const auto all = cluster_tilting_objects(*rank);
                Json j = Json::array();
                for (const auto& t : all) j.push_back(to_json(t));
                emit(io_, j, [&] {
                    std::string s;
                    for (const auto& t : all) s += triangulation_text(t);
                    return s;
                });
                return 0;
            });
            c->add_option("--n", *rank, "rank")->required();
        }
        {
            auto spec = std::make_shared<std::string>();
            auto diag = std::make_shared<std::string>();
            auto* c = leaf(g, "ct-flip", "mutate a cluster-tilting object at a summand", [this, spec, diag] {
                const Triangulation t = mutate_ct(load_triangulation(io_, *spec), to_diagonal(*diag));
                emit(io_, to_json(t), [&] { return triangulation_text(t); });
                return 0;
            });
            c->add_option("--triangulation", *spec, "JSON file or N:a-b,c-d,...")->required();
            c->add_option("--diagonal", *diag, "a,b")->required();
        }
        {
            auto spec = std::make_shared<std::string>();
            auto* c = leaf(g, "frieze-from-ct", "frieze taking the value 1 on the summands", [this, spec] {
                const Frieze f = frieze_from_ct(load_triangulation(io_, *spec));
                emit(io_, to_json(f), [&] { return render(f, f.period()); });
                return 0;
            });
            c->add_option("--triangulation", *spec, "JSON file or N:a-b,c-d,...")->required();
        }
        {
            auto spec = std::make_shared<std::string>();
            auto diag = std::make_shared<std::string>();
            auto* c = leaf(g, "phi", "cluster variable of a diagonal", [this, spec, diag] {
                const LaurentPoly p = cluster_variable_of(to_diagonal(*diag), load_bolt(io_, *spec));
                emit(io_, to_json(p), [&] { return p.to_string() + "\n"; });
                return 0;
            });
            c->add_option("--bolt", *spec, "JSON file or a:LR...")->required();
            c->add_option("--diagonal", *diag, "a,b")->required();
        }
    }

    void add_serve() {
        auto port = std::make_shared<int>(kDefaultPort);
        auto host = std::make_shared<std::string>("127.0.0.1");
        auto origin = std::make_shared<std::string>();
        auto* c = leaf(&app_, "serve", "HTTP JSON service", [port, host, origin] {
            ServerOptions options = ServerOptions::from_env();
            if (!origin->empty()) options.allow_origin = *origin;
            return serve(*host, *port, options);
        });
        c->add_option("--port", *port, "listening port")->check(CLI::Range(1, 65535));
        c->add_option("--host", *host, "listening address");
        c->add_option("--allow-origin", *origin, "CORS origin (overrides CF_ALLOW_ORIGIN)");
    }

    Io io_;
    CLI::App app_{"Frieze patterns, cluster mutation and the type A cluster category", "friezelab"};
    std::vector<std::pair<CLI::App*, std::function<int()>>> actions_;
};

void report(std::ostream& err, const std::string& code, const std::string& detail) {
    err << Json{{"error", code}, {"detail", detail}}.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Cli cli(in, out);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        cli.app().parse(reversed);
    } catch (const CLI::ParseError& e) {
        return cli.app().exit(e, out, err) == 0 ? 0 : 2;
    }
    try {
        return cli.dispatch();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        err << Json{{"error", e.code()}, {"detail", e.what()}, {"nodes_explored", e.partial().nodes.size()}}.dump()
            << "\n";
        return 1;
    } catch (const DomainError& e) {
        report(err, e.code(), e.what());
        return 1;
    } catch (const nlohmann::json::exception& e) {
        report(err, "malformed_input", e.what());
        return 1;
    }
}

}  // namespace friezelab
