#include "friezelab/server.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>

#include <httplib.h>

namespace friezelab {

namespace {

Json ok(Json result) { return {{"ok", true}, {"result", std::move(result)}}; }

ApiResponse failure(int status, const std::string& code, const std::string& detail) {
    return {status, {{"ok", false}, {"error", {{"code", code}, {"detail", detail}}}}};
}

const Json& require(const Json& body, const char* key) {
    if (!body.is_object() || !body.contains(key)) throw MalformedInput(std::string("missing field '") + key + "'");
    return body.at(key);
}

using Handler = std::function<Json(const Json&, const ServerOptions&)>;

const std::map<std::string, Handler>& post_routes() {
    static const std::map<std::string, Handler> routes = {
        {"/api/quiver/mutate",
         [](const Json& body, const ServerOptions&) {
             const Quiver q = quiver_from_json(require(body, "quiver"));
             return Json{{"quiver", to_json(q.mutate(require(body, "k").get<int>()))}};
         }},
        {"/api/seed/mutate",
         [](const Json& body, const ServerOptions&) {
             const Seed s = seed_from_json(require(body, "seed"));
             return Json{{"seed", to_json(mutate_seed(s, require(body, "k").get<int>()))}};
         }},
        {"/api/exchange/enumerate",
         [](const Json& body, const ServerOptions& options) {
             const Quiver q = quiver_from_json(require(body, "quiver"));
             std::size_t budget = options.budget_max;
             if (body.contains("budget")) {
                 const auto requested = body.at("budget").get<std::int64_t>();
                 if (requested < 1) throw InvalidInput("budget must be at least 1");
                 budget = std::min(budget, static_cast<std::size_t>(requested));
             }
             return Json{{"graph", to_json(enumerate(q, budget))}};
         }},
        {"/api/polygon/flip",
         [](const Json& body, const ServerOptions&) {
             const Triangulation t = triangulation_from_json(require(body, "triangulation"));
             return Json{{"triangulation", to_json(flip(t, diagonal_from_json(require(body, "diagonal"))))}};
         }},
        {"/api/frieze/from-triangulation",
         [](const Json& body, const ServerOptions&) {
             const Triangulation t = triangulation_from_json(require(body, "triangulation"));
             return Json{{"frieze", to_json(from_triangulation(t))}};
         }},
        {"/api/frieze/symbolic",
         [](const Json& body, const ServerOptions&) {
             const LightningBolt bolt = bolt_from_json(require(body, "bolt"));
             return Json{{"cells", symbolic_cells_to_json(symbolic_from_bolt(bolt))}};
         }},
        {"/api/category/phi",
         [](const Json& body, const ServerOptions&) {
             const LightningBolt bolt = bolt_from_json(require(body, "bolt"));
             const Diagonal d = diagonal_from_json(require(body, "diagonal"));
             return Json{{"poly", to_json(cluster_variable_of(d, bolt))}};
         }},
    };
    return routes;
}

}  // namespace

ServerOptions ServerOptions::from_env() {
    ServerOptions options;
    if (const char* origin = std::getenv("CF_ALLOW_ORIGIN"); origin != nullptr && *origin != '\0') {
        options.allow_origin = origin;
    }
    if (const char* budget = std::getenv("CF_BUDGET_MAX"); budget != nullptr && *budget != '\0') {
        try {
            const long long value = std::stoll(budget);
            if (value >= 1) options.budget_max = static_cast<std::size_t>(value);
        } catch (const std::logic_error&) {
            std::cerr << "ignoring CF_BUDGET_MAX='" << budget << "'\n";
        }
    }
    return options;
}

ApiResponse handle_request(const std::string& method, const std::string& path, const std::string& body,
                           const ServerOptions& options) {
    if (path == "/api/health") {
        if (method != "GET") return failure(405, "method_not_allowed", "use GET");
        return {200, {{"ok", true}}};
    }
    const auto& routes = post_routes();
    const auto route = routes.find(path);
    if (route == routes.end()) return failure(404, "not_found", "no endpoint " + path);
    if (method != "POST") return failure(405, "method_not_allowed", "use POST");

    try {
        const Json request = Json::parse(body);
        return {200, ok(route->second(request, options))};
    } catch (const BudgetExceeded& e) {
        ApiResponse r = failure(422, e.code(), e.what());
        r.body["error"]["nodes_explored"] = e.partial().nodes.size();
        return r;
    } catch (const MalformedInput& e) {
        return failure(400, e.code(), e.what());
    } catch (const DomainError& e) {
        return failure(422, e.code(), e.what());
    } catch (const nlohmann::json::exception& e) {
        return failure(400, "malformed_input", e.what());
    }
}

void install_routes(httplib::Server& server, const ServerOptions& options) {
    server.set_default_headers({{"Access-Control-Allow-Origin", options.allow_origin},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    auto dispatch = [options](const httplib::Request& req, httplib::Response& res) {
        const ApiResponse r = handle_request(req.method, req.path, req.body, options);
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };
    server.Get(".*", dispatch);
    server.Post(".*", dispatch);
    server.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

int serve(const std::string& host, int port, const ServerOptions& options) {
    httplib::Server server;
    install_routes(server, options);
    std::cerr << "listening on http://" << host << ":" << port << "\n";
    return server.listen(host, port) ? 0 : 1;
}

}  // namespace friezelab
