#pragma once

#include <cstddef>
#include <string>

#include "friezelab/json_io.hpp"

namespace httplib {
class Server;
}

namespace friezelab {

inline constexpr int kDefaultPort = 8780;

struct ServerOptions {
    /// Value of Access-Control-Allow-Origin.
    std::string allow_origin = "*";
    /// Upper bound on exchange enumeration budgets.
    std::size_t budget_max = 100000;

    /// Reads CF_ALLOW_ORIGIN and CF_BUDGET_MAX, keeping defaults for unset variables.
    static ServerOptions from_env();
};

struct ApiResponse {
    int status = 200;
    Json body;
};

/// Stateless dispatch shared by the HTTP listener and the tests.
ApiResponse handle_request(const std::string& method, const std::string& path, const std::string& body,
                           const ServerOptions& options);

/// Registers every endpoint plus CORS handling on `server`.
void install_routes(httplib::Server& server, const ServerOptions& options);

/// Blocks serving on host:port. Returns nonzero if the socket cannot be bound.
int serve(const std::string& host, int port, const ServerOptions& options);

}  // namespace friezelab
