#ifndef ELGR_HTTP_SERVER_HPP
#define ELGR_HTTP_SERVER_HPP

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include "elgr/service.hpp"

namespace httplib {
class Server;
}

namespace elgr {

/// JSON session API under /api/sessions, optionally serving static files
/// from ui_dir at /.
class HttpServer {
 public:
  HttpServer(SessionStore& store, std::optional<std::filesystem::path> ui_dir = std::nullopt);
  ~HttpServer();

  /// Binds and returns the port (an ephemeral one when port is 0), or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  SessionStore& store_;
  std::unique_ptr<httplib::Server> server_;
};

/// Runs a server until interrupted. Prints the bound address to log.
int serve(const std::string& host, int port, std::optional<std::filesystem::path> state_dir,
          std::optional<std::filesystem::path> ui_dir, std::ostream& log);

}  // namespace elgr

#endif  // ELGR_HTTP_SERVER_HPP
