#include "elgr/http_server.hpp"

#include <csignal>
#include <ostream>

#include <httplib.h>

namespace elgr {

using nlohmann::json;

namespace {

void send_json(httplib::Response& res, const json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json; charset=utf-8");
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    return json::parse(req.body);
  } catch (const json::exception& e) {
    throw ApiError{400, "BadRequest", std::string("invalid JSON body: ") + e.what()};
  }
}

template <typename F>
httplib::Server::Handler handler(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const ApiError& e) {
      send_json(res, e.body(), e.status);
    } catch (const std::exception& e) {
      send_json(res, ApiError{500, "InternalError", e.what()}.body(), 500);
    }
  };
}

HttpServer* active = nullptr;

void on_signal(int) {
  if (active) active->stop();
}

}  // namespace

HttpServer::HttpServer(SessionStore& store, std::optional<std::filesystem::path> ui_dir)
    : store_(store), server_(std::make_unique<httplib::Server>()) {
  auto& s = *server_;
  const std::string id = R"(/api/sessions/([0-9a-zA-Z]+))";

  s.Post("/api/sessions", handler([this](const auto& req, auto& res) {
           send_json(res, store_.create(parse_body(req)), 201);
         }));
  s.Get(id, handler([this](const auto& req, auto& res) {
          send_json(res, store_.state(req.matches[1]));
        }));
  s.Get(id + "/justifications", handler([this](const auto& req, auto& res) {
          send_json(res, store_.justifications(req.matches[1]));
        }));
  s.Get(id + "/candidates", handler([this](const auto& req, auto& res) {
          if (!req.has_param("axiom"))
            throw ApiError{400, "BadRequest", "missing query parameter 'axiom'"};
          std::string mode = req.has_param("mode") ? req.get_param_value("mode") : "max-strong";
          send_json(res, store_.candidates(req.matches[1], req.get_param_value("axiom"), mode));
        }));
  s.Post(id + "/apply", handler([this](const auto& req, auto& res) {
           send_json(res, store_.apply(req.matches[1], parse_body(req)));
         }));
  s.Post(id + "/auto", handler([this](const auto& req, auto& res) {
           send_json(res, store_.auto_run(req.matches[1], parse_body(req)));
         }));
  s.Get(id + "/export", handler([this](const auto& req, auto& res) {
          res.set_content(store_.export_text(req.matches[1]), "text/plain; charset=utf-8");
        }));

  if (ui_dir) s.set_mount_point("/", ui_dir->string());
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return server_->listen_after_bind(); }

void HttpServer::stop() { server_->stop(); }

void HttpServer::wait_until_ready() const { server_->wait_until_ready(); }

int serve(const std::string& host, int port, std::optional<std::filesystem::path> state_dir,
          std::optional<std::filesystem::path> ui_dir, std::ostream& log) {
  SessionStore store(std::move(state_dir));
  HttpServer server(store, std::move(ui_dir));
  int bound = server.bind(host, port);
  if (bound < 0) {
    log << "elgr: cannot bind " << host << ":" << port << "\n";
    return 1;
  }
  log << "elgr: listening on http://" << host << ":" << bound << " (" << store.size()
      << " sessions restored)\n";
  log.flush();
  active = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  server.listen();
  active = nullptr;
  return 0;
}

}  // namespace elgr
