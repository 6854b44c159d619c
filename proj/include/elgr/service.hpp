#ifndef ELGR_SERVICE_HPP
#define ELGR_SERVICE_HPP

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include <json.hpp>

#include "elgr/repair.hpp"

namespace elgr {

/// Failure of a service call, mapped one-to-one onto an HTTP response.
struct ApiError {
  int status;
  std::string error;
  nlohmann::json detail;

  nlohmann::json body() const { return {{"error", error}, {"detail", detail}}; }
};

/// Interactive repair sessions. Calls on distinct sessions run concurrently;
/// calls on one session are serialized, with read-only calls sharing access.
///
/// With a state directory, every mutation rewrites <dir>/<id>.json holding
/// the session's inputs and the ordered list of applied decisions; sessions
/// are rebuilt from these files by replay at construction.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> state_dir = std::nullopt);
  ~SessionStore();

  /// Body: {ontology, query, algorithm = "gentle", weakening = "syn"}.
  nlohmann::json create(const nlohmann::json& body);
  nlohmann::json state(const std::string& id);
  nlohmann::json justifications(const std::string& id);
  /// mode: "max-strong" (default) or "one-step".
  nlohmann::json candidates(const std::string& id, const std::string& axiom,
                            const std::string& mode);
  /// Body: {axiom, replacement}.
  nlohmann::json apply(const std::string& id, const nlohmann::json& body);
  /// Body: {strategy}: "tautology", "oracle" or "max-strong".
  nlohmann::json auto_run(const std::string& id, const nlohmann::json& body);
  std::string export_text(const std::string& id);

  std::size_t size() const;

  struct Session;

 private:

  std::shared_ptr<Session> find(const std::string& id) const;
  void persist(const Session& s) const;
  void load_all();

  std::optional<std::filesystem::path> state_dir_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

}  // namespace elgr

#endif  // ELGR_SERVICE_HPP
