#pragma once

// JSON-over-HTTP front end for SessionStore.
//
//   POST /games              {start, engine_role}   -> 201 {id, state}
//   GET  /games/{id}                                -> 200 state
//   POST /games/{id}/moves   {move: "L"|"T", ply?}  -> 200 state
//   GET  /games/{id}/hint                           -> 200 hint
//
// Errors are {error: string}: 400 malformed JSON, 404 unknown game,
// 409 finished/stale/out of turn, 422 invalid partition, role or move.

#include <httplib.h>
#include <json.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "partition.hpp"
#include "session.hpp"

namespace lctr {

class GameServer {
public:
  explicit GameServer(std::shared_ptr<MoveLog> log = std::make_shared<MoveLog>())
      : store_(std::move(log)) {
    routes();
  }

  GameServer(const GameServer&) = delete;
  GameServer& operator=(const GameServer&) = delete;

  // Serve static files (the browser UI build) from `dir` at "/".
  bool mount_static(const std::string& dir) { return http_.set_mount_point("/", dir); }

  bool listen(const std::string& host, int port) { return http_.listen(host, port); }

  // For tests: bind an ephemeral port, then call listen_after_bind() on a worker thread.
  int bind_any_port(const std::string& host) { return http_.bind_to_any_port(host); }
  bool listen_after_bind() { return http_.listen_after_bind(); }
  void wait_until_ready() const { http_.wait_until_ready(); }
  void stop() { http_.stop(); }

  SessionStore& store() noexcept { return store_; }

private:
  using Json = nlohmann::json;

  static void reply(httplib::Response& res, int status, const Json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
  }

  // Runs `body` and maps exceptions onto status codes.
  template <typename Handler>
  static void guarded(httplib::Response& res, Handler&& body) {
    try {
      body();
    } catch (const ServiceError& e) {
      reply(res, e.status(), {{"error", e.what()}});
    } catch (const Json::parse_error& e) {
      reply(res, 400, {{"error", std::string("malformed JSON: ") + e.what()}});
    } catch (const Json::exception& e) {
      reply(res, 422, {{"error", e.what()}});
    } catch (const ParseError& e) {
      reply(res, 422, {{"error", e.what()}});
    } catch (const DomainError& e) {
      reply(res, 422, {{"error", e.what()}});
    } catch (const std::exception& e) {
      reply(res, 500, {{"error", e.what()}});
    }
  }

  static Json parse_body(const httplib::Request& req) {
    Json body = Json::parse(req.body);
    if (!body.is_object()) throw ServiceError(400, "request body must be a JSON object");
    return body;
  }

  static std::string required_string(const Json& body, const char* field) {
    auto it = body.find(field);
    if (it == body.end() || !it->is_string())
      throw ServiceError(422, std::string("field '") + field + "' must be a string");
    return it->get<std::string>();
  }

  void routes() {
    http_.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                               {"Access-Control-Allow-Headers", "Content-Type"},
                               {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    http_.Options(R"(/games.*)", [](const httplib::Request&, httplib::Response& res) {
      res.status = 204;
    });

    http_.Post("/games", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        Json body = parse_body(req);
        Partition start = parse_partition(required_string(body, "start"));
        EngineRole role = EngineRole::PlaysSecond;
        if (body.contains("engine_role")) role = parse_engine_role(required_string(body, "engine_role"));
        GameSession s = store_.create(start, role);
        reply(res, 201, {{"id", s.id}, {"state", to_json_view(s)}});
      });
    });

    http_.Get(R"(/games/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] { reply(res, 200, to_json_view(store_.get(req.matches[1]))); });
    });

    http_.Post(R"(/games/([^/]+)/moves)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const std::string id = req.matches[1];
        Json body = parse_body(req);
        MoveKind move = parse_move_token(required_string(body, "move"));
        std::optional<std::size_t> ply;
        if (auto it = body.find("ply"); it != body.end() && !it->is_null()) {
          if (!it->is_number_unsigned()) throw ServiceError(422, "field 'ply' must be a natural number");
          ply = it->get<std::size_t>();
        }
        reply(res, 200, to_json_view(store_.apply_human_move(id, move, ply)));
      });
    });

    http_.Get(R"(/games/([^/]+)/hint)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] { reply(res, 200, to_json_view(store_.hint(req.matches[1]))); });
    });
  }

  SessionStore store_;
  httplib::Server http_;
};

}  // namespace lctr
