#pragma once

// Human-vs-engine LCTR games held in memory.
//
// The engine answers inside the same call that applies a human move, so a
// live session is always waiting for the human. Mutations of one session are
// serialized; different sessions proceed independently.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grundy.hpp"
#include "json_io.hpp"
#include "partition.hpp"

namespace lctr {

// Carries the HTTP status the service layer reports.
class ServiceError : public std::runtime_error {
public:
  ServiceError(int status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  int status() const noexcept { return status_; }

private:
  int status_;
};

enum class Actor { Human, Engine };
enum class EngineRole { None, PlaysFirst, PlaysSecond };

inline std::string_view actor_name(Actor a) { return a == Actor::Human ? "human" : "engine"; }

inline std::string_view engine_role_name(EngineRole r) {
  switch (r) {
    case EngineRole::None: return "none";
    case EngineRole::PlaysFirst: return "plays_first";
    case EngineRole::PlaysSecond: return "plays_second";
  }
  return "?";
}

inline EngineRole parse_engine_role(std::string_view name) {
  if (name == "none") return EngineRole::None;
  if (name == "plays_first") return EngineRole::PlaysFirst;
  if (name == "plays_second") return EngineRole::PlaysSecond;
  throw ParseError("unknown engine_role '" + std::string(name) +
                   "' (expected none, plays_first or plays_second)");
}

struct HistoryEntry {
  Actor actor;
  MoveKind move;
  Partition resulting;
};

struct GameSession {
  std::string id;
  Partition initial;
  Partition position;
  std::vector<HistoryEntry> history;
  EngineRole engine_role = EngineRole::PlaysSecond;

  bool finished() const noexcept { return position.empty(); }

  // Normal play: whoever made the last move wins.
  std::optional<Actor> winner() const {
    if (!finished() || history.empty()) return std::nullopt;
    return history.back().actor;
  }

  std::optional<Actor> turn() const {
    if (finished()) return std::nullopt;
    return Actor::Human;
  }

  std::size_t ply() const noexcept { return history.size(); }
};

inline nlohmann::json to_json_view(const GameSession& s) {
  nlohmann::json history = nlohmann::json::array();
  for (const auto& h : s.history)
    history.push_back({{"actor", actor_name(h.actor)},
                       {"move", move_token(h.move)},
                       {"resulting", h.resulting}});
  auto optional_actor = [](std::optional<Actor> a) -> nlohmann::json {
    return a ? nlohmann::json(actor_name(*a)) : nlohmann::json(nullptr);
  };
  return {{"id", s.id},
          {"initial", s.initial},
          {"position", s.position},
          {"rows", s.position.parts()},
          {"turn", optional_actor(s.turn())},
          {"finished", s.finished()},
          {"winner", optional_actor(s.winner())},
          {"engine_role", engine_role_name(s.engine_role)},
          {"ply", s.ply()},
          {"history", std::move(history)}};
}

struct Hint {
  GrundyValue sg;
  Outcome outcome;
  Followers followers;
};

inline nlohmann::json to_json_view(const Hint& h) {
  return {{"sg", h.sg.value()},
          {"outcome", outcome_letter(h.outcome)},
          {"followers", followers_json(h.followers)}};
}

// Append-only JSON-lines record of accepted moves: {ts, game, actor, move, resulting}.
class MoveLog {
public:
  MoveLog() = default;
  explicit MoveLog(const std::string& path) : out_(path, std::ios::app) {
    if (!out_) throw std::runtime_error("cannot open game log '" + path + "'");
  }

  bool enabled() const { return out_.is_open(); }

  void record(const std::string& game, const HistoryEntry& entry) {
    if (!enabled()) return;
    nlohmann::json line = {{"ts", timestamp()},
                           {"game", game},
                           {"actor", actor_name(entry.actor)},
                           {"move", move_token(entry.move)},
                           {"resulting", entry.resulting}};
    std::lock_guard lock(mutex_);
    out_ << line.dump() << '\n';
    out_.flush();
  }

private:
  static std::string timestamp() {
    using namespace std::chrono;
    const auto now = system_clock::now();
    const auto millis = duration_cast<milliseconds>(now.time_since_epoch()).count() % 1000;
    const std::time_t t = system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%S") << '.' << std::setw(3) << std::setfill('0')
       << millis << 'Z';
    return os.str();
  }

  std::mutex mutex_;
  std::ofstream out_;
};

class SessionStore {
public:
  explicit SessionStore(std::shared_ptr<MoveLog> log = std::make_shared<MoveLog>())
      : log_(std::move(log)) {}

  GameSession create(const Partition& start, EngineRole role) {
    if (start.empty()) throw ServiceError(422, "start position must be nonempty");
    auto entry = std::make_shared<Entry>();
    entry->session.id = new_id();
    entry->session.initial = start;
    entry->session.position = start;
    entry->session.engine_role = role;
    if (role == EngineRole::PlaysFirst) engine_reply(entry->session);

    std::unique_lock lock(map_mutex_);
    sessions_.emplace(entry->session.id, entry);
    return entry->session;
  }

  // `expected_ply`, when given, must equal the number of moves already played;
  // a stale value is rejected with 409 so duplicate submissions cannot apply twice.
  GameSession apply_human_move(const std::string& id, MoveKind move,
                               std::optional<std::size_t> expected_ply = std::nullopt) {
    auto entry = find(id);
    std::lock_guard lock(entry->mutex);
    GameSession& s = entry->session;
    if (s.finished()) throw ServiceError(409, "game is finished");
    if (s.turn() != Actor::Human) throw ServiceError(409, "not the human's turn");
    if (expected_ply && *expected_ply != s.ply())
      throw ServiceError(409, "stale move: game is at ply " + std::to_string(s.ply()));

    play(s, Actor::Human, move);
    if (!s.finished() && s.engine_role != EngineRole::None) engine_reply(s);
    return s;
  }

  GameSession get(const std::string& id) const {
    auto entry = find(id);
    std::lock_guard lock(entry->mutex);
    return entry->session;
  }

  Hint hint(const std::string& id) const {
    Partition position = get(id).position;
    if (position.empty()) throw ServiceError(409, "game is finished");
    GrundyValue value = sg_grid(position);
    return {value, value.is_zero() ? Outcome::PreviousPlayerWins : Outcome::NextPlayerWins,
            follower_values(position)};
  }

  std::size_t size() const {
    std::shared_lock lock(map_mutex_);
    return sessions_.size();
  }

private:
  struct Entry {
    mutable std::mutex mutex;
    GameSession session;
  };

  std::shared_ptr<Entry> find(const std::string& id) const {
    std::shared_lock lock(map_mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw ServiceError(404, "unknown game '" + id + "'");
    return it->second;
  }

  void play(GameSession& s, Actor actor, MoveKind move) {
    s.position = apply_move(s.position, move);
    s.history.push_back({actor, move, s.position});
    log_->record(s.id, s.history.back());
  }

  void engine_reply(GameSession& s) { play(s, Actor::Engine, best_move(s.position).kind); }

  static std::string new_id() {
    static std::mutex mutex;
    static std::random_device device;
    std::lock_guard lock(mutex);
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) os << std::hex << std::setw(8) << std::setfill('0') << device();
    return os.str();
  }

  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::shared_ptr<MoveLog> log_;
};

}  // namespace lctr
