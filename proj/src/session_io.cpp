#include "emgloop/session_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace emgloop {

namespace {

using nlohmann::json;

std::string at_line(const std::filesystem::path& path, std::size_t line_no) {
  return path.string() + ":" + std::to_string(line_no);
}

const json& require_field(const json& record, const char* key, const std::string& where) {
  auto it = record.find(key);
  if (it == record.end()) {
    throw ParseError(where + ": missing field \"" + std::string(key) + "\"");
  }
  return *it;
}

SessionLog parse_header(const json& record, const std::string& where) {
  SessionLog session;
  try {
    session.participant_id = require_field(record, "participant_id", where).get<std::string>();
    session.session_id = require_field(record, "session_id", where).get<std::string>();
    session.sample_rate_hz = require_field(record, "sample_rate_hz", where).get<int>();
    session.difficulty_track =
        require_field(record, "difficulty_track", where).get<std::vector<int>>();
    const auto task_str = require_field(record, "task", where).get<std::string>();
    const auto task = parse_task(task_str);
    if (!task) throw SchemaError(where + ": unknown task \"" + task_str + "\"");
    session.task = *task;
  } catch (const json::exception& e) {
    throw ParseError(where + ": bad header record: " + e.what());
  }
  return session;
}

void parse_segment(const json& record, SessionLog& session, const std::string& where) {
  EmgSegment seg;
  seg.participant_id = session.participant_id;
  seg.session_id = session.session_id;
  seg.task = session.task;
  seg.sample_rate_hz = session.sample_rate_hz;
  std::vector<ScoreEvent> events;
  try {
    seg.window_index = require_field(record, "window_index", where).get<std::size_t>();
    const json& channels = require_field(record, "channels", where);
    if (!channels.is_array() || channels.size() != kNumChannels) {
      throw SchemaError(where + ": expected " + std::to_string(kNumChannels) +
                        " channels, got " +
                        std::to_string(channels.is_array() ? channels.size() : 0));
    }
    for (std::size_t c = 0; c < kNumChannels; ++c) {
      seg.channels[c] = channels[c].get<std::vector<double>>();
    }
    const json& valence = require_field(record, "valence", where);
    const json& arousal = require_field(record, "arousal", where);
    if (valence.is_null() != arousal.is_null()) {
      throw SchemaError(where + ": valence and arousal must both be set or both null");
    }
    if (!valence.is_null()) {
      seg.label = AffectLabel{valence.get<double>(), arousal.get<double>()};
    }
    for (const auto& ev : require_field(record, "score_events", where)) {
      const auto name = ev.get<std::string>();
      if (name == "correct") {
        events.push_back(ScoreEvent::Correct);
      } else if (name == "incorrect") {
        events.push_back(ScoreEvent::Incorrect);
      } else {
        throw SchemaError(where + ": unknown score event \"" + name + "\"");
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(where + ": bad segment record: " + e.what());
  }
  session.segments.push_back(std::move(seg));
  session.score_events.push_back(std::move(events));
}

json header_to_json(const SessionLog& session) {
  return json{{"kind", "header"},
              {"participant_id", session.participant_id},
              {"session_id", session.session_id},
              {"task", task_name(session.task)},
              {"sample_rate_hz", session.sample_rate_hz},
              {"difficulty_track", session.difficulty_track}};
}

json segment_to_json(const SessionLog& session, std::size_t i) {
  const EmgSegment& seg = session.segments[i];
  json channels = json::array();
  for (const auto& ch : seg.channels) channels.push_back(ch);
  json events = json::array();
  for (ScoreEvent ev : session.score_events[i]) {
    events.push_back(ev == ScoreEvent::Correct ? "correct" : "incorrect");
  }
  json record{{"kind", "segment"},
              {"window_index", seg.window_index},
              {"channels", std::move(channels)},
              {"score_events", std::move(events)}};
  if (seg.label) {
    record["valence"] = seg.label->valence;
    record["arousal"] = seg.label->arousal;
  } else {
    record["valence"] = nullptr;
    record["arousal"] = nullptr;
  }
  return record;
}

}  // namespace

std::vector<SessionLog> load_sessions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open session file: " + path.string());

  std::vector<SessionLog> sessions;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = at_line(path, line_no);

    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(where + ": invalid JSON: " + e.what());
    }
    if (!record.is_object()) throw ParseError(where + ": record is not an object");

    const auto kind = require_field(record, "kind", where).get<std::string>();
    if (kind == "header") {
      if (!sessions.empty()) {
        validate_session(sessions.back(), path.string());
      }
      sessions.push_back(parse_header(record, where));
    } else if (kind == "segment") {
      if (sessions.empty()) {
        throw ParseError(where + ": segment record before any header");
      }
      parse_segment(record, sessions.back(), where);
    } else {
      throw ParseError(where + ": unknown record kind \"" + kind + "\"");
    }
  }
  if (!sessions.empty()) {
    validate_session(sessions.back(), path.string());
  }
  return sessions;
}

void save_sessions(const std::filesystem::path& path,
                   const std::vector<SessionLog>& sessions) {
  for (const auto& session : sessions) {
    validate_session(session, "save_sessions(" + session.session_id + ")");
  }
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) throw ParseError("cannot open file for writing: " + path.string());
  for (const auto& session : sessions) {
    out << header_to_json(session).dump() << '\n';
    for (std::size_t i = 0; i < session.segments.size(); ++i) {
      out << segment_to_json(session, i).dump() << '\n';
    }
  }
  if (!out) throw ParseError("write failed: " + path.string());
}

std::vector<SessionLog> load_corpus(const std::filesystem::path& path) {
  if (std::filesystem::is_regular_file(path)) {
    return load_sessions(path);
  }
  if (!std::filesystem::is_directory(path)) {
    throw ParseError("corpus path does not exist: " + path.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<SessionLog> sessions;
  for (const auto& file : files) {
    auto loaded = load_sessions(file);
    for (auto& s : loaded) sessions.push_back(std::move(s));
  }
  return sessions;
}

}  // namespace emgloop
