#include "emgloop/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace emgloop {

Quadrant truncate_label(const AffectLabel& label) {
  if (label.valence == 0.0 || label.arousal == 0.0) {
    std::ostringstream msg;
    msg << "ambiguous label (" << label.valence << ", " << label.arousal
        << "): valence and arousal must be nonzero";
    throw AmbiguousLabel(msg.str());
  }
  if (label.valence > 0.0) {
    return label.arousal > 0.0 ? Quadrant::EnergeticPositive : Quadrant::CalmPositive;
  }
  return label.arousal > 0.0 ? Quadrant::EnergeticNegative : Quadrant::CalmNegative;
}

bool is_positive_valence(Quadrant q) {
  return q == Quadrant::EnergeticPositive || q == Quadrant::CalmPositive;
}

bool is_energetic(Quadrant q) {
  return q == Quadrant::EnergeticPositive || q == Quadrant::EnergeticNegative;
}

std::string quadrant_name(Quadrant q) {
  switch (q) {
    case Quadrant::EnergeticPositive: return "energetic_positive";
    case Quadrant::CalmPositive: return "calm_positive";
    case Quadrant::EnergeticNegative: return "energetic_negative";
    case Quadrant::CalmNegative: return "calm_negative";
  }
  return "unknown";
}

std::optional<Quadrant> parse_quadrant(const std::string& name) {
  if (name == "energetic_positive") return Quadrant::EnergeticPositive;
  if (name == "calm_positive") return Quadrant::CalmPositive;
  if (name == "energetic_negative") return Quadrant::EnergeticNegative;
  if (name == "calm_negative") return Quadrant::CalmNegative;
  return std::nullopt;
}

std::string task_name(Task t) { return t == Task::WM ? "WM" : "EM"; }

std::optional<Task> parse_task(const std::string& name) {
  if (name == "WM") return Task::WM;
  if (name == "EM") return Task::EM;
  return std::nullopt;
}

ChannelSite site_of_channel(std::size_t index) {
  if (index >= kNumChannels) {
    throw std::out_of_range("channel index out of range: " + std::to_string(index));
  }
  return static_cast<ChannelSite>(index);
}

std::size_t channel_of_site(ChannelSite site) { return static_cast<std::size_t>(site); }

std::string site_name(ChannelSite site) {
  switch (site) {
    case ChannelSite::EyeLeft: return "eye_left";
    case ChannelSite::EyeRight: return "eye_right";
    case ChannelSite::MouthLeft: return "mouth_left";
    case ChannelSite::MouthRight: return "mouth_right";
    case ChannelSite::BrowLeft: return "brow_left";
    case ChannelSite::BrowRight: return "brow_right";
    case ChannelSite::CorrugatorLeft: return "corrugator_left";
    case ChannelSite::CorrugatorRight: return "corrugator_right";
  }
  return "unknown";
}

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  throw SchemaError(where.empty() ? what : where + ": " + what);
}

}  // namespace

void validate_segment(const EmgSegment& segment, const std::string& where) {
  if (segment.sample_rate_hz <= 0) {
    schema_fail(where, "sample_rate_hz must be positive, got " +
                           std::to_string(segment.sample_rate_hz));
  }
  const std::size_t expected = segment.samples_per_channel();
  for (std::size_t c = 0; c < kNumChannels; ++c) {
    const auto& ch = segment.channels[c];
    if (ch.size() != expected) {
      schema_fail(where, "channel " + std::to_string(c) + " has " +
                             std::to_string(ch.size()) + " samples, expected " +
                             std::to_string(expected) + " (" +
                             std::to_string(segment.sample_rate_hz) + " Hz x " +
                             std::to_string(kWindowSeconds) + " s)");
    }
    for (double v : ch) {
      if (!std::isfinite(v)) {
        schema_fail(where, "non-finite sample in channel " + std::to_string(c));
      }
    }
  }
  if (segment.label) {
    const auto& l = *segment.label;
    if (!(std::isfinite(l.valence) && l.valence >= -1.0 && l.valence <= 1.0)) {
      schema_fail(where, "valence out of [-1, 1]");
    }
    if (!(std::isfinite(l.arousal) && l.arousal >= -1.0 && l.arousal <= 1.0)) {
      schema_fail(where, "arousal out of [-1, 1]");
    }
  }
}

void validate_session(const SessionLog& session, const std::string& where) {
  const std::size_t n = session.segments.size();
  if (session.difficulty_track.size() != n) {
    schema_fail(where, "difficulty_track has " +
                           std::to_string(session.difficulty_track.size()) +
                           " entries for " + std::to_string(n) + " windows");
  }
  if (session.score_events.size() != n) {
    schema_fail(where, "score_events has " + std::to_string(session.score_events.size()) +
                           " entries for " + std::to_string(n) + " windows");
  }
  for (int d : session.difficulty_track) {
    if (d < kMinDifficulty || d > kMaxDifficulty) {
      schema_fail(where, "difficulty " + std::to_string(d) + " outside [1, 10]");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& seg = session.segments[i];
    if (seg.window_index != i) {
      schema_fail(where, "window_index " + std::to_string(seg.window_index) +
                             " at position " + std::to_string(i) +
                             "; indices must be contiguous from 0");
    }
    if (seg.participant_id != session.participant_id ||
        seg.session_id != session.session_id) {
      schema_fail(where, "segment " + std::to_string(i) + " ids do not match session");
    }
    if (seg.sample_rate_hz != session.sample_rate_hz) {
      schema_fail(where, "segment " + std::to_string(i) + " sample rate differs from header");
    }
    validate_segment(seg, where);
  }
}

std::vector<SummaryRow> dataset_summary(const std::vector<SessionLog>& sessions) {
  std::map<std::string, SummaryRow> rows;
  for (const auto& session : sessions) {
    auto& row = rows[session.participant_id];
    row.participant_id = session.participant_id;
    for (const auto& seg : session.segments) {
      if (!seg.label) {
        ++row.unlabeled;
        continue;
      }
      try {
        const Quadrant q = truncate_label(*seg.label);
        ++row.quadrant_counts[static_cast<std::size_t>(q)];
      } catch (const AmbiguousLabel&) {
        ++row.ambiguous;
      }
    }
  }
  std::vector<SummaryRow> out;
  out.reserve(rows.size());
  for (auto& [id, row] : rows) out.push_back(std::move(row));
  return out;
}

}  // namespace emgloop
