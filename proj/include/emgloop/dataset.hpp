#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace emgloop {

// Window length is a single global constant: every EMG segment, baseline
// read and difficulty-adjustment tick covers exactly this many seconds.
inline constexpr int kWindowSeconds = 45;
inline constexpr std::size_t kNumChannels = 8;
inline constexpr int kDefaultSampleRateHz = 1000;
inline constexpr int kMinDifficulty = 1;
inline constexpr int kMaxDifficulty = 10;

enum class Task { WM, EM };

// Sign quadrants of the (valence, arousal) plane. The declaration order is
// the canonical order used for deterministic tie-breaking everywhere.
enum class Quadrant {
  EnergeticPositive,  // +valence, +arousal
  CalmPositive,       // +valence, -arousal
  EnergeticNegative,  // -valence, +arousal
  CalmNegative,       // -valence, -arousal
};
inline constexpr std::size_t kNumQuadrants = 4;

// Modeling convention for the 8-electrode facial layout; the physical site
// map of the sensing insert is not published.
enum class ChannelSite {
  EyeLeft,
  EyeRight,
  MouthLeft,
  MouthRight,
  BrowLeft,
  BrowRight,
  CorrugatorLeft,
  CorrugatorRight,
};

struct AffectLabel {
  double valence{0.0};  // in [-1, +1]
  double arousal{0.0};  // in [-1, +1]

  bool operator==(const AffectLabel&) const = default;
};

// One 45 s, 8-channel raw EMG window. Value object; validate() checks the
// structural invariants after construction or deserialization.
struct EmgSegment {
  std::string participant_id;
  std::string session_id;
  Task task{Task::WM};
  std::size_t window_index{0};
  int sample_rate_hz{kDefaultSampleRateHz};
  std::array<std::vector<double>, kNumChannels> channels;
  std::optional<AffectLabel> label;

  std::size_t samples_per_channel() const {
    return static_cast<std::size_t>(sample_rate_hz) * kWindowSeconds;
  }

  bool operator==(const EmgSegment&) const = default;
};

enum class ScoreEvent { Correct, Incorrect };

// An ordered recording session: segments with contiguous window indices,
// the difficulty each window was played at, and the per-window score events.
struct SessionLog {
  std::string participant_id;
  std::string session_id;
  Task task{Task::WM};
  int sample_rate_hz{kDefaultSampleRateHz};
  std::vector<int> difficulty_track;              // one entry per window
  std::vector<EmgSegment> segments;               // ordered by window_index
  std::vector<std::vector<ScoreEvent>> score_events;  // one list per window

  std::size_t window_count() const { return segments.size(); }

  bool operator==(const SessionLog&) const = default;
};

struct AmbiguousLabel : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sign-quadrant truncation of a continuous label. Labels sitting exactly on
// an axis are rejected: the boundary has no stated convention and silently
// assigning a side would bias class counts.
Quadrant truncate_label(const AffectLabel& label);

bool is_positive_valence(Quadrant q);
bool is_energetic(Quadrant q);

std::string quadrant_name(Quadrant q);
std::optional<Quadrant> parse_quadrant(const std::string& name);

std::string task_name(Task t);
std::optional<Task> parse_task(const std::string& name);

ChannelSite site_of_channel(std::size_t index);
std::size_t channel_of_site(ChannelSite site);
std::string site_name(ChannelSite site);

// Throw SchemaError if a structural invariant is violated. `where` is
// prepended to messages to identify the offending record.
void validate_segment(const EmgSegment& segment, const std::string& where = {});
void validate_session(const SessionLog& session, const std::string& where = {});

// Per-participant class balance.
struct SummaryRow {
  std::string participant_id;
  std::array<std::size_t, kNumQuadrants> quadrant_counts{};
  std::size_t ambiguous{0};
  std::size_t unlabeled{0};
};

// Counts label quadrants per participant; axis-exact labels count as
// ambiguous, missing labels as unlabeled. Rows sorted by participant id.
std::vector<SummaryRow> dataset_summary(const std::vector<SessionLog>& sessions);

}  // namespace emgloop
