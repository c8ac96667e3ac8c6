#pragma once

#include <filesystem>
#include <vector>

#include "emgloop/dataset.hpp"

namespace emgloop {

// JSON-lines session file. Each session starts with a header record and is
// followed by one record per 45 s window, in window order:
//
//   {"kind":"header","participant_id":"p03","session_id":"p03_s0","task":"WM",
//    "sample_rate_hz":128,"difficulty_track":[1,2,2,...]}
//   {"kind":"segment","window_index":0,"channels":[[...] x8],
//    "valence":0.42,"arousal":-0.1,"score_events":["correct","incorrect",...]}
//
// valence/arousal are null (both) for unlabeled windows. UTF-8, LF endings.
// A file may hold several sessions back to back; each header starts a new one.
//
// Throws ParseError for malformed lines (message carries the line number) and
// SchemaError for records that violate the data-model invariants.
std::vector<SessionLog> load_sessions(const std::filesystem::path& path);

void save_sessions(const std::filesystem::path& path,
                   const std::vector<SessionLog>& sessions);

// Loads every *.jsonl file under `path` (sorted by filename), or a single
// file if `path` is one.
std::vector<SessionLog> load_corpus(const std::filesystem::path& path);

}  // namespace emgloop
