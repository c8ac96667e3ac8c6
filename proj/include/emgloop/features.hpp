#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "emgloop/dataset.hpp"
#include "emgloop/dsp.hpp"

namespace emgloop {

// The 14 temporal features computed per channel. With x_1..x_N the samples
// (positions 1-based where a weight window is involved):
//
//   IEMG   sum |x_i|
//   MAV    IEMG / N
//   MMAV1  (1/N) sum w_i |x_i|,  w_i = 1 for 0.25N <= i <= 0.75N, else 0.5
//   MMAV2  (1/N) sum w_i |x_i|,  w_i = 4i/N below the middle half,
//          1 inside it, 4(N-i)/N above it
//   RMS    sqrt(sum x_i^2 / N)
//   VAR    sum x_i^2 / (N-1)          (second moment about zero)
//   SD     sqrt(sum (x_i - mean)^2 / (N-1))
//   WL     sum |x_{i+1} - x_i|
//   ZC     count of sign changes with |x_{i+1} - x_i| >= zc threshold
//   SSC    count of interior i with (x_i - x_{i-1})(x_i - x_{i+1}) > 0 and
//          max(|x_i - x_{i-1}|, |x_i - x_{i+1}|) >= ssc threshold
//   WAMP   count of |x_{i+1} - x_i| >= wamp threshold
//   LOG    exp((1/N) sum ln(|x_i| + 1e-12))
//   DASDV  sqrt(sum (x_{i+1} - x_i)^2 / (N-1))
//   MYOP   (1/N) count of |x_i| >= myop threshold
enum class FeatureKind {
  Iemg,
  Mav,
  Mmav1,
  Mmav2,
  Rms,
  Var,
  Sd,
  Wl,
  Zc,
  Ssc,
  Wamp,
  Log,
  Dasdv,
  Myop,
};

inline constexpr std::size_t kNumFeatureKinds = 14;
inline constexpr std::size_t kNumFeatures = kNumChannels * kNumFeatureKinds;  // 112

std::string feature_kind_name(FeatureKind kind);

// Identifies one of the 112 features. Canonical ordering is channel-major,
// kind-minor; index() is the position in that ordering.
struct FeatureId {
  std::size_t channel{0};
  FeatureKind kind{FeatureKind::Iemg};

  std::size_t index() const { return channel * kNumFeatureKinds + static_cast<std::size_t>(kind); }
  std::string name() const;  // e.g. "mouth_right_mmav1"
  static FeatureId from_index(std::size_t index);

  bool operator==(const FeatureId&) const = default;
};

const std::array<FeatureId, kNumFeatures>& all_feature_ids();

// Amplitude gates for the count-type features, in post-normalization signal
// units. Values follow common surface-EMG practice.
struct ThresholdConfig {
  double zc{0.01};
  double ssc{0.01};
  double wamp{0.01};
  double myop{0.016};
};

struct FeatureVector {
  std::array<double, kNumFeatures> values{};
  std::string participant_id;
  std::size_t window_index{0};
  std::optional<Quadrant> label;
};

// How a raw segment turns into features: normalize against the session
// baseline, optionally take the DWT approximation, then compute the 14
// features per channel.
struct FeatureExtractionConfig {
  NormalizationMode normalization{NormalizationMode::SubtractMean};
  bool use_dwt{true};
  DwtConfig dwt{};
  ThresholdConfig thresholds{};
};

// The 14 features of one signal, in FeatureKind order. Throws SignalTooShort
// for fewer than 3 samples.
std::array<double, kNumFeatureKinds> extract_channel_features(std::span<const double> signal,
                                                              const ThresholdConfig& thresholds);

// Full 112-dim vector for one segment. Ambiguous labels (either component
// exactly 0) are dropped rather than assigned a quadrant, so such segments
// stay out of training.
FeatureVector extract_feature_vector(const EmgSegment& segment, const BaselineProfile& baseline,
                                     const FeatureExtractionConfig& config);

// CSV with the 112 canonical feature names plus participant_id, window_index
// and quadrant columns (quadrant empty for unlabeled rows).
void write_features_csv(std::ostream& out, const std::vector<FeatureVector>& vectors);

}  // namespace emgloop
