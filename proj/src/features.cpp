#include "emgloop/features.hpp"

#include <cmath>
#include <ostream>

namespace emgloop {

namespace {

constexpr double kLogEpsilon = 1e-12;  // guards ln(0) on all-zero windows

double mmav_weight1(std::size_t pos, std::size_t n) {
  const double i = static_cast<double>(pos);  // 1-based position
  const double N = static_cast<double>(n);
  return (i >= 0.25 * N && i <= 0.75 * N) ? 1.0 : 0.5;
}

double mmav_weight2(std::size_t pos, std::size_t n) {
  const double i = static_cast<double>(pos);
  const double N = static_cast<double>(n);
  if (i < 0.25 * N) return 4.0 * i / N;
  if (i > 0.75 * N) return 4.0 * (N - i) / N;
  return 1.0;
}

bool sign_change(double a, double b) { return (a > 0.0 && b < 0.0) || (a < 0.0 && b > 0.0); }

}  // namespace

std::string feature_kind_name(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::Iemg: return "iemg";
    case FeatureKind::Mav: return "mav";
    case FeatureKind::Mmav1: return "mmav1";
    case FeatureKind::Mmav2: return "mmav2";
    case FeatureKind::Rms: return "rms";
    case FeatureKind::Var: return "var";
    case FeatureKind::Sd: return "sd";
    case FeatureKind::Wl: return "wl";
    case FeatureKind::Zc: return "zc";
    case FeatureKind::Ssc: return "ssc";
    case FeatureKind::Wamp: return "wamp";
    case FeatureKind::Log: return "log";
    case FeatureKind::Dasdv: return "dasdv";
    case FeatureKind::Myop: return "myop";
  }
  return "unknown";
}

std::string FeatureId::name() const {
  return site_name(site_of_channel(channel)) + "_" + feature_kind_name(kind);
}

FeatureId FeatureId::from_index(std::size_t index) {
  if (index >= kNumFeatures) {
    throw std::out_of_range("feature index out of range: " + std::to_string(index));
  }
  return FeatureId{index / kNumFeatureKinds,
                   static_cast<FeatureKind>(index % kNumFeatureKinds)};
}

const std::array<FeatureId, kNumFeatures>& all_feature_ids() {
  static const auto ids = [] {
    std::array<FeatureId, kNumFeatures> out{};
    for (std::size_t i = 0; i < kNumFeatures; ++i) out[i] = FeatureId::from_index(i);
    return out;
  }();
  return ids;
}

std::array<double, kNumFeatureKinds> extract_channel_features(std::span<const double> signal,
                                                              const ThresholdConfig& thresholds) {
  const std::size_t n = signal.size();
  if (n < 3) {
    throw SignalTooShort("feature extraction needs at least 3 samples, got " +
                         std::to_string(n));
  }
  const double N = static_cast<double>(n);

  double abs_sum = 0.0, mmav1_sum = 0.0, mmav2_sum = 0.0;
  double sq_sum = 0.0, sum = 0.0, log_sum = 0.0;
  std::size_t myop_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = signal[i];
    const double a = std::abs(v);
    abs_sum += a;
    mmav1_sum += mmav_weight1(i + 1, n) * a;
    mmav2_sum += mmav_weight2(i + 1, n) * a;
    sq_sum += v * v;
    sum += v;
    log_sum += std::log(a + kLogEpsilon);
    if (a >= thresholds.myop) ++myop_count;
  }
  const double mean = sum / N;
  double dev_sq_sum = 0.0;
  for (double v : signal) dev_sq_sum += (v - mean) * (v - mean);

  double wl = 0.0, diff_sq_sum = 0.0;
  std::size_t zc = 0, wamp = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = signal[i + 1] - signal[i];
    const double ad = std::abs(d);
    wl += ad;
    diff_sq_sum += d * d;
    if (ad >= thresholds.wamp) ++wamp;
    if (ad >= thresholds.zc && sign_change(signal[i], signal[i + 1])) ++zc;
  }

  std::size_t ssc = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double dp = signal[i] - signal[i - 1];
    const double dn = signal[i] - signal[i + 1];
    if (dp * dn > 0.0 && std::max(std::abs(dp), std::abs(dn)) >= thresholds.ssc) ++ssc;
  }

  std::array<double, kNumFeatureKinds> out{};
  out[static_cast<std::size_t>(FeatureKind::Iemg)] = abs_sum;
  out[static_cast<std::size_t>(FeatureKind::Mav)] = abs_sum / N;
  out[static_cast<std::size_t>(FeatureKind::Mmav1)] = mmav1_sum / N;
  out[static_cast<std::size_t>(FeatureKind::Mmav2)] = mmav2_sum / N;
  out[static_cast<std::size_t>(FeatureKind::Rms)] = std::sqrt(sq_sum / N);
  out[static_cast<std::size_t>(FeatureKind::Var)] = sq_sum / (N - 1.0);
  out[static_cast<std::size_t>(FeatureKind::Sd)] = std::sqrt(dev_sq_sum / (N - 1.0));
  out[static_cast<std::size_t>(FeatureKind::Wl)] = wl;
  out[static_cast<std::size_t>(FeatureKind::Zc)] = static_cast<double>(zc);
  out[static_cast<std::size_t>(FeatureKind::Ssc)] = static_cast<double>(ssc);
  out[static_cast<std::size_t>(FeatureKind::Wamp)] = static_cast<double>(wamp);
  out[static_cast<std::size_t>(FeatureKind::Log)] = std::exp(log_sum / N);
  out[static_cast<std::size_t>(FeatureKind::Dasdv)] = std::sqrt(diff_sq_sum / (N - 1.0));
  out[static_cast<std::size_t>(FeatureKind::Myop)] = static_cast<double>(myop_count) / N;
  return out;
}

FeatureVector extract_feature_vector(const EmgSegment& segment, const BaselineProfile& baseline,
                                     const FeatureExtractionConfig& config) {
  const EmgSegment normalized = normalize(segment, baseline, config.normalization);

  FeatureVector vec;
  vec.participant_id = segment.participant_id;
  vec.window_index = segment.window_index;
  if (segment.label) {
    try {
      vec.label = truncate_label(*segment.label);
    } catch (const AmbiguousLabel&) {
      // axis-exact label: leave the vector unlabeled
    }
  }
  for (std::size_t c = 0; c < kNumChannels; ++c) {
    std::array<double, kNumFeatureKinds> feats{};
    if (config.use_dwt) {
      const std::vector<double> approx = dwt_haar_approx(normalized.channels[c], config.dwt);
      feats = extract_channel_features(approx, config.thresholds);
    } else {
      feats = extract_channel_features(normalized.channels[c], config.thresholds);
    }
    for (std::size_t k = 0; k < kNumFeatureKinds; ++k) {
      vec.values[c * kNumFeatureKinds + k] = feats[k];
    }
  }
  return vec;
}

void write_features_csv(std::ostream& out, const std::vector<FeatureVector>& vectors) {
  out << "participant_id,window_index,quadrant";
  for (const FeatureId& id : all_feature_ids()) out << ',' << id.name();
  out << '\n';
  out.precision(17);
  for (const FeatureVector& vec : vectors) {
    out << vec.participant_id << ',' << vec.window_index << ','
        << (vec.label ? quadrant_name(*vec.label) : "");
    for (double v : vec.values) out << ',' << v;
    out << '\n';
  }
}

}  // namespace emgloop
