#include "emgloop/dsp.hpp"

#include <cmath>

namespace emgloop {

BaselineProfile compute_baseline(const EmgSegment& first_segment) {
  if (first_segment.window_index != 0) {
    throw WrongWindow("baseline must be read from window 0, got window " +
                      std::to_string(first_segment.window_index));
  }
  BaselineProfile profile;
  profile.source_window_index = 0;
  for (std::size_t c = 0; c < kNumChannels; ++c) {
    const auto& ch = first_segment.channels[c];
    const double n = static_cast<double>(ch.size());
    double sum = 0.0;
    for (double v : ch) sum += v;
    const double mean = n > 0.0 ? sum / n : 0.0;
    double sq = 0.0;
    for (double v : ch) sq += (v - mean) * (v - mean);
    profile.mean[c] = mean;
    profile.sd[c] = n > 0.0 ? std::sqrt(sq / n) : 0.0;
  }
  return profile;
}

EmgSegment normalize(const EmgSegment& segment, const BaselineProfile& baseline,
                     NormalizationMode mode) {
  if (mode == NormalizationMode::ZScore) {
    for (std::size_t c = 0; c < kNumChannels; ++c) {
      if (baseline.sd[c] == 0.0) {
        throw ZeroVariance("baseline sd is zero for channel " + std::to_string(c) +
                           "; z-score normalization undefined");
      }
    }
  }
  EmgSegment out = segment;
  for (std::size_t c = 0; c < kNumChannels; ++c) {
    const double mean = baseline.mean[c];
    const double inv_sd = mode == NormalizationMode::ZScore ? 1.0 / baseline.sd[c] : 1.0;
    for (double& v : out.channels[c]) v = (v - mean) * inv_sd;
  }
  return out;
}

HaarBands dwt_haar_step(std::span<const double> band) {
  if (band.size() < 2) {
    throw SignalTooShort("Haar step needs at least 2 samples, got " +
                         std::to_string(band.size()));
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const std::size_t pairs = (band.size() + 1) / 2;
  HaarBands bands;
  bands.approx.resize(pairs);
  bands.detail.resize(pairs);
  for (std::size_t k = 0; k < pairs; ++k) {
    const double a = band[2 * k];
    // odd-length band: repeat the final sample
    const double b = (2 * k + 1 < band.size()) ? band[2 * k + 1] : band.back();
    bands.approx[k] = (a + b) * inv_sqrt2;
    bands.detail[k] = (a - b) * inv_sqrt2;
  }
  return bands;
}

std::vector<double> dwt_haar_approx(std::span<const double> signal, const DwtConfig& config) {
  if (config.level < 1 || config.level > 8) {
    throw std::invalid_argument("DWT level must be in [1, 8], got " +
                                std::to_string(config.level));
  }
  std::vector<double> band(signal.begin(), signal.end());
  for (int l = 0; l < config.level; ++l) {
    if (band.size() < 2) {
      throw SignalTooShort("signal of length " + std::to_string(signal.size()) +
                           " too short for level " + std::to_string(config.level) +
                           " decomposition");
    }
    band = dwt_haar_step(band).approx;
  }
  return band;
}

}  // namespace emgloop
