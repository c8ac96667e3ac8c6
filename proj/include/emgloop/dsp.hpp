#pragma once

#include <array>
#include <span>
#include <vector>

#include "emgloop/dataset.hpp"

namespace emgloop {

enum class Wavelet { Haar };

struct DwtConfig {
  Wavelet wavelet{Wavelet::Haar};
  int level{4};  // decomposition depth, valid range [1, 8]
};

enum class NormalizationMode { SubtractMean, ZScore };

// Resting-level statistics of one session, read from its first 45 s window.
struct BaselineProfile {
  std::array<double, kNumChannels> mean{};
  std::array<double, kNumChannels> sd{};  // population standard deviation
  std::size_t source_window_index{0};
};

struct WrongWindow : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroVariance : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SignalTooShort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-channel mean and population standard deviation over the whole first
// window of a session. Throws WrongWindow unless window_index == 0.
BaselineProfile compute_baseline(const EmgSegment& first_segment);

// SubtractMean: x' = x - mean_c. ZScore: x' = (x - mean_c) / sd_c, throwing
// ZeroVariance when any channel's baseline sd is 0. The baseline must come
// from the same participant and session as the segment.
EmgSegment normalize(const EmgSegment& segment, const BaselineProfile& baseline,
                     NormalizationMode mode);

struct HaarBands {
  std::vector<double> approx;
  std::vector<double> detail;
};

// One Haar analysis step: pairs (x_{2k}, x_{2k+1}) map to approximation
// (x_{2k}+x_{2k+1})/sqrt(2) and detail (x_{2k}-x_{2k+1})/sqrt(2). Odd-length
// input is first extended by repeating its final sample. Throws
// SignalTooShort for fewer than 2 samples.
HaarBands dwt_haar_step(std::span<const double> band);

// Level-L approximation coefficients: the analysis step applied recursively
// to the approximation band. Output length is ceil(n / 2^level).
std::vector<double> dwt_haar_approx(std::span<const double> signal, const DwtConfig& config);

}  // namespace emgloop
