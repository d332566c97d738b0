#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tile360/common.hpp"
#include "tile360/geometry.hpp"

namespace tile360 {

struct TraceSample {
  std::int64_t frame_index = 0;
  double time_s = 0.0;
  double yaw_deg = 0.0;
  double pitch_deg = 0.0;
};

struct Trace {
  std::vector<TraceSample> samples;
  double fps = 30.0;
  std::string video_id;
};

struct GopStructure {
  int gop_size_frames = 32;
  std::int64_t total_frames = 0;

  int gop_count() const {
    return static_cast<int>((total_frames + gop_size_frames - 1) /
                            gop_size_frames);
  }
};

// Per-GOP tile navigation likelihoods p(i|v). frames_covered == 0 marks a
// GOP the trace never reached; its likelihoods then hold the fallback
// distribution (previous GOP carried forward, uniform for a leading gap).
struct HeatMap {
  int gop_index = 0;
  std::vector<double> likelihoods;
  std::int64_t frames_covered = 0;

  bool empty() const { return frames_covered == 0; }
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line,
                                                  char sep = ',') {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

inline double parse_double_field(std::string_view field, int line_no,
                                 const char* what) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what +
                     " value '" + std::string(field) + "'");
  }
  return value;
}

inline std::int64_t parse_int_field(std::string_view field, int line_no,
                                    const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what +
                     " value '" + std::string(field) + "'");
  }
  return value;
}

// Splits on LF, tolerating CRLF and a missing final newline.
inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find('\n', start);
    if (pos == std::string_view::npos) pos = text.size();
    std::string_view line = text.substr(start, pos - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (pos == text.size()) break;
    start = pos + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace detail

inline constexpr std::string_view kTraceCsvHeader =
    "frame,time_s,yaw_deg,pitch_deg";

// Parses the trace CSV format. Header must match kTraceCsvHeader exactly;
// frame indices must be strictly increasing and times non-decreasing.
inline Trace parse_trace(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0] != kTraceCsvHeader) {
    throw ParseError("line 1: expected trace header '" +
                     std::string(kTraceCsvHeader) + "'");
  }

  Trace trace;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li + 1);
    if (lines[li].empty()) continue;
    const auto fields = detail::split_fields(lines[li]);
    if (fields.size() != 4) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 4 fields, got " +
                       std::to_string(fields.size()));
    }
    TraceSample sample;
    sample.frame_index = detail::parse_int_field(fields[0], line_no, "frame");
    sample.time_s = detail::parse_double_field(fields[1], line_no, "time_s");
    sample.yaw_deg = detail::parse_double_field(fields[2], line_no, "yaw_deg");
    sample.pitch_deg =
        detail::parse_double_field(fields[3], line_no, "pitch_deg");
    if (sample.frame_index < 0) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": negative frame index");
    }
    if (!trace.samples.empty()) {
      const TraceSample& prev = trace.samples.back();
      if (sample.frame_index <= prev.frame_index) {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": frame indices must be strictly increasing");
      }
      if (sample.time_s < prev.time_s) {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": time_s must be non-decreasing");
      }
    }
    trace.samples.push_back(sample);
  }
  if (trace.samples.empty()) {
    throw ValidationError("trace contains no samples");
  }
  return trace;
}

// One footprint per trace sample, in sample order.
inline std::vector<FootprintWeights> frame_weights(const Trace& trace,
                                                   const ViewportSpec& spec,
                                                   const TileGrid& grid) {
  std::vector<FootprintWeights> out;
  out.reserve(trace.samples.size());
  for (const TraceSample& s : trace.samples) {
    out.push_back(viewport_footprint(yaw_pitch_to_sphere(s.yaw_deg, s.pitch_deg),
                                     spec, grid));
  }
  return out;
}

namespace detail {

inline void renormalize(std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  if (sum > 0.0) {
    for (double& x : v) x /= sum;
  }
}

}  // namespace detail

// Per-GOP likelihoods: the arithmetic mean of the per-frame normalized
// weight vectors inside each GOP, renormalized. Entry j of `frames` is
// taken as frame index j. GOPs past the end of the trace are flagged
// empty and filled with the previous GOP's map (uniform when there is no
// previous one) so downstream allocation stays total.
inline std::vector<HeatMap> gop_likelihoods(
    const std::vector<FootprintWeights>& frames, const GopStructure& gop) {
  if (frames.empty()) {
    throw ValidationError("gop_likelihoods: no frame weights");
  }
  if (gop.gop_size_frames < 1) {
    throw ValidationError("gop_size_frames must be >= 1");
  }
  const std::size_t n_tiles = frames[0].weights.size();
  const int n_gops = gop.gop_count();
  if (n_gops < 1) {
    throw ValidationError("gop structure covers no frames");
  }

  std::vector<HeatMap> maps(n_gops);
  const std::int64_t limit =
      std::min<std::int64_t>(static_cast<std::int64_t>(frames.size()),
                             gop.total_frames);
  for (int g = 0; g < n_gops; ++g) {
    maps[g].gop_index = g;
    maps[g].likelihoods.assign(n_tiles, 0.0);
  }
  for (std::int64_t f = 0; f < limit; ++f) {
    const int g = static_cast<int>(f / gop.gop_size_frames);
    if (frames[f].weights.size() != n_tiles) {
      throw ValidationError("frame weight vectors have mismatched sizes");
    }
    for (std::size_t k = 0; k < n_tiles; ++k) {
      maps[g].likelihoods[k] += frames[f].weights[k];
    }
    ++maps[g].frames_covered;
  }
  for (int g = 0; g < n_gops; ++g) {
    if (maps[g].frames_covered > 0) {
      detail::renormalize(maps[g].likelihoods);
    } else if (g > 0) {
      maps[g].likelihoods = maps[g - 1].likelihoods;
    } else {
      maps[g].likelihoods.assign(n_tiles, 1.0 / static_cast<double>(n_tiles));
    }
  }
  return maps;
}

// Elementwise mean across traces per GOP, renormalized. All sequences must
// have the same GOP count and tile count.
inline std::vector<HeatMap> aggregate_traces(
    const std::vector<std::vector<HeatMap>>& maps_per_trace) {
  if (maps_per_trace.empty()) {
    throw ValidationError("aggregate_traces: no traces");
  }
  const std::size_t n_gops = maps_per_trace[0].size();
  if (n_gops == 0) {
    throw ValidationError("aggregate_traces: empty heat-map sequence");
  }
  const std::size_t n_tiles = maps_per_trace[0][0].likelihoods.size();
  for (const auto& seq : maps_per_trace) {
    if (seq.size() != n_gops) {
      throw ValidationError("aggregate_traces: mismatched GOP counts");
    }
    for (const auto& m : seq) {
      if (m.likelihoods.size() != n_tiles) {
        throw ValidationError("aggregate_traces: mismatched tile counts");
      }
    }
  }

  std::vector<HeatMap> out(n_gops);
  for (std::size_t g = 0; g < n_gops; ++g) {
    out[g].gop_index = static_cast<int>(g);
    out[g].likelihoods.assign(n_tiles, 0.0);
    for (const auto& seq : maps_per_trace) {
      for (std::size_t k = 0; k < n_tiles; ++k) {
        out[g].likelihoods[k] += seq[g].likelihoods[k];
      }
      out[g].frames_covered += seq[g].frames_covered;
    }
    detail::renormalize(out[g].likelihoods);
  }
  return out;
}

// Mean over all GOPs; the whole-video summary used for reporting.
inline HeatMap video_average_heatmap(const std::vector<HeatMap>& maps) {
  if (maps.empty()) {
    throw ValidationError("video_average_heatmap: no heat maps");
  }
  HeatMap out;
  out.gop_index = 0;
  out.likelihoods.assign(maps[0].likelihoods.size(), 0.0);
  for (const HeatMap& m : maps) {
    if (m.likelihoods.size() != out.likelihoods.size()) {
      throw ValidationError("video_average_heatmap: mismatched tile counts");
    }
    for (std::size_t k = 0; k < out.likelihoods.size(); ++k) {
      out.likelihoods[k] += m.likelihoods[k];
    }
    out.frames_covered += m.frames_covered;
  }
  detail::renormalize(out.likelihoods);
  return out;
}

}  // namespace tile360
