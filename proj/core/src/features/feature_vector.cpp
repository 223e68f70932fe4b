// Copyright 2026 The qknn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qknn/features/feature_vector.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "qknn/error.hpp"

namespace qknn::features {

RawFeatures extract_raw(const RgbImage& image) {
  if (image.empty()) throw Error("cannot extract features from an empty image");
  return RawFeatures{color_histogram(image), raw_texture_vector(image)};
}

FeatureVector finalize(const RawFeatures& raw, const TextureBounds& bounds, std::string source_id,
                       std::optional<std::string> label) {
  FeatureVector fv;
  fv.source_id = std::move(source_id);
  fv.label = std::move(label);
  const TextureVector t = normalize_texture(raw.texture, bounds);
  std::copy(raw.color.begin(), raw.color.end(), fv.components.begin());
  std::copy(t.begin(), t.end(), fv.components.begin() + kColorBins);
  double n2 = 0.0;
  for (double v : fv.components) n2 += v * v;
  const double inv = 1.0 / std::sqrt(n2);  // the color part alone sums to 1, so n2 > 0
  for (double& v : fv.components) v *= inv;
  return fv;
}

FeatureVector extract_features(const RgbImage& image, const TextureBounds& bounds, std::string source_id,
                               std::optional<std::string> label) {
  return finalize(extract_raw(image), bounds, std::move(source_id), std::move(label));
}

FeatureVector extract_features(const std::filesystem::path& path, const TextureBounds& bounds,
                               std::optional<std::string> label) {
  RgbImage img;
  try {
    img = read_image(path);
  } catch (const Error& e) {
    throw StageError("decode " + path.string(), e.what());
  }
  return extract_features(img, bounds, path.string(), std::move(label));
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

double parse_double(const std::string& s, std::size_t line_no) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw Error("feature CSV line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

void write_feature_csv(std::ostream& os, std::span<const FeatureVector> rows) {
  os << "source_id,label";
  for (std::size_t i = 1; i <= kFeatureDimension; ++i) os << ",v" << i;
  os << '\n';
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& r : rows) {
    os << csv_field(r.source_id) << ',' << csv_field(r.label.value_or(""));
    for (double v : r.components) os << ',' << v;
    os << '\n';
  }
}

std::vector<FeatureVector> read_feature_csv(std::istream& is) {
  std::vector<FeatureVector> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (fields.size() >= 1 && fields[0] == "source_id") continue;
    if (fields.size() != kFeatureDimension + 2) {
      throw Error("feature CSV line " + std::to_string(line_no) + ": expected " +
                  std::to_string(kFeatureDimension + 2) + " fields, got " + std::to_string(fields.size()));
    }
    FeatureVector fv;
    fv.source_id = fields[0];
    if (!fields[1].empty()) fv.label = fields[1];
    for (std::size_t i = 0; i < kFeatureDimension; ++i) fv.components[i] = parse_double(fields[i + 2], line_no);
    out.push_back(std::move(fv));
  }
  return out;
}

void write_bounds(std::ostream& os, const TextureBounds& bounds) {
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t k = 0; k < kTextureComponents; ++k) {
    os << "texture_min_" << k + 1 << " = " << bounds.min[k] << '\n';
    os << "texture_max_" << k + 1 << " = " << bounds.max[k] << '\n';
  }
}

TextureBounds read_bounds(std::istream& is) {
  std::map<std::string, double> kv;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = parse_double(trim(line.substr(eq + 1)), line_no);
  }
  TextureBounds b;
  for (std::size_t k = 0; k < kTextureComponents; ++k) {
    const auto lo = kv.find("texture_min_" + std::to_string(k + 1));
    const auto hi = kv.find("texture_max_" + std::to_string(k + 1));
    if (lo == kv.end() || hi == kv.end()) {
      throw Error("bounds file is missing texture component " + std::to_string(k + 1));
    }
    b.min[k] = lo->second;
    b.max[k] = hi->second;
  }
  return b;
}

}  // namespace qknn::features
