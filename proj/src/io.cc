/*
 * Copyright 2026 The sampest Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sampest/io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <string_view>

namespace sampest {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::int64_t ParseInt(std::string_view field, int line, const char* what) {
  std::int64_t value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("malformed ") + what + " '" +
                               std::string(field) + "'");
  }
  return value;
}

double ParseReal(std::string_view field, int line, const char* what) {
  const std::string copy(field);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size() ||
      !std::isfinite(value)) {
    throw ParseError(line, std::string("malformed ") + what + " '" + copy +
                               "'");
  }
  return value;
}

// Reads lines, checks the header and hands each data row (with its 1-based
// line number) to `row`.
template <typename RowFn>
void ReadCsv(std::istream& in, std::string_view header, RowFn&& row) {
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) {
    throw ParseError(1, "missing header '" + std::string(header) + "'");
  }
  ++line_no;
  if (Trim(line) != header) {
    throw ParseError(1, "expected header '" + std::string(header) +
                            "', got '" + std::string(Trim(line)) + "'");
  }
  const std::size_t columns = SplitFields(header).size();
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != columns) {
      throw ParseError(line_no, "expected " + std::to_string(columns) +
                                    " fields, got " +
                                    std::to_string(fields.size()));
    }
    row(fields, line_no);
  }
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

RankDataset ParseRanks(std::istream& in, std::int64_t catalog_size) {
  if (catalog_size < 2) {
    throw std::invalid_argument("catalog size N must be >= 2");
  }
  RankDataset dataset;
  dataset.catalog_size = catalog_size;
  std::set<std::int64_t> seen;
  ReadCsv(in, "user_id,global_rank", [&](const auto& fields, int line) {
    const std::int64_t user = ParseInt(fields[0], line, "user_id");
    const std::int64_t rank = ParseInt(fields[1], line, "global_rank");
    if (!seen.insert(user).second) {
      throw ParseError(line, "duplicate user_id " + std::to_string(user));
    }
    if (rank < 1 || rank > catalog_size) {
      throw ParseError(line, "global_rank " + std::to_string(rank) +
                                 " outside [1, " +
                                 std::to_string(catalog_size) + "]");
    }
    dataset.ranks.push_back(rank);
  });
  if (dataset.ranks.empty()) {
    throw std::invalid_argument("ranks file has no users");
  }
  return dataset;
}

RankDataset ReadRanks(const std::string& path, std::int64_t catalog_size) {
  auto in = OpenInput(path);
  return ParseRanks(in, catalog_size);
}

void WriteRanks(const RankDataset& dataset, std::ostream& out) {
  out << "user_id,global_rank\n";
  for (std::size_t u = 0; u < dataset.ranks.size(); ++u) {
    out << u << ',' << dataset.ranks[u] << '\n';
  }
}

void WriteRanks(const RankDataset& dataset, const std::string& path) {
  auto out = OpenOutput(path);
  WriteRanks(dataset, out);
}

std::vector<SampleRecord> ParseSamples(std::istream& in) {
  std::vector<SampleRecord> samples;
  std::set<std::int64_t> seen;
  ReadCsv(in, "user_id,sampled_rank,sample_size",
          [&](const auto& fields, int line) {
            SampleRecord rec;
            rec.user_index = ParseInt(fields[0], line, "user_id");
            rec.sampled_rank = ParseInt(fields[1], line, "sampled_rank");
            rec.sample_size = ParseInt(fields[2], line, "sample_size");
            if (!seen.insert(rec.user_index).second) {
              throw ParseError(line, "duplicate user_id " +
                                         std::to_string(rec.user_index));
            }
            try {
              rec.Validate();
            } catch (const std::invalid_argument& e) {
              throw ParseError(line, e.what());
            }
            samples.push_back(rec);
          });
  if (samples.empty()) {
    throw std::invalid_argument("samples file has no users");
  }
  return samples;
}

std::vector<SampleRecord> ReadSamples(const std::string& path) {
  auto in = OpenInput(path);
  return ParseSamples(in);
}

void WriteSamples(std::span<const SampleRecord> samples, std::ostream& out) {
  out << "user_id,sampled_rank,sample_size\n";
  for (const auto& s : samples) {
    out << s.user_index << ',' << s.sampled_rank << ',' << s.sample_size
        << '\n';
  }
}

void WriteSamples(std::span<const SampleRecord> samples,
                  const std::string& path) {
  auto out = OpenOutput(path);
  WriteSamples(samples, out);
}

RankPmf ParsePmf(std::istream& in) {
  std::vector<std::pair<std::int64_t, double>> rows;
  ReadCsv(in, "rank,prob", [&](const auto& fields, int line) {
    const std::int64_t rank = ParseInt(fields[0], line, "rank");
    const double prob = ParseReal(fields[1], line, "prob");
    if (rank < 1) throw ParseError(line, "rank must be >= 1");
    if (prob < 0.0) throw ParseError(line, "negative probability");
    rows.emplace_back(rank, prob);
  });
  RankPmf pmf;
  pmf.probs.assign(rows.size(), -1.0);
  for (const auto& [rank, prob] : rows) {
    if (rank > static_cast<std::int64_t>(rows.size()) ||
        pmf.probs[rank - 1] >= 0.0) {
      throw std::invalid_argument(
          "pmf ranks must cover 1..N exactly once (problem at rank " +
          std::to_string(rank) + ")");
    }
    pmf.probs[rank - 1] = prob;
  }
  double sum = 0.0;
  for (double p : pmf.probs) sum += p;
  if (pmf.probs.empty() || std::abs(sum - 1.0) > 1e-6) {
    throw std::invalid_argument("pmf mass " + FormatDouble(sum) +
                                " is not 1");
  }
  for (double& p : pmf.probs) p /= sum;
  return pmf;
}

RankPmf ReadPmf(const std::string& path) {
  auto in = OpenInput(path);
  return ParsePmf(in);
}

void WritePmf(const RankPmf& pmf, std::ostream& out) {
  out << "rank,prob\n";
  for (std::int64_t rank = 1; rank <= pmf.size(); ++rank) {
    out << rank << ',' << FormatDouble(pmf.at(rank)) << '\n';
  }
}

void WritePmf(const RankPmf& pmf, const std::string& path) {
  auto out = OpenOutput(path);
  WritePmf(pmf, out);
}

}  // namespace sampest
