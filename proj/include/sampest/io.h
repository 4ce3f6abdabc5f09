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

// CSV formats (header row required, ranks 1-based):
//   ranks:   user_id,global_rank
//   samples: user_id,sampled_rank,sample_size
//   pmf:     rank,prob

#ifndef SAMPEST_IO_H_
#define SAMPEST_IO_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sampest/core.h"

namespace sampest {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Shortest decimal form that round-trips a double.
std::string FormatDouble(double value);

RankDataset ParseRanks(std::istream& in, std::int64_t catalog_size);
RankDataset ReadRanks(const std::string& path, std::int64_t catalog_size);
void WriteRanks(const RankDataset& dataset, std::ostream& out);
void WriteRanks(const RankDataset& dataset, const std::string& path);

std::vector<SampleRecord> ParseSamples(std::istream& in);
std::vector<SampleRecord> ReadSamples(const std::string& path);
void WriteSamples(std::span<const SampleRecord> samples, std::ostream& out);
void WriteSamples(std::span<const SampleRecord> samples,
                  const std::string& path);

// Ranks must cover 1..N exactly once. The total mass must be within 1e-6 of
// one and is renormalized.
RankPmf ParsePmf(std::istream& in);
RankPmf ReadPmf(const std::string& path);
void WritePmf(const RankPmf& pmf, std::ostream& out);
void WritePmf(const RankPmf& pmf, const std::string& path);

}  // namespace sampest

#endif  // SAMPEST_IO_H_
