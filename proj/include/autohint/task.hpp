#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace autohint {

/// Task definition: the general description embedded in every prompt, the
/// closed label set, and the answer-format instruction.
struct TaskSpec {
  std::string name;
  std::string description;
  std::vector<std::string> label_set;
  std::string answer_instruction;
};

/// One labeled input-output demonstration.
struct Sample {
  std::string id;
  std::string input;
  std::string label;  // canonical entry of TaskSpec::label_set
};

struct SplitRatios {
  double train = 0.6;
  double validation = 0.2;
  double test = 0.2;
};

struct DatasetSplit {
  std::vector<Sample> train;
  std::vector<Sample> validation;
  std::vector<Sample> test;
  std::uint64_t seed = 0;
};

/// ASCII-lowercased, surrounding whitespace trimmed.
std::string normalize_label(std::string_view raw);

/// Throws DataError unless the spec has a non-empty description and >= 2
/// non-empty labels that stay pairwise distinct after case-folding.
void validate_task_spec(const TaskSpec& spec);

/// Loads the canonical task file (see docs/task.schema.json). Labels are
/// trimmed and case-folded, then matched against the label set; records
/// without an id get "s<zero-padded index>". Throws DataError on missing
/// file, malformed record (with its index), unknown label, duplicate id,
/// or an empty sample list.
std::pair<TaskSpec, std::vector<Sample>> load_task(const std::filesystem::path& path);

/// Writes the canonical task file.
void save_task(const std::filesystem::path& path, const TaskSpec& spec,
               const std::vector<Sample>& samples);

/// Seeded shuffle then floor(N*train) / floor(N*val) / remainder. With
/// `stratify`, the same rule applies within each label group. Requires
/// positive ratios summing to 1 (1e-9) and at least 3 samples.
DatasetSplit split_dataset(const std::vector<Sample>& samples, const SplitRatios& ratios,
                           std::uint64_t seed, bool stratify = false);

/// Seeded draw of n without replacement, output sorted by id. n >= |samples|
/// returns everything in original order; n == 0 is an error.
std::vector<Sample> subsample(const std::vector<Sample>& samples, std::size_t n,
                              std::uint64_t seed);

}  // namespace autohint
