#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autohint/task.hpp"

namespace autohint {

/// One enriched-instruction fragment added to a prompt. `iteration` is the
/// optimization round that produced it; iterations strictly increase along a
/// prompt's hint list.
struct Hint {
  std::string text;
  int iteration = 0;
  std::vector<std::string> source_sample_ids;
  bool leak_flagged = false;
};

/// A versioned instruction: task description + accumulated hints + optional
/// few-shot demonstrations. Version t equals the number of optimization
/// iterations applied.
struct Prompt {
  TaskSpec task;
  std::vector<Hint> hints;
  std::vector<Sample> demonstrations;
  int version = 0;
};

/// A completion mapped onto the label set, or the unparsed sentinel.
struct ParsedAnswer {
  static constexpr std::string_view kUnparsed = "<unparsed>";

  std::string label;  // canonical label or kUnparsed
  std::string raw;

  bool parsed() const { return label != kUnparsed; }
};

// Stage sentinels baked into each template family so offline providers can
// tell which pipeline stage rendered a prompt.
inline constexpr std::string_view kStageSentinelInference = "<!-- autohint:stage=inference -->";
inline constexpr std::string_view kStageSentinelHint = "<!-- autohint:stage=hint -->";
inline constexpr std::string_view kStageSentinelSummary = "<!-- autohint:stage=summarize -->";

/// Prefix applied when rendering every hint from iteration >= 1.
inline constexpr std::string_view kAdditionalHintPrefix =
    "And additional hint might be useful is";

/// The three template families. Plain text with {placeholder} slots;
/// see templates/ for the canonical resources.
struct TemplateSet {
  std::string inference;
  std::string hint;
  std::string summary;

  static const TemplateSet& defaults();

  /// Reads inference.txt / hint.txt / summary.txt from `dir`; a missing file
  /// keeps the built-in default for that family. Throws ConfigError when a
  /// file contains an unknown placeholder.
  static TemplateSet load_dir(const std::filesystem::path& dir);
};

/// Renders the query prompt: description, hints (iteration >= 1 prefixed),
/// demonstrations as Input/Output blocks, the sample input, then the answer
/// instruction. Bit-exact for equal structured prompts.
std::string render_inference_prompt(const Prompt& prompt, const Sample& sample,
                                    const TemplateSet& templates = TemplateSet::defaults());

/// Renders the per-sample hint-deduction prompt from an input-output pair.
/// `note` is an optional extra line (e.g. the wrong prediction).
std::string render_hint_prompt(const TaskSpec& task, const Sample& sample,
                               std::string_view note = {},
                               const TemplateSet& templates = TemplateSet::defaults());

/// Renders the consolidation prompt over (sample, hint text) pairs. Hints are
/// enumerated grouped by gold label (label_set order), preserving input order
/// within each group. Throws DataError on an empty subset or empty hint.
std::string render_summary_prompt(const TaskSpec& task,
                                  const std::vector<std::pair<Sample, std::string>>& subset,
                                  const TemplateSet& templates = TemplateSet::defaults());

/// Case-insensitive scan for label occurrences: earliest first occurrence
/// wins; ties go to the longer label, then label_set order; no occurrence
/// yields the unparsed sentinel.
ParsedAnswer parse_answer(std::string_view completion,
                          const std::vector<std::string>& label_set);

/// New prompt with version+1 and the hint appended. Requires
/// new_hint.iteration == prompt.version.
Prompt merge_hint(const Prompt& prompt, const Hint& new_hint);

/// True when `hint_text` contains a verbatim run of at least `threshold`
/// whitespace tokens from any source input.
bool hint_leaks(std::string_view hint_text, const std::vector<std::string>& source_inputs,
                std::size_t threshold = 15);

/// Parses the numbered items out of a rendered summary prompt (used by the
/// deterministic offline summarizer).
std::vector<std::string> extract_enumerated_hints(std::string_view summary_prompt);

}  // namespace autohint
