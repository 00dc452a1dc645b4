#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fipo {

enum class PromptKind { Collection, Diversification, Discrimination };

enum class OptionalBlock { NaiveResponse, GroundTruth };

/// Inputs to a meta-prompt render: the mandatory naive task instruction plus
/// the optional response slots and word-count hint.
struct SlotSet {
    std::string naive_prompt;
    std::optional<std::string> naive_response;
    std::optional<std::string> ground_truth;
    std::optional<int> length_hint;
};

struct RenderedPrompt {
    std::string text;
    PromptKind kind = PromptKind::Collection;
    std::set<OptionalBlock> included_blocks;
};

/// Single left-to-right pass over `text`: each whole-token occurrence of a key
/// (bounded by non-alphanumeric characters) is replaced by its value.
/// Substituted values are never rescanned, so placeholder-looking content in
/// the values comes through untouched.
std::string substitute_placeholders(
    std::string_view text,
    const std::vector<std::pair<std::string_view, std::string_view>>& subs);

/// The three meta-prompt bodies plus the two optional fragments of the
/// diversification prompt, loaded verbatim from disk and substituted on
/// render. Instances are immutable after load.
class TemplateSet {
public:
    static TemplateSet load(const std::filesystem::path& dir);

    /// Collection meta prompt; both response slots are mandatory here.
    RenderedPrompt render_collection(const SlotSet& slots) const;

    /// Diversification meta prompt; response blocks are inserted only for the
    /// slots that are present, in the order naive response then ground truth.
    /// Requires length_hint.
    RenderedPrompt render_diversification(const SlotSet& slots) const;

    /// Discrimination meta prompt over an incumbent/challenger prompt pair.
    RenderedPrompt render_discrimination(const std::string& raw_prompt,
                                         const std::string& candidate_a,
                                         const std::string& candidate_b,
                                         const std::string& golden) const;

    const std::string& collection_body() const { return collection_; }
    const std::string& diversification_body() const { return diversification_; }
    const std::string& naive_response_block() const { return naive_response_block_; }
    const std::string& ground_truth_block() const { return ground_truth_block_; }
    const std::string& discrimination_body() const { return discrimination_; }

private:
    std::string collection_;
    std::string diversification_;
    std::string naive_response_block_;
    std::string ground_truth_block_;
    std::string discrimination_;
};

}  // namespace fipo
