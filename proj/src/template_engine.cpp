#include "fipo/template_engine.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "fipo/errors.hpp"
#include "fipo/text_util.hpp"

namespace fipo {

namespace {

constexpr std::string_view kOptionalMarker = "<Optional Responses>\n";

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open template file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool is_token_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

void require_prompt(const std::string& prompt) {
    if (is_blank(prompt)) throw EmptyPrompt("naive_prompt is empty");
}

}  // namespace

std::string substitute_placeholders(
    std::string_view text,
    const std::vector<std::pair<std::string_view, std::string_view>>& subs) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        bool replaced = false;
        bool at_boundary = i == 0 || !is_token_char(text[i - 1]);
        if (at_boundary) {
            for (const auto& [key, value] : subs) {
                if (text.compare(i, key.size(), key) != 0) continue;
                std::size_t end = i + key.size();
                if (end < text.size() && is_token_char(text[end])) continue;
                out.append(value);
                i = end;
                replaced = true;
                break;
            }
        }
        if (!replaced) {
            out.push_back(text[i]);
            ++i;
        }
    }
    return out;
}

TemplateSet TemplateSet::load(const std::filesystem::path& dir) {
    TemplateSet set;
    set.collection_ = read_file(dir / "collection.tmpl");
    set.diversification_ = read_file(dir / "diversification.tmpl");
    set.naive_response_block_ = read_file(dir / "diversification_naive_response.tmpl");
    set.ground_truth_block_ = read_file(dir / "diversification_ground_truth.tmpl");
    set.discrimination_ = read_file(dir / "discrimination.tmpl");
    if (set.diversification_.find(kOptionalMarker) == std::string::npos) {
        throw ParseError(1, "diversification.tmpl lacks the <Optional Responses> marker");
    }
    return set;
}

RenderedPrompt TemplateSet::render_collection(const SlotSet& slots) const {
    require_prompt(slots.naive_prompt);
    if (!slots.naive_response) throw MissingSlot("collection requires naive_response");
    if (!slots.ground_truth) throw MissingSlot("collection requires ground_truth");

    RenderedPrompt out;
    out.kind = PromptKind::Collection;
    out.included_blocks = {OptionalBlock::NaiveResponse, OptionalBlock::GroundTruth};
    out.text = substitute_placeholders(collection_, {{"SP", slots.naive_prompt},
                                                     {"SR", *slots.naive_response},
                                                     {"GR", *slots.ground_truth}});
    return out;
}

RenderedPrompt TemplateSet::render_diversification(const SlotSet& slots) const {
    require_prompt(slots.naive_prompt);
    if (!slots.length_hint) throw MissingSlot("diversification requires length_hint");
    if (*slots.length_hint < 1) throw InvalidArgument("length_hint must be >= 1");

    RenderedPrompt out;
    out.kind = PromptKind::Diversification;

    std::string blocks;
    if (slots.naive_response) {
        blocks += naive_response_block_;
        out.included_blocks.insert(OptionalBlock::NaiveResponse);
    }
    if (slots.ground_truth) {
        blocks += ground_truth_block_;
        out.included_blocks.insert(OptionalBlock::GroundTruth);
    }

    std::string body = diversification_;
    std::size_t marker = body.find(kOptionalMarker);
    body.replace(marker, kOptionalMarker.size(), blocks);

    std::vector<std::pair<std::string_view, std::string_view>> subs;
    subs.emplace_back("SP", slots.naive_prompt);
    if (slots.naive_response) subs.emplace_back("SR", *slots.naive_response);
    if (slots.ground_truth) subs.emplace_back("GR", *slots.ground_truth);
    std::string hint = std::to_string(*slots.length_hint);
    subs.emplace_back("GN", hint);

    out.text = substitute_placeholders(body, subs);
    return out;
}

RenderedPrompt TemplateSet::render_discrimination(const std::string& raw_prompt,
                                                  const std::string& candidate_a,
                                                  const std::string& candidate_b,
                                                  const std::string& golden) const {
    if (is_blank(raw_prompt)) throw EmptyPrompt("raw_prompt is empty");
    if (is_blank(candidate_a)) throw EmptyPrompt("candidate_a is empty");
    if (is_blank(candidate_b)) throw EmptyPrompt("candidate_b is empty");
    if (is_blank(golden)) throw EmptyPrompt("golden is empty");

    RenderedPrompt out;
    out.kind = PromptKind::Discrimination;
    out.text = substitute_placeholders(discrimination_, {{"RP", raw_prompt},
                                                         {"PA", candidate_a},
                                                         {"PB", candidate_b},
                                                         {"GR", golden}});
    return out;
}

}  // namespace fipo
