#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weft {

enum class Errc {
    io,
    config,
    malformed_line,
    invariant_violation,
    malformed_slot,
    non_divisible,
    source_not_single_image,
    insufficient_pool,
    duplicate_caption,
    duplicate_option,
    sample_exceeds_total,
    too_few_images,
    count_mismatch,
    orphan_answer,
    api_error,
    timeout,
    empty_collection,
    empty_image_list,
    decode_error,
    missing_prediction,
};

inline std::string_view errc_name(Errc c) {
    switch (c) {
        case Errc::io: return "io";
        case Errc::config: return "config";
        case Errc::malformed_line: return "malformed_line";
        case Errc::invariant_violation: return "invariant_violation";
        case Errc::malformed_slot: return "malformed_slot";
        case Errc::non_divisible: return "non_divisible";
        case Errc::source_not_single_image: return "source_not_single_image";
        case Errc::insufficient_pool: return "insufficient_pool";
        case Errc::duplicate_caption: return "duplicate_caption";
        case Errc::duplicate_option: return "duplicate_option";
        case Errc::sample_exceeds_total: return "sample_exceeds_total";
        case Errc::too_few_images: return "too_few_images";
        case Errc::count_mismatch: return "count_mismatch";
        case Errc::orphan_answer: return "orphan_answer";
        case Errc::api_error: return "api_error";
        case Errc::timeout: return "timeout";
        case Errc::empty_collection: return "empty_collection";
        case Errc::empty_image_list: return "empty_image_list";
        case Errc::decode_error: return "decode_error";
        case Errc::missing_prediction: return "missing_prediction";
    }
    return "unknown";
}

/// Library-wide exception type. The code identifies the failed contract,
/// the message carries the offending id/line/value.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace weft
