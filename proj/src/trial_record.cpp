#include "allz/trial_record.hpp"

namespace allz {

std::string_view to_string(BaseMode mode) {
    return mode == BaseMode::random ? "random" : "perfect_square";
}

std::optional<BaseMode> parse_base_mode(std::string_view name) {
    if (name == "random") return BaseMode::random;
    if (name == "perfect_square") return BaseMode::perfect_square;
    return std::nullopt;
}

std::string_view to_string(TrialStatus status) {
    switch (status) {
        case TrialStatus::success: return "success";
        case TrialStatus::failure: return "failure";
        case TrialStatus::error: return "error";
    }
    return "?";
}

std::optional<TrialStatus> parse_trial_status(std::string_view name) {
    for (TrialStatus s : {TrialStatus::success, TrialStatus::failure, TrialStatus::error})
        if (to_string(s) == name) return s;
    return std::nullopt;
}

}  // namespace allz
