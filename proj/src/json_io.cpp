#include "allz/json_io.hpp"

#include <string>

namespace allz {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& value) {
    return value ? Json(*value) : Json(nullptr);
}

const Json& field(const Json& object, const char* name) {
    auto it = object.find(name);
    if (it == object.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

Nat get_nat(const Json& object, const char* name) {
    const Json& v = field(object, name);
    if (!v.is_number_unsigned()) throw ParseError(std::string("field '") + name + "' must be a non-negative integer");
    return v.get<Nat>();
}

int get_int(const Json& object, const char* name) {
    const Json& v = field(object, name);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
    return v.get<int>();
}

bool get_bool(const Json& object, const char* name) {
    const Json& v = field(object, name);
    if (!v.is_boolean()) throw ParseError(std::string("field '") + name + "' must be a boolean");
    return v.get<bool>();
}

std::string get_string(const Json& object, const char* name) {
    const Json& v = field(object, name);
    if (!v.is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
    return v.get<std::string>();
}

std::optional<Nat> get_optional_nat(const Json& object, const char* name) {
    if (field(object, name).is_null()) return std::nullopt;
    return get_nat(object, name);
}

}  // namespace

Json to_json(const TrialRecord& r) {
    Json j;
    j["case_id"] = r.case_id;
    j["digits"] = r.digits;
    j["n"] = r.n;
    j["p"] = r.p;
    j["q"] = r.q;
    j["a"] = r.a;
    j["base_mode"] = to_string(r.base_mode);
    j["seed"] = r.seed;
    j["strategy"] = to_string(r.strategy);
    j["bound"] = optional_json(r.bound);
    j["r"] = r.r;
    j["r_digits"] = r.r_digits;
    j["r_distinct_primes"] = r.r_distinct_primes;
    j["status"] = to_string(r.status);
    j["factor"] = optional_json(r.factor);
    if (!r.succeeded_z)
        j["succeeded_z"] = nullptr;
    else if (r.succeeded_z->kind == SuccessPath::Kind::divisor)
        j["succeeded_z"] = r.succeeded_z->z;
    else
        j["succeeded_z"] = r.succeeded_z->kind == SuccessPath::Kind::fallback ? "fallback" : "shortcut";
    j["failed_z"] = r.failed_z;
    j["fallback_tried"] = r.fallback_tried;
    j["fallback_succeeded"] = r.fallback_succeeded;
    j["gcd_count"] = r.gcd_count;
    j["r_even"] = r.r_even;
    j["half_power_is_minus_one"] = optional_json(r.half_power_is_minus_one);
    j["failure_reason"] = r.failure_reason ? Json(to_string(*r.failure_reason)) : Json(nullptr);
    j["retries_used"] = r.retries_used;
    j["retry_resolved"] = r.retry_resolved;
    j["error"] = optional_json(r.error);
    return j;
}

TrialRecord record_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("record must be a JSON object");
    TrialRecord r;
    r.case_id = get_nat(j, "case_id");
    r.digits = get_int(j, "digits");
    r.n = get_nat(j, "n");
    r.p = get_nat(j, "p");
    r.q = get_nat(j, "q");
    r.a = get_nat(j, "a");
    auto mode = parse_base_mode(get_string(j, "base_mode"));
    if (!mode) throw ParseError("unknown base_mode");
    r.base_mode = *mode;
    r.seed = get_nat(j, "seed");
    auto strategy = parse_strategy(get_string(j, "strategy"));
    if (!strategy) throw ParseError("unknown strategy");
    r.strategy = *strategy;
    r.bound = get_optional_nat(j, "bound");
    r.r = get_nat(j, "r");
    r.r_digits = get_int(j, "r_digits");
    r.r_distinct_primes = get_int(j, "r_distinct_primes");
    auto status = parse_trial_status(get_string(j, "status"));
    if (!status) throw ParseError("unknown status");
    r.status = *status;
    r.factor = get_optional_nat(j, "factor");
    const Json& via = field(j, "succeeded_z");
    if (via.is_number_unsigned()) {
        r.succeeded_z = SuccessPath{SuccessPath::Kind::divisor, via.get<Nat>()};
    } else if (via.is_string()) {
        auto s = via.get<std::string>();
        if (s == "fallback")
            r.succeeded_z = SuccessPath{SuccessPath::Kind::fallback, 0};
        else if (s == "shortcut")
            r.succeeded_z = SuccessPath{SuccessPath::Kind::shortcut, 0};
        else
            throw ParseError("unknown succeeded_z marker '" + s + "'");
    } else if (!via.is_null()) {
        throw ParseError("succeeded_z must be an integer, a marker string or null");
    }
    const Json& failed = field(j, "failed_z");
    if (!failed.is_array()) throw ParseError("failed_z must be an array");
    for (const auto& z : failed) {
        if (!z.is_number_unsigned()) throw ParseError("failed_z entries must be non-negative integers");
        r.failed_z.push_back(z.get<Nat>());
    }
    r.fallback_tried = get_bool(j, "fallback_tried");
    r.fallback_succeeded = get_bool(j, "fallback_succeeded");
    r.gcd_count = static_cast<unsigned>(get_nat(j, "gcd_count"));
    r.r_even = get_bool(j, "r_even");
    if (!field(j, "half_power_is_minus_one").is_null()) r.half_power_is_minus_one = get_bool(j, "half_power_is_minus_one");
    if (!field(j, "failure_reason").is_null()) {
        auto reason = parse_failure_reason(get_string(j, "failure_reason"));
        if (!reason) throw ParseError("unknown failure_reason");
        r.failure_reason = reason;
    }
    r.retries_used = static_cast<unsigned>(get_nat(j, "retries_used"));
    r.retry_resolved = get_bool(j, "retry_resolved");
    if (!field(j, "error").is_null()) r.error = get_string(j, "error");
    return r;
}

std::string to_jsonl_line(const TrialRecord& record) { return to_json(record).dump(); }

TrialRecord parse_jsonl_line(const std::string& line) {
    Json j;
    try {
        j = Json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return record_from_json(j);
}

std::vector<TrialRecord> read_results(std::istream& in, const std::string& source_name) {
    std::vector<TrialRecord> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(parse_jsonl_line(line));
        } catch (const ParseError& e) {
            throw ResultsLineError(source_name, number, e.what());
        }
    }
    return out;
}

void apply_config_json(const Json& j, CampaignConfig& c) {
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "digits") {
            c.digits = get_int(j, "digits");
        } else if (key == "trials") {
            c.trials = get_nat(j, "trials");
        } else if (key == "base_mode") {
            auto mode = parse_base_mode(get_string(j, "base_mode"));
            if (!mode) throw ParseError("config: unknown base_mode");
            c.base_mode = *mode;
        } else if (key == "strategy") {
            auto strategy = parse_strategy(get_string(j, "strategy"));
            if (!strategy) throw ParseError("config: unknown strategy");
            c.strategy = *strategy;
        } else if (key == "bound") {
            c.bound = get_optional_nat(j, "bound");
        } else if (key == "master_seed") {
            c.master_seed = get_nat(j, "master_seed");
        } else if (key == "workers") {
            c.workers = static_cast<unsigned>(get_nat(j, "workers"));
        } else if (key == "retry_limit") {
            c.retry_limit = static_cast<unsigned>(get_nat(j, "retry_limit"));
        } else if (key == "first_case_id") {
            c.first_case_id = get_nat(j, "first_case_id");
        } else if (key == "prime_split") {
            auto split = parse_prime_split(get_string(j, "prime_split"));
            if (!split) throw ParseError("config: unknown prime_split");
            c.prime_split = *split;
        } else {
            throw ParseError("config: unknown field '" + key + "'");
        }
    }
}

Json to_json(const CampaignConfig& c) {
    Json j;
    j["digits"] = c.digits;
    j["trials"] = c.trials;
    j["base_mode"] = to_string(c.base_mode);
    j["strategy"] = to_string(c.strategy);
    j["bound"] = optional_json(c.bound);
    j["master_seed"] = c.master_seed;
    j["workers"] = c.workers;
    j["retry_limit"] = c.retry_limit;
    j["first_case_id"] = c.first_case_id;
    j["prime_split"] = to_string(c.prime_split);
    return j;
}

Json to_json(const FactorMultiset& factors) {
    Json j = Json::object();
    for (const auto& e : factors.entries) j[std::to_string(e.prime)] = e.multiplicity;
    return j;
}

Json to_json(const PeriodRecord& period) {
    Json j;
    j["r"] = period.order;
    j["factors"] = to_json(period.factors);
    if (period.bounded()) {
        j["bound"] = *period.bound;
        j["bounded_primes"] = period.bounded_primes;
    }
    return j;
}

Json to_json(const AttemptResult& attempt) {
    Json j;
    j["kind"] = to_string(attempt.kind);
    j["z"] = optional_json(attempt.divisor_z);
    j["gcd"] = attempt.gcd_value;
    j["outcome"] = to_string(attempt.outcome);
    return j;
}

Json to_json(const FactorOutcome& outcome) {
    Json j;
    j["status"] = to_string(outcome.status);
    j["factor"] = optional_json(outcome.factor);
    j["witness"] = outcome.witness ? to_json(*outcome.witness) : Json(nullptr);
    Json attempts = Json::array();
    for (const auto& a : outcome.attempts) attempts.push_back(to_json(a));
    j["attempts"] = attempts;
    j["gcd_count"] = outcome.gcd_count;
    j["failure_reason"] = outcome.failure_reason ? Json(to_string(*outcome.failure_reason)) : Json(nullptr);
    return j;
}

Json to_json(const CampaignStats& s) {
    Json j;
    j["trials"] = s.trials;
    j["successes"] = s.successes;
    j["failures"] = s.failures;
    j["success_rate"] = s.success_rate().exact();
    j["success_rate_decimal"] = s.success_rate().fixed(6);
    j["failures_by_reason"] = s.failures_by_reason;
    Json gcds = Json::object();
    for (const auto& [k, v] : s.gcd_count_histogram) gcds[std::to_string(k)] = v;
    j["gcd_count_histogram"] = gcds;
    Json attempts = Json::object();
    for (const auto& [k, v] : s.attempts_per_success_histogram) attempts[std::to_string(k)] = v;
    j["attempts_per_success_histogram"] = attempts;
    j["unresolved"] = s.unresolved;
    j["mean_gcd_count"] = s.mean_gcd_count().fixed(6);
    j["mean_r_digits"] = s.mean_r_digits().fixed(6);
    j["mean_r_distinct_primes"] = s.mean_r_distinct_primes().fixed(6);
    j["even_r_count"] = s.even_r_count;
    j["half_power_minus_one_count"] = s.half_power_minus_one_count;
    Json curve = Json::object();
    for (std::size_t i = 0; i < kBoundClasses.size(); ++i)
        curve[bound_class_label(i)] = s.cumulative_success_by_bound[i];
    j["cumulative_success_by_bound"] = curve;
    j["fallback_tried_count"] = s.fallback_tried_count;
    j["fallback_success_count"] = s.fallback_success_count;
    return j;
}

}  // namespace allz
