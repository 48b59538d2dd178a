#include "claimrisk/features.hpp"

#include <algorithm>
#include <unordered_map>

#include "claimrisk/rng.hpp"

namespace claimrisk {

std::uint64_t SampleSplit::hash() const {
    std::string digest;
    auto add = [&](const char* tag, const std::vector<std::string>& ids) {
        digest += tag;
        for (const auto& id : ids) {
            digest += id;
            digest.push_back('\n');
        }
    };
    add("dev:", development_ids);
    add("valid:", validation_ids);
    add("train:", training_ids);
    add("tune:", tuning_ids);
    return fnv1a64(digest);
}

SampleSplit split_samples(std::vector<std::string> ids, std::uint64_t seed) {
    if (ids.size() < 4) throw DataError("split_samples: need at least 4 ids");
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
        throw DataError("split_samples: duplicate ids");
    }
    Rng rng(mix_seed(seed, 0x73706c69ULL));  // "spli"
    rng.shuffle(ids);

    SampleSplit s;
    const std::size_t n_dev = (ids.size() + 1) / 2;
    s.development_ids.assign(ids.begin(), ids.begin() + n_dev);
    s.validation_ids.assign(ids.begin() + n_dev, ids.end());
    const std::size_t n_train = (n_dev + 1) / 2;
    s.training_ids.assign(s.development_ids.begin(), s.development_ids.begin() + n_train);
    s.tuning_ids.assign(s.development_ids.begin() + n_train, s.development_ids.end());

    std::sort(s.development_ids.begin(), s.development_ids.end());
    std::sort(s.validation_ids.begin(), s.validation_ids.end());
    std::sort(s.training_ids.begin(), s.training_ids.end());
    std::sort(s.tuning_ids.begin(), s.tuning_ids.end());
    return s;
}

std::vector<WindowSplit> enumerate_window_splits() {
    std::vector<WindowSplit> out;
    out.push_back(WindowSplit::at(3));
    for (int b = 1; b <= 11; ++b) {
        if (b != 3) out.push_back(WindowSplit::at(b));
    }
    out.push_back(WindowSplit::none());
    return out;
}

namespace {

/// Column-name suffixes for the one or two count windows of a split.
std::vector<std::string> window_suffixes(const WindowSplit& split) {
    if (!split.boundary) return {"_m1_12"};
    int b = *split.boundary;
    return {"_m1_" + std::to_string(b), "_m" + std::to_string(b + 1) + "_12"};
}

/// 0 for window A (months 1..b), 1 for window B; 0 for the single window.
int window_of_month(int month, const WindowSplit& split) {
    if (!split.boundary) return 0;
    return month <= *split.boundary ? 0 : 1;
}

void check_split(const WindowSplit& split) {
    if (split.boundary && (*split.boundary < 1 || *split.boundary > 11)) {
        throw DataError("window split boundary must be in [1,11]");
    }
}

int state_index(const std::string& state) {
    const auto& codes = region_codes();
    auto it = std::lower_bound(codes.begin(), codes.end(), state);
    if (it == codes.end() || *it != state) {
        throw DataError("unknown state code '" + state + "'");
    }
    return static_cast<int>(it - codes.begin());
}

int race_index(const std::string& race) {
    const auto& races = race_categories();
    auto it = std::find(races.begin(), races.end(), race);
    if (it == races.end()) throw DataError("unknown race '" + race + "'");
    return static_cast<int>(it - races.begin());
}

const char* const kUtilizationNames[] = {
    "util_home_health_days", "util_inpatient_days",  "util_snf_any",
    "util_inpatient_admits", "util_clinic_visits",   "util_er_visits",
};

}  // namespace

std::vector<std::string> traditional_column_names(const CodeMap& code_map) {
    std::vector<std::string> names = {"age", "sex_female"};
    for (const auto& s : region_codes()) names.push_back("state_" + s);
    for (const CodeGroup* g : code_map.of_kind(GroupKind::comorbidity)) {
        names.push_back("ind_" + g->name);
    }
    return names;
}

std::vector<std::string> augmented_column_names(const CodeMap& code_map,
                                                const WindowSplit& split) {
    check_split(split);
    std::vector<std::string> names = {"age", "sex_female"};
    for (const auto& s : region_codes()) names.push_back("state_" + s);
    for (const auto& r : race_categories()) names.push_back("race_" + r);
    names.push_back("income_decile");
    const auto suffixes = window_suffixes(split);
    auto add_counts = [&](GroupKind kind) {
        for (const CodeGroup* g : code_map.of_kind(kind)) {
            for (const auto& suffix : suffixes) names.push_back("cnt_" + g->name + suffix);
        }
    };
    add_counts(GroupKind::comorbidity);
    add_counts(GroupKind::functional);
    add_counts(GroupKind::dme);
    for (const char* util : kUtilizationNames) {
        for (const auto& suffix : suffixes) names.push_back(util + suffix);
    }
    return names;
}

std::vector<double> build_traditional(const Beneficiary& b,
                                      const std::vector<const Claim*>& claims,
                                      const CodeMap& code_map, const StudyConfig& config) {
    std::vector<double> row;
    row.reserve(73);
    row.push_back(b.age_at_t0);
    row.push_back(b.sex == Sex::female ? 1.0 : 0.0);
    std::vector<double> states(region_codes().size(), 0.0);
    states[state_index(b.state)] = 1.0;
    row.insert(row.end(), states.begin(), states.end());

    for (const CodeGroup* g : code_map.of_kind(GroupKind::comorbidity)) {
        std::vector<const Claim*> matching;
        for (const Claim* c : claims) {
            if (bin_claim_month(c->claim_date, config) && claim_matches_group(*c, *g)) {
                matching.push_back(c);
            }
        }
        row.push_back(activate_indicator(matching, config) ? 1.0 : 0.0);
    }
    return row;
}

std::vector<double> build_augmented(const Beneficiary& b,
                                    const std::vector<const Claim*>& claims,
                                    const CodeMap& code_map, const StudyConfig& config,
                                    const WindowSplit& split) {
    check_split(split);
    const int n_windows = split.boundary ? 2 : 1;

    std::vector<double> row;
    row.push_back(b.age_at_t0);
    row.push_back(b.sex == Sex::female ? 1.0 : 0.0);
    std::vector<double> states(region_codes().size(), 0.0);
    states[state_index(b.state)] = 1.0;
    row.insert(row.end(), states.begin(), states.end());
    std::vector<double> races(race_categories().size(), 0.0);
    races[race_index(b.race)] = 1.0;
    row.insert(row.end(), races.begin(), races.end());
    row.push_back(b.income_decile);

    // Look-back claims with their window assignment, computed once.
    std::vector<std::pair<const Claim*, int>> in_window;
    for (const Claim* c : claims) {
        if (auto month = bin_claim_month(c->claim_date, config)) {
            in_window.emplace_back(c, window_of_month(*month, split));
        }
    }

    auto add_group_counts = [&](GroupKind kind) {
        for (const CodeGroup* g : code_map.of_kind(kind)) {
            double counts[2] = {0.0, 0.0};
            for (const auto& [c, w] : in_window) {
                if (claim_matches_group(*c, *g)) counts[w] += 1.0;
            }
            for (int w = 0; w < n_windows; ++w) row.push_back(counts[w]);
        }
    };
    add_group_counts(GroupKind::comorbidity);
    add_group_counts(GroupKind::functional);
    add_group_counts(GroupKind::dme);

    double hh_days[2] = {0, 0}, inpt_days[2] = {0, 0}, snf_any[2] = {0, 0};
    double inpt_admits[2] = {0, 0}, clinic[2] = {0, 0}, er[2] = {0, 0};
    for (const auto& [c, w] : in_window) {
        switch (c->claim_type) {
            case ClaimType::home_health: hh_days[w] += c->days; break;
            case ClaimType::inpatient:
                inpt_days[w] += c->days;
                inpt_admits[w] += 1.0;
                break;
            case ClaimType::snf: snf_any[w] = 1.0; break;
            case ClaimType::outpatient_clinic: clinic[w] += 1.0; break;
            case ClaimType::emergency: er[w] += 1.0; break;
            case ClaimType::dme: break;
        }
    }
    for (const double* util : {hh_days, inpt_days, snf_any, inpt_admits, clinic, er}) {
        for (int w = 0; w < n_windows; ++w) row.push_back(util[w]);
    }
    return row;
}

FeatureMatrix build_feature_matrix(const std::vector<Beneficiary>& beneficiaries,
                                   const std::vector<Claim>& claims,
                                   const CodeMap& code_map, const StudyConfig& config,
                                   const std::string& cohort_name,
                                   const std::string& variable_set,
                                   const WindowSplit& split) {
    const bool augmented = variable_set == "augmented";
    if (!augmented && variable_set != "traditional") {
        throw DataError("unknown variable_set '" + variable_set + "'");
    }

    std::vector<const Beneficiary*> sorted;
    sorted.reserve(beneficiaries.size());
    for (const auto& b : beneficiaries) sorted.push_back(&b);
    std::sort(sorted.begin(), sorted.end(),
              [](const Beneficiary* a, const Beneficiary* b) { return a->id < b->id; });

    std::unordered_map<std::string, std::vector<const Claim*>> claims_by_id;
    for (const auto& c : claims) claims_by_id[c.beneficiary_id].push_back(&c);

    FeatureMatrix m;
    m.cohort_name = cohort_name;
    m.variable_set = variable_set;
    m.window_split = augmented ? split : WindowSplit::none();
    m.column_names = augmented ? augmented_column_names(code_map, split)
                               : traditional_column_names(code_map);
    m.values.reserve(sorted.size() * m.column_names.size());

    static const std::vector<const Claim*> no_claims;
    for (const Beneficiary* b : sorted) {
        auto it = claims_by_id.find(b->id);
        const auto& own = it == claims_by_id.end() ? no_claims : it->second;
        auto row = augmented ? build_augmented(*b, own, code_map, config, split)
                             : build_traditional(*b, own, code_map, config);
        m.values.insert(m.values.end(), row.begin(), row.end());
        m.ids.push_back(b->id);
        m.labels.push_back(label_outcome(*b, config) ? 1 : 0);
    }
    m.check_consistent();
    return m;
}

}  // namespace claimrisk
