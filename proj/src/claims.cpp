#include "claimrisk/claims.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace claimrisk {

const std::vector<std::string>& region_codes() {
    static const std::vector<std::string> codes = {
        "AK", "AL", "AR", "AZ", "CA", "CO", "CT", "DC", "DE", "FL", "GA", "HI", "IA",
        "ID", "IL", "IN", "KS", "KY", "LA", "MA", "MD", "ME", "MI", "MN", "MO", "MS",
        "MT", "NC", "ND", "NE", "NH", "NJ", "NM", "NV", "NY", "OH", "OK", "OR", "PA",
        "RI", "SC", "SD", "TN", "TX", "UT", "VA", "VT", "WA", "WI", "WV", "WY"};
    return codes;
}

const std::vector<std::string>& race_categories() {
    static const std::vector<std::string> races = {"white", "black", "hispanic", "other"};
    return races;
}

std::string to_string(Sex s) { return s == Sex::male ? "male" : "female"; }

Sex parse_sex(const std::string& s) {
    if (s == "male") return Sex::male;
    if (s == "female") return Sex::female;
    throw DataError("unknown sex '" + s + "'");
}

std::string to_string(ClaimType t) {
    switch (t) {
        case ClaimType::inpatient: return "inpatient";
        case ClaimType::outpatient_clinic: return "outpatient_clinic";
        case ClaimType::emergency: return "emergency";
        case ClaimType::home_health: return "home_health";
        case ClaimType::snf: return "snf";
        case ClaimType::dme: return "dme";
    }
    return "?";
}

ClaimType parse_claim_type(const std::string& s) {
    if (s == "inpatient") return ClaimType::inpatient;
    if (s == "outpatient_clinic") return ClaimType::outpatient_clinic;
    if (s == "emergency") return ClaimType::emergency;
    if (s == "home_health") return ClaimType::home_health;
    if (s == "snf") return ClaimType::snf;
    if (s == "dme") return ClaimType::dme;
    throw DataError("unknown claim_type '" + s + "'");
}

void StudyConfig::validate() const {
    if (horizon_days <= 0) throw DataError("horizon_days must be positive");
    if (month_bin_days <= 0) throw DataError("month_bin_days must be positive");
    if (lookback_days != 12 * month_bin_days) {
        throw DataError("lookback_days must equal 12 * month_bin_days");
    }
    if (rule_out_min_outpatient < 1) {
        throw DataError("rule_out_min_outpatient must be at least 1");
    }
}

bool claim_matches_group(const Claim& claim, const CodeGroup& group) {
    if (group.kind == GroupKind::dme) {
        if (claim.claim_type != ClaimType::dme) return false;
        for (const auto& prefix : group.prefixes) {
            if (claim.dme_code.rfind(prefix, 0) == 0) return true;
        }
        return false;
    }
    for (const auto& code : claim.dx_codes) {
        for (const auto& prefix : group.prefixes) {
            if (code.rfind(prefix, 0) == 0) return true;
        }
    }
    return false;
}

std::optional<int> bin_claim_month(Date claim_date, const StudyConfig& config) {
    const int d = claim_date.days_until(config.t0);
    if (d < 1 || d > config.lookback_days) return std::nullopt;
    return (d + config.month_bin_days - 1) / config.month_bin_days;
}

bool alive_at_t0(const Beneficiary& b, const StudyConfig& config) {
    return !b.death_date || *b.death_date > config.t0;
}

bool label_outcome(const Beneficiary& b, const StudyConfig& config) {
    if (!b.death_date) return false;
    return *b.death_date > config.t0 &&
           config.t0.days_until(*b.death_date) <= config.horizon_days;
}

bool activate_indicator(const std::vector<const Claim*>& claims_for_group,
                        const StudyConfig& config) {
    std::set<std::int32_t> outpatient_dates;
    for (const Claim* c : claims_for_group) {
        switch (c->claim_type) {
            case ClaimType::inpatient:
            case ClaimType::snf:
            case ClaimType::home_health:
                return true;
            case ClaimType::outpatient_clinic:
            case ClaimType::emergency:
            case ClaimType::dme:
                outpatient_dates.insert(c->claim_date.serial());
                break;
        }
    }
    return static_cast<int>(outpatient_dates.size()) >= config.rule_out_min_outpatient;
}

std::map<std::string, std::set<std::string>> assign_cohorts(
    const std::vector<Beneficiary>& beneficiaries, const std::vector<Claim>& claims,
    const CodeMap& code_map, const StudyConfig& config,
    const std::vector<std::string>& cohort_groups) {
    std::vector<const CodeGroup*> groups;
    for (const auto& name : cohort_groups) {
        const CodeGroup* g = code_map.find(name);
        if (!g || g->kind != GroupKind::comorbidity) {
            throw DataError("unknown cohort group '" + name + "'");
        }
        groups.push_back(g);
    }

    std::map<std::string, std::set<std::string>> memberships;
    std::unordered_map<std::string, const Beneficiary*> by_id;
    for (const auto& b : beneficiaries) {
        by_id[b.id] = &b;
        memberships[b.id];  // every beneficiary gets an entry, possibly empty
    }

    for (const auto& claim : claims) {
        if (!bin_claim_month(claim.claim_date, config)) continue;
        auto it = by_id.find(claim.beneficiary_id);
        if (it == by_id.end()) continue;
        const Beneficiary& b = *it->second;
        if (!alive_at_t0(b, config) || b.hospice_at_t0) continue;
        for (const CodeGroup* g : groups) {
            if (claim_matches_group(claim, *g)) memberships[b.id].insert(g->name);
        }
    }
    return memberships;
}

std::vector<std::string> default_cohort_groups() {
    return {"chf", "dementia", "copd", "tumor"};
}

const char* const kBeneficiaryHeader =
    "id,age_at_t0,sex,state,race,income_decile,death_date,hospice_at_t0";
const char* const kClaimHeader = "beneficiary_id,claim_date,claim_type,dx_codes,dme_code,days";

namespace {

void check_state(const std::string& state, const std::string& where) {
    const auto& codes = region_codes();
    if (!std::binary_search(codes.begin(), codes.end(), state)) {
        throw DataError(where + ": unknown state code '" + state + "'");
    }
}

void check_race(const std::string& race, const std::string& where) {
    const auto& races = race_categories();
    if (std::find(races.begin(), races.end(), race) == races.end()) {
        throw DataError(where + ": unknown race '" + race + "'");
    }
}

bool parse_bool(const std::string& s, const std::string& where) {
    if (s == "1" || s == "true") return true;
    if (s == "0" || s == "false") return false;
    throw DataError(where + ": expected boolean 0/1/true/false, got '" + s + "'");
}

}  // namespace

std::vector<Beneficiary> load_beneficiaries(const std::string& path) {
    CsvReader reader(path);
    std::string line;
    if (!reader.next(line) || line != kBeneficiaryHeader) {
        throw DataError(path + ": expected header '" + kBeneficiaryHeader + "'");
    }
    std::vector<Beneficiary> out;
    std::unordered_set<std::string> seen;
    while (reader.next(line)) {
        if (line.empty()) continue;
        auto f = reader.fields(line, 8);
        Beneficiary b;
        b.id = f[0];
        if (b.id.empty()) throw DataError(reader.location() + ": empty beneficiary id");
        if (!seen.insert(b.id).second) {
            throw DataError(reader.location() + ": duplicate beneficiary id '" + b.id + "'");
        }
        b.age_at_t0 = static_cast<int>(parse_int(f[1], "age_at_t0"));
        b.sex = parse_sex(f[2]);
        check_state(f[3], reader.location());
        b.state = f[3];
        check_race(f[4], reader.location());
        b.race = f[4];
        b.income_decile = static_cast<int>(parse_int(f[5], "income_decile"));
        if (b.income_decile < 1 || b.income_decile > 10) {
            throw DataError(reader.location() + ": income_decile out of range [1,10]");
        }
        if (!f[6].empty()) b.death_date = Date::parse(f[6]);
        b.hospice_at_t0 = parse_bool(f[7], reader.location());
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<Claim> load_claims(const std::string& path) {
    CsvReader reader(path);
    std::string line;
    if (!reader.next(line) || line != kClaimHeader) {
        throw DataError(path + ": expected header '" + kClaimHeader + "'");
    }
    std::vector<Claim> out;
    while (reader.next(line)) {
        if (line.empty()) continue;
        auto f = reader.fields(line, 6);
        Claim c;
        c.beneficiary_id = f[0];
        if (c.beneficiary_id.empty()) {
            throw DataError(reader.location() + ": empty beneficiary_id");
        }
        c.claim_date = Date::parse(f[1]);
        c.claim_type = parse_claim_type(f[2]);
        if (!f[3].empty()) {
            c.dx_codes = split(f[3], ';');
            for (const auto& code : c.dx_codes) {
                if (code.empty()) {
                    throw DataError(reader.location() + ": empty dx code");
                }
            }
        }
        c.dme_code = f[4];
        if ((c.claim_type == ClaimType::dme) != !c.dme_code.empty()) {
            throw DataError(reader.location() +
                            ": dme_code must be present exactly when claim_type is dme");
        }
        c.days = static_cast<int>(parse_int(f[5], "days"));
        if (c.days < 0) throw DataError(reader.location() + ": negative days");
        const bool stay_type = c.claim_type == ClaimType::inpatient ||
                               c.claim_type == ClaimType::home_health ||
                               c.claim_type == ClaimType::snf;
        if (c.days > 0 && !stay_type) {
            throw DataError(reader.location() + ": days > 0 only valid for stay-type claims");
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string beneficiaries_to_csv(const std::vector<Beneficiary>& beneficiaries) {
    std::string out = kBeneficiaryHeader;
    out.push_back('\n');
    for (const auto& b : beneficiaries) {
        out += b.id;
        out += ',' + std::to_string(b.age_at_t0);
        out += ',' + to_string(b.sex);
        out += ',' + b.state;
        out += ',' + b.race;
        out += ',' + std::to_string(b.income_decile);
        out += ',';
        if (b.death_date) out += b.death_date->to_string();
        out += ',';
        out += b.hospice_at_t0 ? '1' : '0';
        out.push_back('\n');
    }
    return out;
}

std::string claims_to_csv(const std::vector<Claim>& claims) {
    std::string out = kClaimHeader;
    out.push_back('\n');
    for (const auto& c : claims) {
        out += c.beneficiary_id;
        out += ',' + c.claim_date.to_string();
        out += ',' + to_string(c.claim_type);
        out += ',' + join(c.dx_codes, ';');
        out += ',' + c.dme_code;
        out += ',' + std::to_string(c.days);
        out.push_back('\n');
    }
    return out;
}

EligibilityResult filter_eligible(const std::vector<Beneficiary>& beneficiaries,
                                  const StudyConfig& config) {
    EligibilityResult result;
    for (const auto& b : beneficiaries) {
        if (b.age_at_t0 < 66) {
            ++result.rejected_age;
        } else if (!alive_at_t0(b, config)) {
            ++result.rejected_dead;
        } else if (b.hospice_at_t0) {
            ++result.rejected_hospice;
        } else {
            result.eligible.push_back(b);
        }
    }
    return result;
}

}  // namespace claimrisk
