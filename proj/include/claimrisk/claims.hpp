#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "claimrisk/csv.hpp"
#include "claimrisk/date.hpp"

namespace claimrisk {

enum class Sex { male, female };

enum class ClaimType { inpatient, outpatient_clinic, emergency, home_health, snf, dme };

const std::vector<std::string>& region_codes();    // 50 states + DC, alphabetical
const std::vector<std::string>& race_categories(); // white, black, hispanic, other

std::string to_string(Sex s);
std::string to_string(ClaimType t);
Sex parse_sex(const std::string& s);
ClaimType parse_claim_type(const std::string& s);

struct Beneficiary {
    std::string id;
    int age_at_t0 = 66;
    Sex sex = Sex::male;
    std::string state = "AL";
    std::string race = "white";
    int income_decile = 5;
    std::optional<Date> death_date;
    bool hospice_at_t0 = false;
};

struct Claim {
    std::string beneficiary_id;
    Date claim_date;
    ClaimType claim_type = ClaimType::outpatient_clinic;
    std::vector<std::string> dx_codes;
    std::string dme_code;  // non-empty iff claim_type == dme
    int days = 0;          // positive only for inpatient / home_health / snf
};

struct StudyConfig {
    Date t0 = Date::from_ymd(2010, 7, 1);
    int lookback_days = 360;
    int horizon_days = 183;
    int month_bin_days = 30;
    int rule_out_min_outpatient = 2;
    std::uint64_t seed = 0;

    void validate() const;
};

enum class GroupKind { comorbidity, functional, dme };

std::string to_string(GroupKind k);
GroupKind parse_group_kind(const std::string& s);

struct CodeGroup {
    std::string name;
    GroupKind kind = GroupKind::comorbidity;
    std::vector<std::string> prefixes;
};

/// Mapping from code prefixes to named feature groups. The comorbidity kind
/// carries exactly 20 groups, functional 7, dme 4; group names are unique
/// across kinds. Matching is by string prefix against a claim's dx codes
/// (or its dme code for dme-kind groups).
struct CodeMap {
    std::vector<CodeGroup> groups;  // file order preserved

    std::vector<const CodeGroup*> of_kind(GroupKind k) const;
    const CodeGroup* find(const std::string& name) const;
    void validate() const;
};

CodeMap parse_code_map(const std::string& text, const std::string& origin);
CodeMap load_code_map(const std::string& path);

/// Simplified prefix map bundled for synthetic data; not an authoritative
/// clinical code list.
const std::string& default_code_map_text();
const CodeMap& default_code_map();

bool claim_matches_group(const Claim& claim, const CodeGroup& group);

/// Month bin 1..12 counted back from t0 in fixed 30-day windows:
/// bin = ceil(d / month_bin_days) where d = days from claim_date to t0.
/// nullopt when the claim falls outside the look-back window.
std::optional<int> bin_claim_month(Date claim_date, const StudyConfig& config);

bool alive_at_t0(const Beneficiary& b, const StudyConfig& config);

/// Death strictly after t0 and no later than t0 + horizon_days.
bool label_outcome(const Beneficiary& b, const StudyConfig& config);

/// Rule-out handling: one facility claim (inpatient/snf/home_health), or at
/// least rule_out_min_outpatient outpatient-type claims on distinct dates.
/// The input must already be filtered to the look-back window and one group.
bool activate_indicator(const std::vector<const Claim*>& claims_for_group,
                        const StudyConfig& config);

/// Cohort memberships per beneficiary id. A beneficiary joins cohort g when
/// alive at t0, not in hospice, and at least one look-back claim matches g.
/// Memberships are not mutually exclusive.
std::map<std::string, std::set<std::string>> assign_cohorts(
    const std::vector<Beneficiary>& beneficiaries, const std::vector<Claim>& claims,
    const CodeMap& code_map, const StudyConfig& config,
    const std::vector<std::string>& cohort_groups);

std::vector<std::string> default_cohort_groups();  // chf, dementia, copd, tumor

// --- CSV file formats ---

extern const char* const kBeneficiaryHeader;  // id,age_at_t0,sex,state,race,income_decile,death_date,hospice_at_t0
extern const char* const kClaimHeader;        // beneficiary_id,claim_date,claim_type,dx_codes,dme_code,days

std::vector<Beneficiary> load_beneficiaries(const std::string& path);
std::vector<Claim> load_claims(const std::string& path);
std::string beneficiaries_to_csv(const std::vector<Beneficiary>& beneficiaries);
std::string claims_to_csv(const std::vector<Claim>& claims);

struct EligibilityResult {
    std::vector<Beneficiary> eligible;
    int rejected_dead = 0;     // death_date <= t0
    int rejected_hospice = 0;  // hospice_at_t0
    int rejected_age = 0;      // age_at_t0 < 66
    int total_rejected() const { return rejected_dead + rejected_hospice + rejected_age; }
};

/// Study-rule screening at ingestion: drops records that can never enter a
/// cohort and reports how many were dropped, by reason.
EligibilityResult filter_eligible(const std::vector<Beneficiary>& beneficiaries,
                                  const StudyConfig& config);

}  // namespace claimrisk
