#include <fstream>
#include <sstream>
#include <unordered_set>

#include "claimrisk/claims.hpp"

namespace claimrisk {

std::string to_string(GroupKind k) {
    switch (k) {
        case GroupKind::comorbidity: return "comorbidity";
        case GroupKind::functional: return "functional";
        case GroupKind::dme: return "dme";
    }
    return "?";
}

GroupKind parse_group_kind(const std::string& s) {
    if (s == "comorbidity") return GroupKind::comorbidity;
    if (s == "functional") return GroupKind::functional;
    if (s == "dme") return GroupKind::dme;
    throw DataError("unknown group_kind '" + s + "'");
}

std::vector<const CodeGroup*> CodeMap::of_kind(GroupKind k) const {
    std::vector<const CodeGroup*> out;
    for (const auto& g : groups) {
        if (g.kind == k) out.push_back(&g);
    }
    return out;
}

const CodeGroup* CodeMap::find(const std::string& name) const {
    for (const auto& g : groups) {
        if (g.name == name) return &g;
    }
    return nullptr;
}

void CodeMap::validate() const {
    std::unordered_set<std::string> names;
    for (const auto& g : groups) {
        if (!names.insert(g.name).second) {
            throw DataError("code map: duplicate group name '" + g.name + "'");
        }
        if (g.prefixes.empty()) {
            throw DataError("code map: group '" + g.name + "' has no prefixes");
        }
        for (const auto& p : g.prefixes) {
            if (p.empty()) {
                throw DataError("code map: group '" + g.name + "' has an empty prefix");
            }
        }
    }
    auto expect = [&](GroupKind kind, std::size_t n) {
        std::size_t got = of_kind(kind).size();
        if (got != n) {
            throw DataError("code map: " + to_string(kind) + " kind has " +
                            std::to_string(got) + " groups, expected " + std::to_string(n));
        }
    };
    expect(GroupKind::comorbidity, 20);
    expect(GroupKind::functional, 7);
    expect(GroupKind::dme, 4);
}

CodeMap parse_code_map(const std::string& text, const std::string& origin) {
    CodeMap map;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto f = split(line, ',');
        if (f.size() != 3) {
            throw DataError(origin + ":" + std::to_string(line_no) +
                            ": expected 'group_kind,group_name,prefix1;prefix2;...'");
        }
        CodeGroup g;
        g.kind = parse_group_kind(f[0]);
        g.name = f[1];
        if (g.name.empty()) {
            throw DataError(origin + ":" + std::to_string(line_no) + ": empty group name");
        }
        g.prefixes = split(f[2], ';');
        map.groups.push_back(std::move(g));
    }
    map.validate();
    return map;
}

CodeMap load_code_map(const std::string& path) {
    return parse_code_map(read_text_file(path), path);
}

const std::string& default_code_map_text() {
    // Simplified single-prefix-family stand-ins; real deployments supply their
    // own authoritative mapping through the same file format.
    static const std::string text =
        "# bundled default code map (synthetic data only)\n"
        "comorbidity,alcohol_abuse,303\n"
        "comorbidity,deficiency_anemia,280;281\n"
        "comorbidity,cardiac_arrhythmias,427\n"
        "comorbidity,coagulopathy,286\n"
        "comorbidity,complicated_diabetes,2504;2505;2506;2507\n"
        "comorbidity,dementia,290;2941\n"
        "comorbidity,fluid_electrolyte,276\n"
        "comorbidity,hemiplegia,342\n"
        "comorbidity,hiv_aids,042\n"
        "comorbidity,hypertension,401;402;403;404;405\n"
        "comorbidity,liver_disease,570;571;572\n"
        "comorbidity,metastatic_cancer,196;197;198;199\n"
        "comorbidity,chf,428\n"
        "comorbidity,psychosis,295;296;297;298\n"
        "comorbidity,copd,491;492;496\n"
        "comorbidity,chronic_pulmonary,493;494;495\n"
        "comorbidity,peripheral_vascular,443\n"
        "comorbidity,renal_failure,585;586\n"
        "comorbidity,tumor,140;153;162;174;185;188\n"
        "comorbidity,weight_loss,7832;2631\n"
        "functional,aerodigestive_gi_gu,787;788\n"
        "functional,aerodigestive_nutrition,7837;2639\n"
        "functional,aerodigestive_respiratory,7860;5188\n"
        "functional,general_weakness,7288;7807\n"
        "functional,general_mobility,7812;7197\n"
        "functional,cognition,78093;3310\n"
        "functional,sensorium_speech,7843;3689;3899\n"
        "dme,dme_bed,E025\n"
        "dme,dme_cane_walker,E010;E013;E014\n"
        "dme,dme_o2,E042;E139\n"
        "dme,dme_wheelchair,E113;K001\n";
    return text;
}

const CodeMap& default_code_map() {
    static const CodeMap map = parse_code_map(default_code_map_text(), "<bundled>");
    return map;
}

}  // namespace claimrisk
