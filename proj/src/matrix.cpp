#include "claimrisk/matrix.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "claimrisk/csv.hpp"

namespace claimrisk {

int FeatureMatrix::column_index(const std::string& name) const {
    auto it = std::find(column_names.begin(), column_names.end(), name);
    if (it == column_names.end()) return -1;
    return static_cast<int>(it - column_names.begin());
}

std::size_t FeatureMatrix::count_events() const {
    std::size_t n = 0;
    for (auto l : labels) n += l;
    return n;
}

FeatureMatrix FeatureMatrix::subset_by_ids(const std::vector<std::string>& keep) const {
    std::unordered_set<std::string> wanted(keep.begin(), keep.end());
    FeatureMatrix out;
    out.column_names = column_names;
    out.cohort_name = cohort_name;
    out.variable_set = variable_set;
    out.window_split = window_split;
    for (std::size_t r = 0; r < n_rows(); ++r) {
        if (!wanted.count(ids[r])) continue;
        out.ids.push_back(ids[r]);
        out.labels.push_back(labels[r]);
        out.values.insert(out.values.end(), row(r), row(r) + n_cols());
    }
    return out;
}

void FeatureMatrix::check_consistent() const {
    if (values.size() != n_rows() * n_cols() || ids.size() != n_rows()) {
        throw std::runtime_error("feature matrix shape mismatch");
    }
}

std::string feature_matrix_to_csv(const FeatureMatrix& m) {
    m.check_consistent();
    std::string out = "id";
    for (const auto& name : m.column_names) out += ',' + name;
    out += ",label\n";
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        out += m.ids[r];
        for (std::size_t c = 0; c < m.n_cols(); ++c) {
            out += ',' + format_number(m.at(r, c));
        }
        out += ',';
        out += m.labels[r] ? '1' : '0';
        out.push_back('\n');
    }
    return out;
}

std::string feature_matrix_meta(const FeatureMatrix& m) {
    std::string b = m.window_split.boundary ? std::to_string(*m.window_split.boundary)
                                            : std::string("none");
    return "cohort=" + m.cohort_name + ";variable_set=" + m.variable_set +
           ";boundary=" + b + "\n";
}

FeatureMatrix load_feature_matrix(const std::string& csv_path) {
    CsvReader reader(csv_path);
    std::string line;
    if (!reader.next(line)) throw DataError(csv_path + ": empty file");
    auto header = split(line, ',');
    if (header.size() < 2 || header.front() != "id" || header.back() != "label") {
        throw DataError(csv_path + ": expected header 'id,<columns...>,label'");
    }
    FeatureMatrix m;
    m.column_names.assign(header.begin() + 1, header.end() - 1);
    const std::size_t n_fields = header.size();
    while (reader.next(line)) {
        if (line.empty()) continue;
        auto f = reader.fields(line, n_fields);
        m.ids.push_back(f[0]);
        for (std::size_t c = 0; c + 2 < n_fields; ++c) {
            m.values.push_back(parse_double(f[c + 1], m.column_names[c]));
        }
        const std::string& lab = f.back();
        if (lab != "0" && lab != "1") {
            throw DataError(reader.location() + ": label must be 0 or 1");
        }
        m.labels.push_back(lab == "1" ? 1 : 0);
    }

    auto meta_path = csv_path + ".meta";
    std::ifstream meta(meta_path);
    if (meta) {
        std::string meta_line;
        std::getline(meta, meta_line);
        for (const auto& kv : split(meta_line, ';')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) continue;
            auto key = kv.substr(0, eq);
            auto value = kv.substr(eq + 1);
            if (key == "cohort") m.cohort_name = value;
            if (key == "variable_set") m.variable_set = value;
            if (key == "boundary" && value != "none") {
                m.window_split.boundary = static_cast<int>(parse_int(value, "boundary"));
            }
        }
    }
    m.check_consistent();
    return m;
}

}  // namespace claimrisk
