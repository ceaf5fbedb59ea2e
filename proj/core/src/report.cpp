#include "wzsum/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace wzsum {

namespace {

// Numeric-aware comparison of parameter values so that l=10 sorts after l=2.
int compare_values(const std::string& a, const std::string& b) {
    auto is_int = [](const std::string& v) {
        if (v.empty())
            return false;
        size_t i = (v[0] == '-') ? 1 : 0;
        if (i == v.size())
            return false;
        return std::all_of(v.begin() + i, v.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    if (is_int(a) && is_int(b)) {
        long long va = std::stoll(a);
        long long vb = std::stoll(b);
        return va < vb ? -1 : (va > vb ? 1 : 0);
    }
    return a.compare(b);
}

bool record_less(const Record& a, const Record& b) {
    if (a.kind != b.kind)
        return a.kind < b.kind;
    size_t n = std::min(a.params.size(), b.params.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.params[i].first != b.params[i].first)
            return a.params[i].first < b.params[i].first;
        int cmp = compare_values(a.params[i].second, b.params[i].second);
        if (cmp != 0)
            return cmp < 0;
    }
    return a.params.size() < b.params.size();
}

bool is_congruence_kind(const std::string& kind) {
    return kind.rfind("congruence", 0) == 0;
}

nlohmann::ordered_json rational_json(const Rational& r) {
    return {{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

nlohmann::ordered_json record_json(const Record& r) {
    nlohmann::ordered_json j;
    j["kind"] = r.kind;
    nlohmann::ordered_json params;
    for (const auto& [k, v] : r.params)
        params[k] = v;
    j["params"] = params;
    bool sum_naming = is_congruence_kind(r.kind);
    if (r.value)
        j[sum_naming ? "sum" : "lhs"] = rational_json(*r.value);
    if (r.expected_value)
        j["rhs"] = rational_json(*r.expected_value);
    if (r.modulus)
        j["modulus"] = r.modulus->get_str();
    if (r.residue)
        j["residue"] = r.residue->get_str();
    if (r.expected_residue)
        j["expected"] = r.expected_residue->get_str();
    j["status"] = r.status;
    j["assertion"] = r.assertion;
    if (!r.label.empty())
        j["label"] = r.label;
    if (!r.note.empty())
        j["note"] = r.note;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string csv_escape(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos)
        return v;
    std::string out = "\"";
    for (char c : v) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string param_string(const Record& r) {
    std::string out;
    for (const auto& [k, v] : r.params) {
        if (!out.empty())
            out += ";";
        out += k + "=" + v;
    }
    return out;
}

} // namespace

void RecordSet::sort() {
    std::stable_sort(records_.begin(), records_.end(), record_less);
}

size_t RecordSet::count_with_status(const std::string& s) const {
    return static_cast<size_t>(std::count_if(records_.begin(), records_.end(),
                                             [&](const Record& r) { return r.status == s; }));
}

bool RecordSet::all_asserted_pass() const {
    return std::none_of(records_.begin(), records_.end(), [](const Record& r) {
        return r.assertion == assertion::kAsserted && r.status == status::kFail;
    });
}

std::string RecordSet::to_json(const std::string& command) const {
    nlohmann::ordered_json j;
    j["command"] = command;
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const Record& r : records_)
        records.push_back(record_json(r));
    j["records"] = records;
    j["summary"] = {
        {"total", records_.size()},
        {"pass", count_with_status(status::kPass)},
        {"fail", count_with_status(status::kFail)},
        {"skip", count_with_status(status::kSkip)},
        {"not_applicable", count_with_status(status::kNotApplicable)},
    };
    return j.dump(2) + "\n";
}

std::string RecordSet::to_csv() const {
    std::ostringstream os;
    os << "kind,params,value_num,value_den,rhs_num,rhs_den,modulus,residue,expected,"
          "status,assertion,label,note,elapsed_ms\n";
    for (const Record& r : records_) {
        os << csv_escape(r.kind) << "," << csv_escape(param_string(r)) << ",";
        os << (r.value ? r.value->numerator().get_str() : "") << ","
           << (r.value ? r.value->denominator().get_str() : "") << ",";
        os << (r.expected_value ? r.expected_value->numerator().get_str() : "") << ","
           << (r.expected_value ? r.expected_value->denominator().get_str() : "") << ",";
        os << (r.modulus ? r.modulus->get_str() : "") << ","
           << (r.residue ? r.residue->get_str() : "") << ","
           << (r.expected_residue ? r.expected_residue->get_str() : "") << ",";
        os << r.status << "," << r.assertion << "," << csv_escape(r.label) << ","
           << csv_escape(r.note) << "," << r.elapsed_ms << "\n";
    }
    return os.str();
}

std::string RecordSet::to_text(const std::string& command) const {
    std::ostringstream os;
    os << "== " << command << " ==\n";
    for (const Record& r : records_) {
        os << std::left << std::setw(15) << ("[" + r.status + "]") << r.kind;
        std::string params = param_string(r);
        if (!params.empty())
            os << "  " << params;
        if (!r.label.empty())
            os << "  (" << r.label << ")";
        if (r.residue && r.expected_residue && r.modulus)
            os << "  residue " << r.residue->get_str() << " expected "
               << r.expected_residue->get_str() << " mod " << r.modulus->get_str();
        if (!r.note.empty())
            os << "  -- " << r.note;
        os << "\n";
    }
    os << "total " << records_.size()
       << "  pass " << count_with_status(status::kPass)
       << "  fail " << count_with_status(status::kFail)
       << "  skip " << count_with_status(status::kSkip)
       << "  n/a " << count_with_status(status::kNotApplicable) << "\n";
    return os.str();
}

} // namespace wzsum
