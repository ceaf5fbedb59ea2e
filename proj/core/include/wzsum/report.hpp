#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wzsum/rational.hpp"

namespace wzsum {

/// Record status. SKIP, NOT-APPLICABLE and REPORT-ONLY records never affect
/// a run's exit code; only ASSERTED FAILs do.
namespace status {
inline constexpr const char* kPass = "PASS";
inline constexpr const char* kFail = "FAIL";
inline constexpr const char* kSkip = "SKIP";
inline constexpr const char* kNotApplicable = "NOT-APPLICABLE";
} // namespace status

namespace assertion {
inline constexpr const char* kAsserted = "ASSERTED";
inline constexpr const char* kReportOnly = "REPORT-ONLY";
} // namespace assertion

/// One verification record. Rationals are serialized as decimal
/// numerator/denominator string pairs; integers as decimal strings.
struct Record {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> params; // insertion-ordered
    std::optional<Rational> value;            // "lhs" (identities) or "sum" (congruences)
    std::optional<Rational> expected_value;   // "rhs"
    std::optional<Integer> modulus;
    std::optional<Integer> residue;
    std::optional<Integer> expected_residue;  // "expected"
    std::string status = status::kPass;
    std::string assertion = assertion::kAsserted;
    std::string label;                        // PROVEN-REF / CONJECTURE, when meaningful
    std::string note;
    double elapsed_ms = 0.0;

    Record& with(std::string key, std::string val) {
        params.emplace_back(std::move(key), std::move(val));
        return *this;
    }
    Record& with(std::string key, long val) { return with(std::move(key), std::to_string(val)); }
};

/// An ordered collection of records with deterministic serialization:
/// records are sorted by (kind, parameter tuple) before rendering.
class RecordSet {
public:
    void add(Record record) { records_.push_back(std::move(record)); }

    const std::vector<Record>& records() const { return records_; }
    bool empty() const { return records_.empty(); }
    size_t size() const { return records_.size(); }

    /// Stable sort by kind, then parameter values (numeric where possible).
    void sort();

    size_t count_with_status(const std::string& s) const;

    /// True iff no ASSERTED record FAILed.
    bool all_asserted_pass() const;

    std::string to_json(const std::string& command) const;
    std::string to_csv() const;
    std::string to_text(const std::string& command) const;

private:
    std::vector<Record> records_;
};

} // namespace wzsum
