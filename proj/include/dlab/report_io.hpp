#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dlab/identities.hpp"
#include "dlab/theorems.hpp"

namespace dlab::report_io {

enum class Format { Pretty, Jsonl, Csv };

Format parse_format(const std::string& name);  // pretty | jsonl | csv

// One emitted line, already stringified. Integer values are decimal strings;
// params that look numeric are emitted as JSON numbers.
struct Record {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    std::string modulus;
    bool pass = true;
    std::optional<std::pair<std::string, std::string>> witness;  // (index, value)
    std::vector<std::pair<std::string, std::string>> witness_extra;
    std::optional<long long> quotient_degree;
};

Record from(const identities::CheckResult& r);
Record from(const theorems::DivisibilityReport& r);

// CSV starts with a header row; the other formats are line-per-record.
void emit(std::ostream& os, const std::vector<Record>& records, Format format);

}  // namespace dlab::report_io
