#include "dlab/report_io.hpp"

#include <json.hpp>

namespace dlab::report_io {

using nlohmann::json;

Format parse_format(const std::string& name) {
    if (name == "pretty") return Format::Pretty;
    if (name == "jsonl") return Format::Jsonl;
    if (name == "csv") return Format::Csv;
    throw std::domain_error("unknown format: " + name);
}

Record from(const identities::CheckResult& r) {
    Record rec;
    rec.check = r.id;
    for (const auto& [k, v] : r.params) rec.params.emplace_back(k, std::to_string(v));
    rec.modulus = r.modulus.str();
    rec.pass = r.pass;
    for (const auto& [k, v] : r.witness) {
        if (k == "index" && !rec.witness)
            rec.witness = {v.str(), ""};
        else if (k == "value" && rec.witness && rec.witness->second.empty())
            rec.witness->second = v.str();
        else
            rec.witness_extra.emplace_back(k, v.str());
    }
    return rec;
}

Record from(const theorems::DivisibilityReport& r) {
    Record rec;
    rec.check = r.check_id;
    rec.params.emplace_back("family", std::string(1, sequences::family_letter(r.spec.family)));
    rec.params.emplace_back("n", std::to_string(r.spec.n));
    rec.params.emplace_back("h", std::to_string(r.spec.h));
    rec.params.emplace_back("m", std::to_string(r.spec.m));
    rec.params.emplace_back("a", std::to_string(r.spec.a));
    rec.params.emplace_back("eps", std::to_string(r.spec.eps));
    rec.modulus = r.modulus.str();
    rec.pass = r.pass;
    if (r.witness) rec.witness = {std::to_string(r.witness->index), r.witness->value.str()};
    rec.quotient_degree = r.quotient_degree;
    return rec;
}

namespace {

bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

// Values that fit a 64-bit int become JSON numbers, everything else strings;
// big integers (moduli, witnesses) are always decimal strings.
json param_value(const std::string& s) {
    if (looks_numeric(s) && s.size() <= 18) return json(std::stoll(s));
    return json(s);
}

void emit_jsonl(std::ostream& os, const Record& r) {
    json j;
    j["check"] = r.check;
    for (const auto& [k, v] : r.params) j[k] = param_value(v);
    j["modulus"] = r.modulus;
    j["pass"] = r.pass;
    if (r.witness) {
        json w;
        w["index"] = param_value(r.witness->first);
        w["value"] = r.witness->second;
        for (const auto& [k, v] : r.witness_extra) w[k] = v;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    if (r.quotient_degree) j["quotient_degree"] = *r.quotient_degree;
    os << j.dump() << '\n';
}

std::string params_joined(const Record& r, char sep) {
    std::string out;
    for (const auto& [k, v] : r.params) {
        if (!out.empty()) out += sep;
        out += k + "=" + v;
    }
    return out;
}

void emit_csv(std::ostream& os, const Record& r) {
    os << r.check << ',' << params_joined(r, ';') << ',' << r.modulus << ','
       << (r.pass ? "true" : "false") << ',';
    if (r.witness) os << r.witness->first;
    os << ',';
    if (r.witness) os << r.witness->second;
    os << ',';
    if (r.quotient_degree) os << *r.quotient_degree;
    os << '\n';
}

void emit_pretty(std::ostream& os, const Record& r) {
    os << (r.pass ? "[ ok ] " : "[FAIL] ") << r.check << ' ' << params_joined(r, ' ')
       << " modulus=" << r.modulus;
    if (r.quotient_degree) os << " deg=" << *r.quotient_degree;
    if (r.witness) {
        os << " witness: index=" << r.witness->first << " value=" << r.witness->second;
        for (const auto& [k, v] : r.witness_extra) os << ' ' << k << '=' << v;
    }
    os << '\n';
}

}  // namespace

void emit(std::ostream& os, const std::vector<Record>& records, Format format) {
    if (format == Format::Csv)
        os << "check,params,modulus,pass,witness_index,witness_value,quotient_degree\n";
    for (const Record& r : records) {
        switch (format) {
            case Format::Pretty: emit_pretty(os, r); break;
            case Format::Jsonl: emit_jsonl(os, r); break;
            case Format::Csv: emit_csv(os, r); break;
        }
    }
}

}  // namespace dlab::report_io
