#include "spinor/verdict_record.hpp"

#include <ostream>
#include <sstream>

#include "spinor/errors.hpp"

namespace spinor {

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "md") return OutputFormat::Md;
    throw InvariantViolation("unknown output format \"" + name + "\" (expected json, csv or md)");
}

nlohmann::ordered_json record_to_json(const VerdictRecord& r) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    return nlohmann::ordered_json{
        {"group", r.group},
        {"family", r.family},
        {"parameters", params},
        {"theta_1", to_decimal(r.theta_1)},
        {"theta_inv", to_decimal(r.theta_inv)},
        {"m", to_decimal(r.m)},
        {"rule", r.rule},
        {"spinorial", r.spinorial},
    };
}

VerdictRecord record_from_json(const nlohmann::ordered_json& j) {
    VerdictRecord r;
    r.group = j.at("group").get<std::string>();
    r.family = j.at("family").get<std::string>();
    for (const auto& [k, v] : j.at("parameters").items())
        r.parameters.emplace_back(k, v.get<std::string>());
    r.theta_1 = Int(j.at("theta_1").get<std::string>());
    r.theta_inv = Int(j.at("theta_inv").get<std::string>());
    r.m = Int(j.at("m").get<std::string>());
    r.rule = j.at("rule").get<std::string>();
    r.spinorial = j.at("spinorial").get<bool>();
    return r;
}

namespace {

std::string join_params(const VerdictRecord& r, const char* sep) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : r.parameters) {
        if (!first) os << sep;
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

}  // namespace

std::string csv_header() { return "group,family,parameters,theta_1,theta_inv,m,rule,spinorial"; }

std::string record_to_csv(const VerdictRecord& r) {
    std::ostringstream os;
    os << r.group << ',' << r.family << ',' << '"' << join_params(r, ";") << '"' << ','
       << to_decimal(r.theta_1) << ',' << to_decimal(r.theta_inv) << ',' << to_decimal(r.m) << ','
       << r.rule << ',' << (r.spinorial ? "true" : "false");
    return os.str();
}

std::string md_header() {
    return "| group | family | parameters | theta_1 | theta_inv | m | rule | spinorial |\n"
           "|---|---|---|---|---|---|---|---|";
}

std::string record_to_md(const VerdictRecord& r) {
    std::ostringstream os;
    os << "| " << r.group << " | " << r.family << " | " << join_params(r, ", ") << " | "
       << to_decimal(r.theta_1) << " | " << to_decimal(r.theta_inv) << " | " << to_decimal(r.m)
       << " | " << r.rule << " | " << (r.spinorial ? "true" : "false") << " |";
    return os.str();
}

RecordWriter::RecordWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

RecordWriter::~RecordWriter() {
    if (!finished_) finish();
}

void RecordWriter::write(const VerdictRecord& r) {
    switch (format_) {
        case OutputFormat::Json:
            out_ << (first_ ? "[\n" : ",\n") << record_to_json(r).dump(2);
            break;
        case OutputFormat::Csv:
            if (first_) out_ << csv_header() << '\n';
            out_ << record_to_csv(r) << '\n';
            break;
        case OutputFormat::Md:
            if (first_) out_ << md_header() << '\n';
            out_ << record_to_md(r) << '\n';
            break;
    }
    first_ = false;
}

void RecordWriter::finish() {
    if (finished_) return;
    finished_ = true;
    if (format_ == OutputFormat::Json) out_ << (first_ ? "[]\n" : "\n]\n");
}

}  // namespace spinor
