#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spinor/numeric.hpp"

namespace spinor {

enum class OutputFormat { Json, Csv, Md };

OutputFormat parse_format(const std::string& name);  // throws InvariantViolation

/// One verdict as emitted by the CLI. Integers are serialized as decimal
/// strings so nothing is truncated at 64 bits; `parameters` keeps insertion
/// order for byte-stable output.
struct VerdictRecord {
    std::string group;
    std::string family;
    std::vector<std::pair<std::string, std::string>> parameters;
    Int theta_1 = 0;
    Int theta_inv = 0;
    Int m = 0;
    std::string rule;
    bool spinorial = false;
};

nlohmann::ordered_json record_to_json(const VerdictRecord& r);
VerdictRecord record_from_json(const nlohmann::ordered_json& j);

std::string csv_header();
std::string record_to_csv(const VerdictRecord& r);

std::string md_header();
std::string record_to_md(const VerdictRecord& r);

/// Streaming writer producing a JSON array / CSV table / markdown table.
class RecordWriter {
  public:
    RecordWriter(std::ostream& out, OutputFormat format);
    ~RecordWriter();
    void write(const VerdictRecord& r);
    void finish();

  private:
    std::ostream& out_;
    OutputFormat format_;
    bool first_ = true;
    bool finished_ = false;
};

}  // namespace spinor
