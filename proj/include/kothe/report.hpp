// report-v1: the versioned JSON report emitted by the CLI. Documents are
// byte-deterministic for identical inputs and seed (wall-clock timing is
// deliberately kept out of the JSON and printed on the human channel only),
// round-trip through from_json/to_json, and validate against the schema
// shipped in data/report-v1.schema.json.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kothe/decide.hpp"

namespace kothe::report {

std::string fnv1a64_hex(const std::string& data);

struct IndecEntry {
    std::string dim;    // "(2,1,1,1)"
    std::string c_top;
    std::string c_soc;
    bool operator==(const IndecEntry&) const = default;
};

struct SummandEntry {
    std::string dim;
    std::size_t multiplicity = 0;
    bool operator==(const SummandEntry&) const = default;
};

struct VerifyLine {
    std::string check;
    bool pass = false;
    bool operator==(const VerifyLine&) const = default;
};

struct RepFacts {
    std::string dim;
    std::string c_top;
    std::string c_total;
    std::string c_soc;
    bool indecomposable = false;
    std::size_t min_generators = 0;
    bool operator==(const RepFacts&) const = default;
};

struct Report {
    std::string command;
    std::string tool_version;
    std::string input_path;
    std::string input_digest;  // "fnv1a64:<hex>"
    std::string field;
    std::string seed;  // hex, e.g. "0xc0ffee"
    std::optional<decide::Verdict> verdict;
    std::optional<RepFacts> representation;
    std::vector<IndecEntry> indecomposables;
    std::optional<decide::MatrixDegree> matrix_degree;
    std::vector<SummandEntry> summands;
    std::vector<VerifyLine> verification;
    bool operator==(const Report& o) const;
};

nlohmann::json to_json(const Report& r);
Report from_json(const nlohmann::json& j);
// canonical bytes (sorted keys, two-space indent, trailing newline)
std::string dump_json(const Report& r);

// the shipped schema (identical to data/report-v1.schema.json)
const char* schema_v1_text();
// minimal validator for the schema subset used by report-v1; empty = valid
std::vector<std::string> validate_against_schema(const nlohmann::json& doc,
                                                 const nlohmann::json& schema);

}  // namespace kothe::report
