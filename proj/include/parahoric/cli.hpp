#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "parahoric/verify.hpp"

namespace parahoric::cli {

using Json = nlohmann::ordered_json;

// A parsed command. String specs are kept verbatim; canonical echoes land in
// the result table's "request" object, so format(parse(s)) is observable.
struct CommandRequest {
    std::string command;
    std::string type_spec;
    std::optional<std::vector<int>> facet;
    std::optional<std::vector<int>> facet_b;
    std::vector<std::string> point;
    long genus = 0;
    bool genus_given = false;
    std::string ram;
    std::string sigma;
    bool all = false;
    int max_rank = 4;
    std::string format = "json";
    std::string out;
};

struct RunResult {
    Json table;
    int exit_code = 0;
};

// Dispatches to the module operations and assembles the result table.
// Throws validation_error for bad requests; internal_error states exit as
// falsifications (exit code 2) in main_impl.
RunResult run(const CommandRequest& request);

std::string render(const Json& table, const std::string& format);

// Spec parsers, exposed for tests. All canonicalize.
std::vector<int> parse_facet_spec(const std::string& spec);
QVec parse_point_spec(const std::vector<std::string>& spec, int rank);
std::string format_point(const QVec& point);
struct RamEntry {
    long order;
    std::vector<std::string> coords;
};
std::vector<RamEntry> parse_ram_spec(const std::string& spec);
std::string format_ram_spec(const std::vector<RamEntry>& entries);

// Full command line entry: parse, run, render to --out or stdout.
// Exit status 0 on success, 1 on validation errors, 2 on falsifications.
int main_impl(const std::vector<std::string>& args);

}  // namespace parahoric::cli
