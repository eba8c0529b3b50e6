#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twistmod/checks.hpp"

namespace twistmod::cli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct ChainStep {
    enum class Kind { InnerSemisimple, InnerNilpotent, DiagramData, TransportTau };
    Kind kind = Kind::InnerSemisimple;
    std::map<std::string, Rational> element;          // inner steps: name -> coefficient
    std::vector<int> permutation;                     // diagramData
    std::string tau_name;                             // transportTau: named automorphism
    std::vector<std::vector<Rational>> tau_matrix;    // transportTau: explicit matrix (rows)
};

struct CheckSpec {
    std::string name;
    CheckRange range;
    int kmax = 6;
    int derivative_order = 1;
    std::vector<std::pair<std::string, std::string>> pairs;  // commutator pairs; empty: all
};

struct TableSpec {
    bool enabled = true;
    int mode_range = 3;
    std::vector<std::string> generators;  // empty: all Chevalley generators
};

struct RunConfig {
    int schema_version = kSchemaVersion;
    char algebra_type = 'A';
    int rank = 1;
    Rational level;
    std::vector<int> lambda;
    Rational cutoff = Rational(4);
    GradingMode grading_mode = GradingMode::CmodZ;
    std::vector<ChainStep> chain;
    std::vector<CheckSpec> checks;
    TableSpec tables;
    std::string output_format = "json";
    std::string output_path;
};

std::string_view step_kind_name(ChainStep::Kind k);

/// Throws TwistError(InvalidConfig) on schema violations.
RunConfig parse_config(const Json& j);
RunConfig load_config(const std::string& path);
/// Canonical form; parse_config(to_json(c)) == c.
Json to_json(const RunConfig& c);

/// Names accepted in "checks".
const std::vector<std::string>& known_checks();

}  // namespace twistmod::cli
