#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "twistmod/errors.hpp"

namespace twistmod::cli {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw TwistError(ErrorCode::InvalidConfig, what); }

void allow_keys(const Json& j, const std::string& where, std::initializer_list<const char*> keys) {
    if (!j.is_object()) invalid(where + " must be an object");
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) invalid("unknown key '" + k + "' in " + where);
}

Rational rational_of(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) invalid(where + " must be a rational string \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception&) {
        invalid(where + ": malformed rational '" + j.get<std::string>() + "'");
    }
}

int int_of(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) invalid(where + " must be an integer");
    return j.get<int>();
}

std::map<std::string, Rational> element_of(const Json& j, const std::string& where) {
    if (!j.is_object() || j.empty()) invalid(where + " must be a non-empty object name -> \"p/q\"");
    std::map<std::string, Rational> out;
    for (const auto& [k, v] : j.items()) out[k] = rational_of(v, where + "." + k);
    return out;
}

ChainStep::Kind kind_of(const std::string& s) {
    if (s == "innerSemisimple") return ChainStep::Kind::InnerSemisimple;
    if (s == "innerNilpotent") return ChainStep::Kind::InnerNilpotent;
    if (s == "diagramData") return ChainStep::Kind::DiagramData;
    if (s == "transportTau") return ChainStep::Kind::TransportTau;
    invalid("unknown twist step kind '" + s + "'");
}

GradingMode grading_of(const std::string& s) {
    if (s == "CmodZ") return GradingMode::CmodZ;
    if (s == "C") return GradingMode::C;
    if (s == "stronglyC") return GradingMode::StronglyC;
    invalid("unknown grading mode '" + s + "'");
}

std::string grading_str(GradingMode m) {
    switch (m) {
        case GradingMode::CmodZ: return "CmodZ";
        case GradingMode::C: return "C";
        case GradingMode::StronglyC: return "stronglyC";
    }
    return "CmodZ";
}

Json element_json(const std::map<std::string, Rational>& e) {
    Json j = Json::object();
    for (const auto& [k, v] : e) j[k] = v.str();
    return j;
}

}  // namespace

std::string_view step_kind_name(ChainStep::Kind k) {
    switch (k) {
        case ChainStep::Kind::InnerSemisimple: return "innerSemisimple";
        case ChainStep::Kind::InnerNilpotent: return "innerNilpotent";
        case ChainStep::Kind::DiagramData: return "diagramData";
        case ChainStep::Kind::TransportTau: return "transportTau";
    }
    return "";
}

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names{
        "axioms",  "bigrading", "chainAdditivity", "commutator",         "delta",     "derivativeTable",
        "equivariance", "gradingRestriction", "involution", "l0Shift", "modeTable"};
    return names;
}

RunConfig parse_config(const Json& j) {
    allow_keys(j, "config", {"schemaVersion", "algebra", "level", "module", "gradingMode", "twistChain", "checks",
                             "tables", "output"});
    RunConfig c;
    if (!j.contains("schemaVersion")) invalid("missing schemaVersion");
    c.schema_version = int_of(j["schemaVersion"], "schemaVersion");
    if (c.schema_version != kSchemaVersion)
        invalid("unsupported schemaVersion " + std::to_string(c.schema_version));

    if (!j.contains("algebra")) invalid("missing algebra");
    const Json& a = j["algebra"];
    allow_keys(a, "algebra", {"type", "rank"});
    if (!a.contains("type") || !a["type"].is_string() || a["type"].get<std::string>().size() != 1)
        invalid("algebra.type must be a one-letter string");
    c.algebra_type = a["type"].get<std::string>()[0];
    c.rank = int_of(a.value("rank", Json()), "algebra.rank");

    if (!j.contains("level")) invalid("missing level");
    c.level = rational_of(j["level"], "level");

    if (j.contains("module")) {
        const Json& m = j["module"];
        allow_keys(m, "module", {"lambda", "cutoff"});
        if (m.contains("lambda")) {
            if (!m["lambda"].is_array()) invalid("module.lambda must be an array of Dynkin labels");
            for (const auto& x : m["lambda"]) c.lambda.push_back(int_of(x, "module.lambda[]"));
        }
        if (m.contains("cutoff")) c.cutoff = rational_of(m["cutoff"], "module.cutoff");
    }
    if (c.lambda.empty()) c.lambda.assign(static_cast<std::size_t>(std::max(c.rank, 0)), 0);

    if (j.contains("gradingMode")) {
        if (!j["gradingMode"].is_string()) invalid("gradingMode must be a string");
        c.grading_mode = grading_of(j["gradingMode"].get<std::string>());
    }

    if (j.contains("twistChain")) {
        if (!j["twistChain"].is_array()) invalid("twistChain must be an array");
        for (const auto& s : j["twistChain"]) {
            allow_keys(s, "twistChain[]", {"kind", "element", "permutation", "tau"});
            if (!s.contains("kind") || !s["kind"].is_string()) invalid("twist step needs a kind");
            ChainStep step;
            step.kind = kind_of(s["kind"].get<std::string>());
            switch (step.kind) {
                case ChainStep::Kind::InnerSemisimple:
                case ChainStep::Kind::InnerNilpotent:
                    if (!s.contains("element")) invalid("inner twist step needs an element");
                    step.element = element_of(s["element"], "twistChain[].element");
                    break;
                case ChainStep::Kind::DiagramData:
                    if (!s.contains("permutation") || !s["permutation"].is_array())
                        invalid("diagramData step needs a permutation array");
                    for (const auto& x : s["permutation"]) step.permutation.push_back(int_of(x, "permutation[]"));
                    break;
                case ChainStep::Kind::TransportTau:
                    if (!s.contains("tau")) invalid("transportTau step needs tau");
                    if (s["tau"].is_string()) {
                        step.tau_name = s["tau"].get<std::string>();
                        if (step.tau_name != "chevalleyInvolution")
                            invalid("unknown named automorphism '" + step.tau_name + "'");
                    } else if (s["tau"].is_array()) {
                        for (const auto& row : s["tau"]) {
                            if (!row.is_array()) invalid("tau matrix rows must be arrays");
                            std::vector<Rational> r;
                            for (const auto& x : row) r.push_back(rational_of(x, "tau[][]"));
                            step.tau_matrix.push_back(std::move(r));
                        }
                    } else {
                        invalid("tau must be a name or a matrix");
                    }
                    break;
            }
            c.chain.push_back(std::move(step));
        }
    }

    if (j.contains("checks")) {
        if (!j["checks"].is_array()) invalid("checks must be an array");
        for (const auto& x : j["checks"]) {
            CheckSpec spec;
            const Json obj = x.is_string() ? Json{{"name", x}} : x;
            allow_keys(obj, "checks[]", {"name", "maxWeight", "maxGeneratorWeight", "maxOutputWeight", "lo", "hi",
                                         "modeRange", "kmax", "derivativeOrder", "pairs"});
            if (!obj.contains("name") || !obj["name"].is_string()) invalid("check needs a name");
            spec.name = obj["name"].get<std::string>();
            const auto& names = known_checks();
            if (std::find(names.begin(), names.end(), spec.name) == names.end())
                invalid("unknown check '" + spec.name + "'");
            if (obj.contains("maxWeight")) spec.range.max_weight = int_of(obj["maxWeight"], "maxWeight");
            if (obj.contains("maxGeneratorWeight"))
                spec.range.max_generator_weight = int_of(obj["maxGeneratorWeight"], "maxGeneratorWeight");
            if (obj.contains("maxOutputWeight"))
                spec.range.max_output_weight = int_of(obj["maxOutputWeight"], "maxOutputWeight");
            if (obj.contains("lo")) spec.range.lo = rational_of(obj["lo"], "lo");
            if (obj.contains("hi")) spec.range.hi = rational_of(obj["hi"], "hi");
            if (obj.contains("modeRange")) spec.range.mode_range = int_of(obj["modeRange"], "modeRange");
            if (obj.contains("kmax")) spec.kmax = int_of(obj["kmax"], "kmax");
            if (obj.contains("derivativeOrder")) spec.derivative_order = int_of(obj["derivativeOrder"], "derivativeOrder");
            if (obj.contains("pairs")) {
                if (!obj["pairs"].is_array()) invalid("pairs must be an array");
                for (const auto& p : obj["pairs"]) {
                    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
                        invalid("pairs entries must be [\"a\", \"b\"]");
                    spec.pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
                }
            }
            if (spec.range.max_weight < 0 || spec.range.mode_range < 0 || spec.kmax < 0 || spec.derivative_order < 1 ||
                spec.range.lo > spec.range.hi)
                invalid("check '" + spec.name + "' has an empty or negative range");
            c.checks.push_back(std::move(spec));
        }
    }

    if (j.contains("tables")) {
        const Json& t = j["tables"];
        allow_keys(t, "tables", {"enabled", "modeRange", "generators"});
        if (t.contains("enabled")) {
            if (!t["enabled"].is_boolean()) invalid("tables.enabled must be a boolean");
            c.tables.enabled = t["enabled"].get<bool>();
        }
        if (t.contains("modeRange")) c.tables.mode_range = int_of(t["modeRange"], "tables.modeRange");
        if (t.contains("generators")) {
            if (!t["generators"].is_array()) invalid("tables.generators must be an array");
            for (const auto& g : t["generators"]) {
                if (!g.is_string()) invalid("tables.generators entries must be names");
                c.tables.generators.push_back(g.get<std::string>());
            }
        }
    }

    if (j.contains("output")) {
        const Json& o = j["output"];
        allow_keys(o, "output", {"format", "path"});
        if (o.contains("format")) {
            if (!o["format"].is_string()) invalid("output.format must be a string");
            c.output_format = o["format"].get<std::string>();
        }
        if (o.contains("path")) {
            if (!o["path"].is_string()) invalid("output.path must be a string");
            c.output_path = o["path"].get<std::string>();
        }
    }
    if (c.output_format != "json" && c.output_format != "csv") invalid("output.format must be json or csv");
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) invalid("cannot read config file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        invalid(std::string("malformed JSON: ") + e.what());
    }
    return parse_config(j);
}

Json to_json(const RunConfig& c) {
    Json j;
    j["schemaVersion"] = c.schema_version;
    j["algebra"] = {{"type", std::string(1, c.algebra_type)}, {"rank", c.rank}};
    j["level"] = c.level.str();
    j["module"] = {{"lambda", c.lambda}, {"cutoff", c.cutoff.str()}};
    j["gradingMode"] = grading_str(c.grading_mode);
    Json chain = Json::array();
    for (const auto& s : c.chain) {
        Json o;
        o["kind"] = std::string(step_kind_name(s.kind));
        switch (s.kind) {
            case ChainStep::Kind::InnerSemisimple:
            case ChainStep::Kind::InnerNilpotent: o["element"] = element_json(s.element); break;
            case ChainStep::Kind::DiagramData: o["permutation"] = s.permutation; break;
            case ChainStep::Kind::TransportTau:
                if (!s.tau_name.empty()) {
                    o["tau"] = s.tau_name;
                } else {
                    Json m = Json::array();
                    for (const auto& row : s.tau_matrix) {
                        Json r = Json::array();
                        for (const auto& x : row) r.push_back(x.str());
                        m.push_back(r);
                    }
                    o["tau"] = m;
                }
                break;
        }
        chain.push_back(o);
    }
    j["twistChain"] = chain;
    Json checks = Json::array();
    for (const auto& s : c.checks) {
        Json o;
        o["name"] = s.name;
        o["maxWeight"] = s.range.max_weight;
        o["maxGeneratorWeight"] = s.range.max_generator_weight;
        o["maxOutputWeight"] = s.range.max_output_weight;
        o["lo"] = s.range.lo.str();
        o["hi"] = s.range.hi.str();
        o["modeRange"] = s.range.mode_range;
        o["kmax"] = s.kmax;
        o["derivativeOrder"] = s.derivative_order;
        Json pairs = Json::array();
        for (const auto& [a, b] : s.pairs) pairs.push_back({a, b});
        o["pairs"] = pairs;
        checks.push_back(o);
    }
    j["checks"] = checks;
    j["tables"] = {{"enabled", c.tables.enabled}, {"modeRange", c.tables.mode_range}, {"generators", c.tables.generators}};
    j["output"] = {{"format", c.output_format}, {"path", c.output_path}};
    return j;
}

}  // namespace twistmod::cli
