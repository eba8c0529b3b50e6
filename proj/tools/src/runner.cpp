#include "runner.hpp"

#include <chrono>
#include <sstream>

#include "twistmod/automorphism.hpp"
#include "twistmod/jordan.hpp"
#include "twistmod/mode_table.hpp"
#include "twistmod/top_space.hpp"

namespace twistmod::cli {

namespace {

bool all_zero(const LieElt& x) {
    for (const auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

struct InnerStep {
    int index;
    TwistedModulePtr before;
    TwistedModulePtr after;
    LieElt element;
};

struct Built {
    LieAlgebraPtr g;
    TwistedModulePtr module;
    std::vector<InnerStep> inner;
};

LieElt element_of(const LieAlgebra& g, const std::map<std::string, Rational>& coords) {
    try {
        return g.element(coords);
    } catch (const TwistError& e) {
        throw TwistError(ErrorCode::InvalidConfig, e.what());
    }
}

QMatrix tau_of(const LieAlgebra& g, const ChainStep& s) {
    if (!s.tau_name.empty()) return chevalley_involution(g);
    QMatrix m(g.dim(), g.dim());
    if (static_cast<int>(s.tau_matrix.size()) != g.dim())
        throw TwistError(ErrorCode::InvalidConfig, "tau must be a " + std::to_string(g.dim()) + "x" +
                                                       std::to_string(g.dim()) + " matrix");
    for (int i = 0; i < g.dim(); ++i) {
        if (static_cast<int>(s.tau_matrix[static_cast<std::size_t>(i)].size()) != g.dim())
            throw TwistError(ErrorCode::InvalidConfig, "tau matrix row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < g.dim(); ++j) m(i, j) = s.tau_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    if (!is_algebra_automorphism(g, m)) throw TwistError(ErrorCode::InvalidConfig, "tau is not an algebra automorphism");
    return m;
}

/// Verifies every step's preconditions (fixed points, step types) before anything is built.
void type_check(const LieAlgebra& g, const RunConfig& c) {
    std::vector<AutomorphismData> factors;
    for (std::size_t i = 0; i < c.chain.size(); ++i) {
        const ChainStep& s = c.chain[i];
        const std::string where = "twist step " + std::to_string(i) + " (" + std::string(step_kind_name(s.kind)) + ")";
        switch (s.kind) {
            case ChainStep::Kind::DiagramData: {
                AutomorphismData f;
                f.diagram = s.permutation;
                (void)diagram_automorphism(g, s.permutation);
                factors.push_back(std::move(f));
                break;
            }
            case ChainStep::Kind::InnerSemisimple:
            case ChainStep::Kind::InnerNilpotent: {
                const LieElt a = element_of(g, s.element);
                const JordanParts parts = jordan_chevalley(g, a);
                if (s.kind == ChainStep::Kind::InnerSemisimple && !all_zero(parts.n))
                    throw TwistError(ErrorCode::NotSemisimple, where + ": " + g.format(a) + " is not semisimple");
                if (s.kind == ChainStep::Kind::InnerNilpotent && !all_zero(parts.s))
                    throw TwistError(ErrorCode::NotUnipotent, where + ": " + g.format(a) + " is not nilpotent");
                const long D = automorphism_denominator(g, factors);
                if (!(apply_automorphism(g, factors, to_cyc(a), cyclotomic_field(D)) == to_cyc(a)))
                    throw TwistError(ErrorCode::NotFixed, where + ": u = (" + g.format(a) + ")(-1)1 is not fixed by g");
                AutomorphismData f;
                if (s.kind == ChainStep::Kind::InnerSemisimple)
                    f.h = a;
                else
                    f.n = a;
                factors.push_back(std::move(f));
                break;
            }
            case ChainStep::Kind::TransportTau: {
                const QMatrix tau = tau_of(g, s);
                for (auto& f : factors) f.tau = f.tau ? tau * *f.tau : tau;
                break;
            }
        }
    }
}

Built build(const RunConfig& c) {
    Built b;
    b.g = LieAlgebra::build(c.algebra_type, c.rank);
    const LieAlgebra& g = *b.g;
    if (static_cast<int>(c.lambda.size()) != g.rank())
        throw TwistError(ErrorCode::InvalidConfig, "module.lambda needs " + std::to_string(g.rank()) + " Dynkin labels");
    if (c.cutoff < Rational(0)) throw TwistError(ErrorCode::InvalidConfig, "module.cutoff must be non-negative");
    const auto V = InducedModule::vacuum(b.g, c.level, c.cutoff);
    type_check(g, c);
    for (const auto& s : c.chain)
        if (s.kind == ChainStep::Kind::DiagramData)
            throw TwistError(ErrorCode::Unsupported,
                             "diagram-twisted base modules are accepted only as explicit mode data (library interface)");
    const bool trivial = std::all_of(c.lambda.begin(), c.lambda.end(), [](int x) { return x == 0; });
    TwistedModulePtr cur;
    if (trivial) {
        cur = TwistedModule::untwisted(V);
    } else {
        const auto W = InducedModule::build(b.g, c.level, make_top_space(g, c.lambda), c.cutoff);
        cur = TwistedModule::untwisted(V, W);
    }
    for (std::size_t i = 0; i < c.chain.size(); ++i) {
        const ChainStep& s = c.chain[i];
        if (s.kind == ChainStep::Kind::TransportTau) {
            cur = transport_tau(cur, tau_of(g, s));
            continue;
        }
        const LieElt a = element_of(g, s.element);
        auto next = make_twisted(cur, a, c.grading_mode);
        b.inner.push_back(InnerStep{static_cast<int>(i), cur, next, a});
        cur = next;
    }
    b.module = cur;
    return b;
}

Json witness_json(const Witness& w) {
    return Json{{"v", w.v},           {"w", w.w},           {"exponent", w.exponent}, {"logPower", w.log_power},
                {"expected", w.expected}, {"actual", w.actual}, {"detail", w.detail}};
}

Json report_json(const CheckReport& r) {
    Json j;
    j["name"] = r.name;
    j["status"] = std::string(check_status_name(r.status));
    j["parameters"] = r.parameters;
    j["comparisons"] = r.comparisons;
    j["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
    j["notes"] = r.notes;
    return j;
}

Json module_json(const TwistedModule& m) {
    const LieAlgebra& g = m.algebra();
    Json j;
    j["chain"] = m.describe();
    j["algebra"] = g.label();
    j["level"] = m.vacuum().level().str();
    j["centralCharge"] = m.vacuum().central_charge().str();
    j["topWeight"] = m.space().top_weight().str();
    j["cutoff"] = m.space().cutoff().str();
    j["denominator"] = m.denominator();
    j["hasLogTerms"] = m.has_log_terms();
    j["semisimpleTotal"] = g.format(m.semisimple_total().empty() ? g.zero() : m.semisimple_total());
    j["nilpotentTotal"] = g.format(m.nilpotent_total().empty() ? g.zero() : m.nilpotent_total());
    j["gradingMode"] = std::string(grading_mode_name(m.grading_mode()));
    return j;
}

Json dimensions_json(const TwistedModule& m) {
    Json j;
    Json by_depth = Json::array();
    const auto dims = m.space().graded_dims();
    for (std::size_t d = 0; d < dims.size(); ++d)
        by_depth.push_back({{"depth", d},
                            {"weight", (m.space().top_weight() + Rational(static_cast<long>(d))).str()},
                            {"dimension", dims[d]}});
    j["untwisted"] = by_depth;
    const Bigrading& bg = m.bigrading();
    Json b;
    b["available"] = bg.available;
    b["truncated"] = bg.truncated;
    b["note"] = bg.note;
    b["nilpotency"] = bg.nilpotency;
    Json pieces = Json::array();
    for (const auto& p : bg.pieces) {
        Json steps = Json::array();
        for (const auto& s : p.step_eigenvalues) steps.push_back(s.str());
        pieces.push_back({{"weight", p.weight.str()},
                          {"class", p.cls.str()},
                          {"dimension", p.basis.size()},
                          {"stepEigenvalues", steps}});
    }
    b["pieces"] = pieces;
    j["bigraded"] = b;
    return j;
}

Json tables_json(const TwistedModule& m, const TableSpec& spec) {
    const LieAlgebra& g = m.algebra();
    std::vector<std::string> names = spec.generators;
    if (names.empty())
        for (int i = 0; i < g.dim(); ++i) names.push_back(g.name(i));
    Json out = Json::array();
    for (const auto& name : names) {
        int idx = 0;
        try {
            idx = g.index_of(name);
        } catch (const TwistError& e) {
            throw TwistError(ErrorCode::InvalidConfig, e.what());
        }
        const ModeTable t = mode_table(m, g.basis_vector(idx), name, spec.mode_range);
        Json rows = Json::array();
        for (const auto& r : t.rows)
            rows.push_back({{"mode", r.mode.str()}, {"logPower", r.log_power}, {"expr", format_mode_expr(g, r.expr)}});
        out.push_back({{"generator", name}, {"rows", rows}});
    }
    return out;
}

void add(std::vector<CheckReport>& out, CheckReport r, const std::string& prefix = {}) {
    if (!prefix.empty()) r.name = prefix + r.name;
    out.push_back(std::move(r));
}

std::vector<CheckReport> run_check(const Built& b, const CheckSpec& spec) {
    const TwistedModule& m = *b.module;
    const LieAlgebra& g = *b.g;
    std::vector<CheckReport> out;
    auto step_prefix = [](const InnerStep& s) { return "step" + std::to_string(s.index) + "."; };
    auto no_inner = [&](const std::string& name) {
        CheckReport r;
        r.name = name;
        r.uncertifiable("chain has no inner twist step");
        out.push_back(std::move(r));
    };
    const std::string& n = spec.name;
    if (n == "axioms") {
        for (auto& r : check_axioms(m, spec.range)) add(out, std::move(r));
    } else if (n == "delta") {
        if (b.inner.empty()) no_inner("delta");
        for (const auto& s : b.inner)
            for (auto& r : check_delta_identities(*s.before, s.element, spec.range)) add(out, std::move(r), step_prefix(s));
    } else if (n == "commutator") {
        std::vector<std::pair<int, int>> pairs;
        if (spec.pairs.empty()) {
            for (int i = 0; i < g.dim(); ++i)
                for (int j = i; j < g.dim(); ++j) pairs.emplace_back(i, j);
        } else {
            try {
                for (const auto& [a, c] : spec.pairs) pairs.emplace_back(g.index_of(a), g.index_of(c));
            } catch (const TwistError& e) {
                throw TwistError(ErrorCode::InvalidConfig, e.what());
            }
        }
        for (const auto& [i, j] : pairs) {
            CheckReport r = check_commutator(m, g.basis_vector(i), g.basis_vector(j), spec.range);
            r.name = "commutator[" + g.name(i) + "," + g.name(j) + "]";
            out.push_back(std::move(r));
        }
    } else if (n == "equivariance") {
        add(out, check_equivariance(m, spec.range));
    } else if (n == "modeTable") {
        add(out, check_mode_table_oracle(m, spec.range));
    } else if (n == "derivativeTable") {
        add(out, check_derivative_table(m, spec.derivative_order, spec.range));
    } else if (n == "l0Shift") {
        if (b.inner.empty()) no_inner("l0Shift");
        for (const auto& s : b.inner) add(out, check_l0_shift(*s.after, spec.range), step_prefix(s));
    } else if (n == "involution") {
        if (b.inner.empty()) no_inner("involution");
        for (const auto& s : b.inner) add(out, check_involution(s.before, s.element, spec.range), step_prefix(s));
    } else if (n == "chainAdditivity") {
        if (b.inner.empty()) no_inner("chainAdditivity");
        for (const auto& s : b.inner) add(out, check_chain_additivity(s.before, s.element, spec.range), step_prefix(s));
    } else if (n == "bigrading") {
        add(out, check_bigrading_compatibility(m, spec.range));
    } else if (n == "gradingRestriction") {
        add(out, check_grading_restriction(m, spec.kmax));
    }
    return out;
}

}  // namespace

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidConfig:
        case ErrorCode::DomainError: return 1;
        case ErrorCode::CriticalLevel: return 10;
        case ErrorCode::NotFixed: return 11;
        case ErrorCode::NeedsFieldExtension: return 12;
        case ErrorCode::Unsupported: return 13;
        case ErrorCode::NotSemisimple: return 14;
        case ErrorCode::NotUnipotent: return 15;
        case ErrorCode::InvalidSymmetry: return 16;
        case ErrorCode::UnsupportedAlgebra: return 17;
        case ErrorCode::NotQuasiPrimary: return 18;
        case ErrorCode::NotIntertwining: return 19;
        case ErrorCode::TruncationOverflow: return 20;
    }
    return 1;
}

RunOutcome error_outcome(const TwistError& e) {
    RunOutcome o;
    o.exit_code = exit_code_for(e.code());
    o.report["schemaVersion"] = kSchemaVersion;
    o.report["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}, {"exitCode", o.exit_code}};
    return o;
}

RunOutcome execute(const RunConfig& config, RunMode mode, bool timing) {
    const auto t0 = std::chrono::steady_clock::now();
    RunOutcome o;
    try {
        const Built b = build(config);
        Json& rep = o.report;
        rep["schemaVersion"] = kSchemaVersion;
        rep["config"] = to_json(config);
        rep["module"] = module_json(*b.module);
        rep["gradedDimensions"] = dimensions_json(*b.module);
        if (config.tables.enabled || mode == RunMode::Tables) rep["modeTables"] = tables_json(*b.module, config.tables);
        Json notices = Json::array();
        if (b.module->bigrading().truncated) notices.push_back("bigrading: " + b.module->bigrading().note);
        if (mode == RunMode::Run) {
            std::vector<CheckReport> reports;
            for (const auto& spec : config.checks)
                for (auto& r : run_check(b, spec)) reports.push_back(std::move(r));
            long pass = 0, fail = 0, unc = 0;
            Json checks = Json::array();
            for (const auto& r : reports) {
                checks.push_back(report_json(r));
                if (r.status == CheckStatus::Pass) ++pass;
                if (r.status == CheckStatus::Fail) ++fail;
                if (r.status == CheckStatus::Uncertifiable) ++unc;
                for (const auto& note : r.notes)
                    if (note.find("cutoff") != std::string::npos) notices.push_back(r.name + ": " + note);
            }
            rep["checks"] = checks;
            const std::string status = fail ? "fail" : (unc ? "uncertifiable" : "pass");
            rep["summary"] = {{"pass", pass}, {"fail", fail}, {"uncertifiable", unc}, {"status", status}};
            o.exit_code = fail ? 2 : (unc ? 3 : 0);
        }
        rep["truncationNotices"] = notices;
    } catch (const TwistError& e) {
        o = error_outcome(e);
        o.report["config"] = to_json(config);
    }
    if (timing)
        o.report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
    return o;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
    } else if (j.is_array()) {
        if (j.empty()) rows.emplace_back(path, "");
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
    } else if (j.is_string()) {
        rows.emplace_back(path, j.get<std::string>());
    } else if (j.is_null()) {
        rows.emplace_back(path, "");
    } else {
        rows.emplace_back(path, j.dump());
    }
}

}  // namespace

std::string render(const Json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    std::ostringstream out;
    out << "section,path,value\n";
    for (const auto& [section, value] : report.items()) {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten(value, "", rows);
        for (const auto& [p, v] : rows) out << csv_field(section) << ',' << csv_field(p) << ',' << csv_field(v) << '\n';
    }
    return out.str();
}

}  // namespace twistmod::cli
