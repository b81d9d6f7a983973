#include "plethysm/cli.hpp"

#include "plethysm/characters.hpp"
#include "plethysm/instance_io.hpp"
#include "plethysm/reductions.hpp"
#include "plethysm/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

namespace plethysm {

using nlohmann::json;

namespace {

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

json number(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

long parse_long(const std::string& s, const std::string& what, long lo, long hi) {
    long v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || v < lo || v > hi)
        throw InputError(what + " must be an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got \"" + s + "\"");
    return v;
}

unsigned workers_from_env() {
    const char* s = std::getenv("PLETHYSM_WORKERS");
    if (s == nullptr || *s == '\0') return 1;
    return static_cast<unsigned>(parse_long(s, "PLETHYSM_WORKERS", 1, 256));
}

Partition partition_arg(const std::string& s, const std::string& what) {
    try {
        return parse_partition(s);
    } catch (const std::invalid_argument& e) {
        throw InputError(what + ": " + e.what());
    }
}

std::string read_source(const std::string& path, const std::string& inline_json) {
    if (!inline_json.empty()) {
        if (!path.empty()) throw InputError("give either a file or --json, not both");
        return inline_json;
    }
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot read " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

TomographyInstance load_instance(const std::string& path, const std::string& inline_json) {
    try {
        return parse_instance(std::string_view(read_source(path, inline_json)));
    } catch (const InstanceError& e) {
        throw InputError(std::string("bad instance: ") + e.what());
    }
}

void check_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (fmt == a) return;
    throw InputError("unsupported --format " + fmt);
}

// Left-aligned columns, two spaces apart; the last column is not padded.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
        }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
}

std::string describe(const TomographyInstance& inst) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, XRayInstance2D>)
                return "2dxray r=" + std::to_string(v.r) + " x=" + format(v.x) + " y=" + format(v.y) + " z=" + format(v.z);
            else if constexpr (std::is_same_v<T, XRayInstance3D>)
                return "3dxray x=" + format(v.x) + " y=" + format(v.y) + " z=" + format(v.z);
            else if (v.grid_r)
                return "sym2d r=" + std::to_string(*v.grid_r) + " sum=" + format(v.marginal);
            else
                return "sym3d sum=" + format(v.marginal);
        },
        inst);
}

std::string describe(const KroneckerTriple& t) {
    return "k(" + format(t.mu) + "," + format(t.nu) + "," + format(t.rho) + ")";
}

// ---- coeff / kron ----

struct Answer {
    std::string query;
    CoefficientResult result;
};

void print_answer(std::ostream& out, const std::string& fmt, const Answer& a) {
    if (fmt == "json") {
        out << json{{"query", a.query}, {"value", number(a.result.value)}, {"method", to_string(a.result.method)}}.dump() << '\n';
        return;
    }
    out << a.query << " = " << a.result.value << '\n' << "method: " << to_string(a.result.method) << '\n';
}

struct CoeffArgs {
    std::string variant;
    std::string lambda;
    std::string first;
    std::string second;
    bool by_counting = false;
};

int cmd_coeff(const CoeffArgs& a, const std::string& fmt, const CountOptions& copts, std::ostream& out) {
    const Partition lambda = partition_arg(a.lambda, "LAMBDA");
    Answer ans;
    if (a.variant == "p") {
        if (a.by_counting) throw InputError("--by-counting applies to a and b only");
        const Partition mu = partition_arg(a.first, "MU");
        const Partition nu = partition_arg(a.second, "NU");
        ans.query = "p_" + format(lambda) + "(" + format(mu) + "," + format(nu) + ")";
        if (lambda.size() != mu.size() * nu.size())
            ans.result = {0, Method::GradingZero};
        else
            ans.result = general_plethysm(lambda, mu, nu);
    } else if (a.variant == "a" || a.variant == "b") {
        const PlethysmInstance q{lambda, static_cast<int>(parse_long(a.first, "N", 1, 100'000)),
                                 static_cast<int>(parse_long(a.second, "M", 1, 100'000)),
                                 a.variant == "a" ? Variant::a : Variant::b};
        ans.query = format(q);
        if (lambda.size() != static_cast<long>(q.n) * q.m)
            ans.result = {0, Method::GradingZero};
        else if (a.by_counting) {
            if (q.m != 3) throw InputError("--by-counting needs M = 3");
            ans.result = evaluate_by_counting(q, copts);
        } else
            ans.result = evaluate(q);
    } else {
        throw InputError("variant must be a, b or p");
    }
    print_answer(out, fmt, ans);
    return exit_ok;
}

int cmd_kron(const std::string& mu_s, const std::string& nu_s, const std::string& rho_s, const std::string& fmt,
             std::ostream& out) {
    const KroneckerTriple t{partition_arg(mu_s, "MU"), partition_arg(nu_s, "NU"), partition_arg(rho_s, "RHO")};
    Answer ans{describe(t), {0, Method::GradingZero}};
    if (t.mu.size() == t.nu.size() && t.nu.size() == t.rho.size()) ans.result = kronecker(t.mu, t.nu, t.rho);
    print_answer(out, fmt, ans);
    return exit_ok;
}

// ---- count ----

int cmd_count(const TomographyInstance& inst, long witnesses, const std::string& fmt, const CountOptions& copts,
              std::ostream& out) {
    const BigInt n = count(inst, copts);
    std::vector<PointSet> found;
    if (witnesses > 0) {
        try {
            found = enumerate(inst, static_cast<std::size_t>(witnesses));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    if (fmt == "json") {
        json doc{{"instance", to_json(inst)}, {"count", number(n)}};
        if (witnesses > 0) {
            doc["witnesses"] = json::array();
            for (const auto& p : found) doc["witnesses"].push_back(to_json(p));
        }
        out << doc.dump() << '\n';
        return exit_ok;
    }
    out << "kind: " << kind_name(inst) << '\n' << "count: " << n << '\n';
    for (std::size_t i = 0; i < found.size(); ++i) {
        out << "witness " << i + 1 << ":";
        for (const auto& p : found[i]) out << ' ' << format(p);
        out << '\n';
    }
    return exit_ok;
}

// ---- reduce ----

struct Stage {
    std::string name;
    std::string cone;
    std::string text;
    json payload;
    std::optional<BigInt> count;
    std::string method;
    std::string note;
};

struct Trace {
    std::vector<Stage> stages;
    std::optional<GateFailure> gate;
};

const std::vector<std::string> stage_order{"sym2d", "promise3d", "plethysm", "kron-triple"};

int stage_index(const std::string& s) {
    for (std::size_t i = 0; i < stage_order.size(); ++i)
        if (stage_order[i] == s) return static_cast<int>(i) + 1;
    throw InputError("--to must be one of sym2d, promise3d, plethysm, kron-triple");
}

Stage plethysm_stage(const PlethysmInstance& q, ConeKind kind, bool evaluate_it, const CountOptions& copts) {
    Stage s{"plethysm", to_string(kind), format(q), to_json(q), std::nullopt, "", ""};
    if (evaluate_it) {
        const CoefficientResult r = evaluate_by_counting(q, copts);
        s.count = r.value;
        s.method = to_string(r.method);
    }
    return s;
}

// Runs the chain from `inst` (2dxray, sym2d or sym3d) up to stage `to` (1..3) in one cone.
std::optional<PlethysmInstance> run_chain(const TomographyInstance& inst, ConeKind kind, int to, bool evaluate_it, const CountOptions& copts,
               Trace& trace) {
    const std::string cone = to_string(kind);
    std::optional<SymInstance> layer;
    std::optional<SymInstance> promise;
    if (const auto* x = std::get_if<XRayInstance2D>(&inst)) {
        layer = symmetrize_2d(*x, kind);
        Stage s{"sym2d", cone, describe(TomographyInstance(*layer)), to_json(TomographyInstance(*layer)), std::nullopt, "", ""};
        if (!is_feasible(*x)) s.note = "canonical zero: input infeasible";
        if (evaluate_it) s.count = count(*layer, copts);
        trace.stages.push_back(std::move(s));
    } else if (const auto* s = std::get_if<SymInstance>(&inst); s && s->grid_r) {
        layer = *s;
    } else {
        promise = std::get<SymInstance>(inst);
    }
    if (to < 2) return std::nullopt;
    if (layer) {
        promise = embed_pyramid_3d(layer->marginal, *layer->grid_r, kind);
        Stage s{"promise3d", cone, describe(TomographyInstance(*promise)), to_json(TomographyInstance(*promise)), std::nullopt, "", ""};
        if (evaluate_it) {
            s.count = count_pyramids(promise->marginal, kind, copts);
            s.method = to_string(Method::PyramidCount);
        }
        trace.stages.push_back(std::move(s));
    }
    if (to < 3) return std::nullopt;
    const PlethysmInstance q = promise_to_plethysm(promise->marginal, kind);
    trace.stages.push_back(plethysm_stage(q, kind, evaluate_it, copts));
    return q;
}

Trace reduce(const TomographyInstance& inst, const std::string& to, std::optional<ConeKind> cone_opt, bool evaluate_it,
             const CountOptions& copts) {
    const int target = stage_index(to);
    int from = 0;
    ConeKind kind = cone_opt.value_or(ConeKind::closed);
    if (std::holds_alternative<XRayInstance3D>(inst)) throw InputError("3dxray instances have no reduction chain");
    if (const auto* x = std::get_if<XRayInstance2D>(&inst)) {
        if (x->r == 0) throw InputError("r = 0: nothing to reduce, count the instance directly");
    } else {
        const auto& s = std::get<SymInstance>(inst);
        from = s.grid_r ? 1 : 2;
        if (cone_opt && *cone_opt != s.cone) throw InputError("--cone disagrees with the instance cone");
        kind = s.cone;
    }
    if (target <= from) throw InputError("cannot reduce a " + kind_name(inst) + " instance to " + to);
    if (target == 4 && from != 0) throw InputError("kron-triple needs a 2dxray instance");

    Trace trace;
    Stage input{"input", from == 0 ? "" : to_string(kind), describe(inst), to_json(inst), std::nullopt, "", ""};
    if (evaluate_it) input.count = count(inst, copts);
    trace.stages.push_back(std::move(input));

    try {
        if (target < 4) {
            run_chain(inst, kind, target, evaluate_it, copts, trace);
            return trace;
        }
        const auto& x = std::get<XRayInstance2D>(inst);
        run_chain(inst, ConeKind::open, 3, evaluate_it, copts, trace);
        run_chain(inst, ConeKind::closed, 3, evaluate_it, copts, trace);
        const KroneckerPlethysm kp = kronecker_plethysm_triple(x);
        Stage s{"kron-triple", "", describe(kp.kronecker), to_json(kp.kronecker), std::nullopt, "", ""};
        if (evaluate_it) {
            s.count = kronecker(kp.kronecker.mu, kp.kronecker.nu, kp.kronecker.rho).value;
            s.method = to_string(Method::CharacterSum);
        }
        trace.stages.push_back(std::move(s));
    } catch (const GateFailure& e) {
        trace.gate = e;
    }
    return trace;
}

void print_trace(std::ostream& out, const std::string& fmt, const Trace& trace, bool evaluate_it) {
    if (fmt == "json") {
        json doc{{"stages", json::array()}};
        for (const auto& s : trace.stages) {
            json j{{"stage", s.name}, {s.name == "plethysm" ? "query" : s.name == "kron-triple" ? "triple" : "instance", s.payload}};
            if (!s.cone.empty()) j["cone"] = s.cone;
            if (s.count) j["count"] = number(*s.count);
            if (!s.method.empty()) j["method"] = s.method;
            if (!s.note.empty()) j["note"] = s.note;
            doc["stages"].push_back(std::move(j));
        }
        if (trace.gate) doc["gate"] = {{"name", trace.gate->gate()}, {"message", trace.gate->what()}};
        out << doc.dump() << '\n';
        return;
    }
    std::vector<std::vector<std::string>> rows{{"stage", "cone", "instance"}};
    if (evaluate_it) rows[0].push_back("count");
    for (const auto& s : trace.stages) {
        std::vector<std::string> row{s.name, s.cone.empty() ? "-" : s.cone, s.text};
        if (evaluate_it) {
            std::string c = s.count ? s.count->str() : "";
            if (!s.method.empty()) c += " (" + s.method + ")";
            row.push_back(c);
        }
        rows.push_back(std::move(row));
    }
    print_table(out, rows);
    for (const auto& s : trace.stages)
        if (!s.note.empty()) out << "note: " << s.name << " " << s.cone << ": " << s.note << '\n';
    if (trace.gate) out << "gate failed: " << trace.gate->gate() << ": " << trace.gate->what() << '\n';
}

// ---- verify ----

std::pair<int, int> parse_nm(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InputError("--nm expects N,M, got \"" + s + "\"");
    return {static_cast<int>(parse_long(s.substr(0, comma), "--nm N", 1, 8)),
            static_cast<int>(parse_long(s.substr(comma + 1), "--nm M", 1, 8))};
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts, const std::string& fmt, std::ostream& out) {
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end())
        names = {suite};
    else
        throw InputError("unknown suite \"" + suite + "\"");

    bool all_passed = true;
    json doc = json::array();
    for (const auto& name : names) {
        const VerifyReport rep = run_suite(name, opts);
        all_passed = all_passed && rep.passed;
        if (fmt == "json") {
            json j{{"suite", rep.suite}, {"passed", rep.passed}, {"checked", rep.checked}, {"notes", rep.notes}};
            if (!rep.passed) j["counterexample"] = rep.counterexample;
            doc.push_back(std::move(j));
            continue;
        }
        out << rep.suite << ": " << (rep.passed ? "PASS" : "FAIL") << " (" << rep.checked << " checked)\n";
        if (!rep.passed) out << "  counterexample: " << rep.counterexample << '\n';
        for (const auto& n : rep.notes) out << "  note: " << n << '\n';
    }
    if (fmt == "json") out << (suite == "all" ? doc : doc.at(0)).dump() << '\n';
    return all_passed ? exit_ok : exit_verify_failed;
}

// ---- table ----

const std::vector<std::pair<std::string, XRayInstance2D>>& worked_examples() {
    static const std::vector<std::pair<std::string, XRayInstance2D>> ex{
        {"1", {1, {1, 1}, {1, 1}, {2}}},
        {"2", {1, {2, 1}, {2, 1}, {2, 1}}},
        {"3", {1, {2}, {2}, {0, 2}}},
    };
    return ex;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

int cmd_table(const std::string& fmt, const CountOptions& copts, std::ostream& out) {
    const std::vector<std::string> header{"example", "x", "y", "z", "count_2d", "mu", "nu", "rho", "kronecker",
                                          "a_lambda", "a_n", "a", "b_lambda", "b_n", "b"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& [name, inst] : worked_examples()) {
        Trace scratch;
        const PlethysmInstance a = *run_chain(inst, ConeKind::open, 3, false, copts, scratch);
        const PlethysmInstance b = *run_chain(inst, ConeKind::closed, 3, false, copts, scratch);
        std::vector<std::string> row{name, format(inst.x), format(inst.y), format(inst.z), count_2dxray(inst, copts).str()};
        try {
            const KroneckerTriple t = kronecker_plethysm_triple(inst).kronecker;
            row.insert(row.end(), {format(t.mu), format(t.nu), format(t.rho), kronecker(t.mu, t.nu, t.rho).value.str()});
        } catch (const GateFailure& e) {
            row.insert(row.end(), {"", "", "", "gate:" + e.gate()});
        }
        row.insert(row.end(), {format(a.lambda), std::to_string(a.n), evaluate_by_counting(a, copts).value.str(),
                               format(b.lambda), std::to_string(b.n), evaluate_by_counting(b, copts).value.str()});
        rows.push_back(std::move(row));
    }
    if (fmt == "json") {
        json doc = json::array();
        for (const auto& row : rows) {
            json j;
            for (std::size_t i = 0; i < header.size(); ++i) j[header[i]] = row[i];
            doc.push_back(std::move(j));
        }
        out << doc.dump() << '\n';
        return exit_ok;
    }
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Plethysm coefficients, discrete tomography counts and the reductions between them."};
    app.name("plethysm");
    app.require_subcommand(1);

    std::string fmt = "text";
    auto add_format = [&](CLI::App* sub) { sub->add_option("--format", fmt, "Output format")->capture_default_str(); };

    CoeffArgs ca;
    auto* coeff = app.add_subcommand("coeff", "a_lambda(n,m), b_lambda(n,m) or p_lambda(mu,nu)");
    coeff->add_option("variant", ca.variant, "a, b or p")->required();
    coeff->add_option("lambda", ca.lambda, "Partition, e.g. [4,2]")->required();
    coeff->add_option("first", ca.first, "N (a, b) or MU (p)")->required();
    coeff->add_option("second", ca.second, "M (a, b) or NU (p)")->required();
    coeff->add_flag("--by-counting", ca.by_counting, "Evaluate through tomography counts (M = 3)");
    add_format(coeff);

    std::string kmu, knu, krho;
    auto* kron = app.add_subcommand("kron", "Kronecker coefficient k(mu,nu,rho)");
    kron->add_option("mu", kmu)->required();
    kron->add_option("nu", knu)->required();
    kron->add_option("rho", krho)->required();
    add_format(kron);

    std::string path, inline_json;
    long witnesses = 0;
    auto* cnt = app.add_subcommand("count", "Count the solutions of a tomography instance");
    cnt->add_option("file", path, "Instance JSON file, - for stdin");
    cnt->add_option("--json", inline_json, "Instance JSON given inline");
    cnt->add_option("--witness", witnesses, "Also print up to K solutions")->check(CLI::Range(0L, 1000L));
    add_format(cnt);

    std::string to, cone_s;
    bool evaluate_it = false;
    auto* red = app.add_subcommand("reduce", "Run the reduction chain on an instance");
    red->add_option("file", path, "Instance JSON file, - for stdin");
    red->add_option("--json", inline_json, "Instance JSON given inline");
    red->add_option("--to", to, "sym2d, promise3d, plethysm or kron-triple")->required();
    red->add_option("--cone", cone_s, "open or closed (2dxray input; default closed)");
    red->add_flag("--evaluate", evaluate_it, "Count or evaluate every stage");
    add_format(red);

    std::string suite;
    VerifyOptions vopts;
    std::vector<std::string> nm;
    auto* ver = app.add_subcommand("verify", "Run an invariant suite");
    ver->add_option("suite", suite, "bounds, duality, closed-forms, xi, inner-lift, parsimony, kronecker, restricted or all")
        ->required();
    ver->add_option("--n-max", vopts.n_max)->check(CLI::Range(1, 6));
    ver->add_option("--nm", nm, "N,M pair for duality (repeatable)");
    ver->add_option("--i-max", vopts.i_max)->check(CLI::Range(0, 200));
    ver->add_option("--samples", vopts.samples)->check(CLI::Range(0, 10000));
    ver->add_option("--seed", vopts.seed);
    ver->add_option("--mu-max", vopts.mu_max)->check(CLI::Range(1, 6));
    add_format(ver);

    auto* tab = app.add_subcommand("table", "Worked example rows as CSV");
    tab->add_option("--format", fmt, "csv or json");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        CountOptions copts;
        copts.workers = workers_from_env();
        vopts.count = copts;
        if (*coeff) {
            check_format(fmt, {"text", "json"});
            return cmd_coeff(ca, fmt, copts, out);
        }
        if (*kron) {
            check_format(fmt, {"text", "json"});
            return cmd_kron(kmu, knu, krho, fmt, out);
        }
        if (*cnt) {
            check_format(fmt, {"text", "json"});
            return cmd_count(load_instance(path, inline_json), witnesses, fmt, copts, out);
        }
        if (*red) {
            check_format(fmt, {"text", "json"});
            std::optional<ConeKind> cone;
            if (cone_s == "open") cone = ConeKind::open;
            else if (cone_s == "closed") cone = ConeKind::closed;
            else if (!cone_s.empty()) throw InputError("--cone must be open or closed");
            const Trace trace = reduce(load_instance(path, inline_json), to, cone, evaluate_it, copts);
            print_trace(out, fmt, trace, evaluate_it);
            if (trace.gate) {
                err << "gate failed: " << trace.gate->gate() << '\n';
                return exit_gate_failed;
            }
            return exit_ok;
        }
        if (*ver) {
            check_format(fmt, {"text", "json"});
            if (!nm.empty()) {
                vopts.nm.clear();
                for (const auto& s : nm) vopts.nm.push_back(parse_nm(s));
            }
            return cmd_verify(suite, vopts, fmt, out);
        }
        if (fmt == "text") fmt = "csv";
        check_format(fmt, {"csv", "json"});
        return cmd_table(fmt, copts, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const GateFailure& e) {
        err << "gate failed: " << e.gate() << ": " << e.what() << '\n';
        return exit_gate_failed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

}  // namespace plethysm
