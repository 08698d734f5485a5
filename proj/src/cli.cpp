#include "lefforge/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "lefforge/artinian.hpp"
#include "lefforge/betti.hpp"
#include "lefforge/criteria.hpp"
#include "lefforge/errors.hpp"
#include "lefforge/grid_complex.hpp"

namespace lefforge {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
    int t = 0;
    int m = 0;
    int n = 0;
    std::optional<int> a;
    std::optional<int> i;
    std::optional<int> j;
    std::string subset;
    std::string ring = "initial";
    std::string property = "WLP";
    std::optional<std::uint64_t> prime;
    bool rational = false;
    std::optional<std::uint64_t> seed;
    int trials = 3;
    std::optional<std::uint64_t> budget;
    std::string format;
    std::string output;
    unsigned threads = 1;
    bool full = false;
    int max_m = 0;
    int max_n = 0;
};

std::uint64_t default_seed() {
    const char* env = std::getenv("LEFFORGE_SEED");
    if (!env || !*env) return kDefaultSeed;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used, 10);
        if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParameterError("LEFFORGE_SEED is not an unsigned integer: '" + std::string(env) + "'");
    }
}

FieldSpec field_of(const RunConfig& c) {
    const auto seed = c.seed ? *c.seed : default_seed();
    if (c.rational) return FieldSpec::rationals(seed);
    return FieldSpec::prime_field(c.prime ? *c.prime : kDefaultPrime, seed);
}

Json big(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

Json big_list(const std::vector<BigInt>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(big(v));
    return out;
}

Json points(const GridShape& shape, const VertexSet& s) {
    Json out = Json::array();
    s.for_each([&](std::size_t v) {
        const auto p = shape.point(v);
        out.push_back({p.row, p.col});
    });
    return out;
}

Json shape_json(const GridShape& s) {
    return {{"t", s.t()}, {"m", s.m()}, {"n", s.n()}, {"height", s.height()}, {"krull_dimension", s.krull_dimension()}};
}

Json field_json(const FieldSpec& f) {
    Json out;
    out["kind"] = f.is_prime_field() ? "prime" : "rational";
    out["prime"] = f.is_prime_field() ? Json(f.prime) : Json(nullptr);
    out["seed"] = f.seed;
    return out;
}

// Reduced homology H~_i for i = -1 .. top of the restriction of Delta to u.
Json homology_vector(const GridShape& shape, const VertexSet& u, int top, const FieldSpec& field) {
    Json out = Json::array();
    for (int i = -1; i <= top; ++i) out.push_back(restricted_homology_dim(shape, u, i, field));
    return out;
}

VertexSet parse_subset(const GridShape& shape, const std::string& text) {
    // "r,c;r,c;..."
    VertexSet u;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        const auto comma = item.find(',');
        if (comma == std::string::npos) throw ParameterError("--subset entries look like row,col; got '" + item + "'");
        int r = 0, c = 0;
        try {
            r = std::stoi(item.substr(0, comma));
            c = std::stoi(item.substr(comma + 1));
        } catch (const std::exception&) {
            throw ParameterError("--subset entry is not numeric: '" + item + "'");
        }
        u.insert(shape.index(r, c));
    }
    return u;
}

Json evidence_json(const RankEvidence& e) {
    return {{"j", e.j},           {"s", e.s},       {"dim_j", e.dim_source},
            {"dim_js", e.dim_target}, {"rank", e.rank}, {"maximal", e.maximal()}};
}

Json verdict_json(const LefschetzVerdict& v) {
    Json out;
    out["ring"] = to_string(v.ring);
    out["property"] = to_string(v.property);
    out["outcome"] = to_string(v.outcome);
    out["trials_requested"] = v.trials_requested;
    out["trials_run"] = v.trials.size();
    out["witness_trial"] = v.witness_trial ? Json(*v.witness_trial) : Json(nullptr);
    Json certs;
    certs["certificate"] = v.certificate.empty() ? Json(nullptr) : Json(v.certificate);
    certs["betti_lower_bound"] = v.betti_lower_bound ? Json(*v.betti_lower_bound) : Json(nullptr);
    certs["F_value"] = v.F_value ? big(*v.F_value) : Json(nullptr);
    certs["position"] = v.certificate_position
                            ? Json{{"j", v.certificate_position->first}, {"s", v.certificate_position->second}}
                            : Json(nullptr);
    out["certificates"] = certs;
    Json trials = Json::array();
    for (const auto& t : v.trials) {
        Json tj;
        tj["field"] = field_json(t.field);
        tj["redraws"] = t.redraws;
        tj["hilbert_function"] = t.hilbert.values;
        tj["maximal_everywhere"] = t.maximal_everywhere;
        Json ev = Json::array();
        for (const auto& e : t.evidence) ev.push_back(evidence_json(e));
        tj["evidence"] = ev;
        trials.push_back(tj);
    }
    out["trials"] = trials;
    return out;
}

// Human rendering of a JSON report: nested keys indented, scalar arrays inline.
void render_human(const Json& j, std::ostream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar_array = [](const Json& a) {
        for (const auto& x : a)
            if (x.is_structured()) return false;
        return true;
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        const std::string key = j.is_object() ? it.key() : "-";
        if (v.is_object()) {
            os << pad << key << ":\n";
            render_human(v, os, indent + 2);
        } else if (v.is_array() && !scalar_array(v)) {
            os << pad << key << ":\n";
            for (const auto& item : v) {
                if (item.is_object()) {
                    os << pad << "  -\n";
                    render_human(item, os, indent + 4);
                } else {
                    os << pad << "  - " << item.dump() << "\n";
                }
            }
        } else if (v.is_string()) {
            os << pad << key << ": " << v.get<std::string>() << "\n";
        } else {
            os << pad << key << ": " << v.dump() << "\n";
        }
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// ---------------------------------------------------------------------------
// Commands. Each returns the "result" object of the report.

Json cmd_ideal(const RunConfig& c) {
    const auto shape = GridShape::make(c.t, c.m, c.n);
    const auto ideal = initial_ideal_generators(shape);
    Json out;
    out["generator_count"] = ideal.generators.size();
    out["expected_count"] = big(binomial(c.m, c.t) * binomial(c.n, c.t));
    out["degree"] = c.t;
    Json gens = Json::array();
    for (const auto& g : ideal.generators) gens.push_back(points(shape, g));
    out["generators"] = gens;
    return out;
}

Json cmd_facets(const RunConfig& c) {
    const auto shape = GridShape::make(c.t, c.m, c.n);
    const auto budget = c.budget ? *c.budget : kDefaultFacetBudget;
    const auto families = enumerate_path_families(shape, budget);
    Json out;
    out["facet_count"] = families.size();
    out["facet_count_lgv"] = big(facet_count_lgv(shape));
    out["facet_size"] = shape.krull_dimension();
    out["f_vector"] = big_list(delta_f_vector(shape).counts);
    out["h_vector"] = big_list(delta_h_vector(shape));
    if (c.full) {
        Json list = Json::array();
        for (const auto& f : families) list.push_back({{"vertices", points(shape, f.vertices)}, {"steps", f.steps}});
        out["facets"] = list;
    }
    return out;
}

Json omega_json(const GridShape& shape, int a, const FieldSpec& field, bool full) {
    const auto region = vertex_region(shape, a);
    const auto faces = maximal_faces_within(shape, region);
    int dim = -1;
    for (const auto& f : faces) dim = std::max(dim, static_cast<int>(f.size()) - 1);
    Json out;
    out["a"] = a;
    out["vertices"] = points(shape, region);
    out["size"] = region.size();
    out["facet_count"] = faces.size();
    out["dimension"] = dim;
    out["reduced_homology"] = homology_vector(shape, region, dim, field);
    if (full) {
        Json list = Json::array();
        for (const auto& f : faces) list.push_back(points(shape, f));
        out["facets"] = list;
    }
    return out;
}

Json cmd_omega(const RunConfig& c) {
    const auto shape = GridShape::make(c.t, c.m, c.n);
    const auto field = field_of(c);
    Json out;
    out["homology_indices"] = "reduced_homology[k] is dim H~_{k-1}";
    Json list = Json::array();
    if (c.a) {
        list.push_back(omega_json(shape, *c.a, field, c.full));
    } else {
        for (int a = 0; a < c.t; ++a) list.push_back(omega_json(shape, a, field, c.full));
    }
    out["omega"] = list;
    return out;
}

Json cmd_homology(const RunConfig& c) {
    const auto shape = GridShape::make(c.t, c.m, c.n);
    const auto field = field_of(c);
    if (c.a && !c.subset.empty()) throw ParameterError("--a and --subset are mutually exclusive");
    VertexSet u = VertexSet::prefix(shape.vertex_count());
    std::string what = "delta";
    if (c.a) {
        u = vertex_region(shape, *c.a);
        what = "omega";
    } else if (!c.subset.empty()) {
        u = parse_subset(shape, c.subset);
        what = "restriction";
    }
    const auto budget = c.budget ? *c.budget : kDefaultFaceBudget;
    if (what == "delta") {
        BigInt total = 0;
        for (const auto& f : delta_f_vector(shape).counts) total += f;
        if (total > BigInt(budget))
            throw BudgetError("homology: Delta has " + total.str() + " faces, over the budget of " + std::to_string(budget),
                              total > BigInt(std::numeric_limits<std::uint64_t>::max())
                                  ? std::numeric_limits<std::uint64_t>::max()
                                  : static_cast<std::uint64_t>(total));
    }
    const int top = std::min<int>(static_cast<int>(u.size()), shape.krull_dimension()) - 1;
    Json out;
    out["complex"] = what;
    if (c.a) out["a"] = *c.a;
    out["vertices"] = points(shape, u);
    out["homology_indices"] = "reduced_homology[k] is dim H~_{k-1}";
    out["reduced_homology"] = homology_vector(shape, u, top, field);
    return out;
}

Json cmd_betti(const RunConfig& c) {
    const auto shape = GridShape::make(c.t, c.m, c.n);
    const auto field = field_of(c);
    const int i = c.i ? *c.i : shape.height();
    const int j = c.j ? *c.j : shape.height() + shape.t() - 1;
    const auto budget = c.budget ? *c.budget : kDefaultBettiBudget;
    Json out;
    out["i"] = i;
    out["j"] = j;
    const bool corner = i == shape.height() && j == shape.height() + shape.t() - 1;
    if (corner && !shape.t_is_min()) {
        const auto lb = omega_lower_bound(shape, field);
        Json w = Json::array();
        for (const auto& x : lb.witnesses) w.push_back({{"subset", points(shape, x.subset)}, {"homology_dim", x.homology_dim}});
        out["omega_lower_bound"] = {{"value", lb.value}, {"kind", to_string(lb.kind)}, {"witnesses", w}};
    }
    const auto res = hochster_betti(shape, i, j, field, budget, c.threads);
    out["value"] = res.value;
    out["kind"] = to_string(res.kind);
    out["subsets_examined"] = res.subsets_examined;
    out["pruned"] = res.pruned;
    out["witness_count"] = res.witnesses.size();
    if (c.full) {
        Json w = Json::array();
        for (const auto& x : res.witnesses) w.push_back({{"subset", points(shape, x.subset)}, {"homology_dim", x.homology_dim}});
        out["witnesses"] = w;
    }
    return out;
}

Json cmd_criteria(const RunConfig& c) {
    const auto shape = GridShape::make(c.t, c.m, c.n);
    const auto report = classify(shape);
    Json out;
    out["F_value"] = big(report.F_value);
    out["F_nonnegative"] = report.F_nonnegative;
    out["failure_certificate"] = shape.t_is_min() ? Json(nullptr) : Json(failure_certificate(shape));
    out["main_theorem_case"] = to_string(report.main_theorem_case);
    out["betti_floor"] = report.betti_floor;
    return out;
}

void check_artinian_budget(const GridShape& shape, std::uint64_t budget) {
    const auto e = facet_count_lgv(shape);
    if (e > BigInt(budget))
        throw BudgetError("Artinian reduction of " + shape.label() + " has dimension " + e.str() +
                              ", over the budget of " + std::to_string(budget),
                          e > BigInt(std::numeric_limits<std::uint64_t>::max()) ? std::numeric_limits<std::uint64_t>::max()
                                                                              : static_cast<std::uint64_t>(e));
}

Json cmd_check(const RunConfig& c) {
    const auto shape = GridShape::make(c.t, c.m, c.n);
    const auto field = field_of(c);
    const auto ring = parse_ring(c.ring);
    const auto property = parse_property(c.property);
    check_artinian_budget(shape, c.budget ? *c.budget : kDefaultFacetBudget);
    const auto v = lefschetz_verdict(shape, ring, property, field, VerdictOptions{c.trials});
    Json out = verdict_json(v);
    const auto& hf = v.trials.front().hilbert;
    out["power_ideal"] = hf.at(shape.t()) == 0;
    if (c.full) {
        visit_field(field, [&](const auto& f) {
            using Fld = std::decay_t<decltype(f)>;
            const auto red = Reduction<Fld>::build(shape, ring, f, field.seed);
            out["socle_dimensions"] = red.socle_dimensions();
        });
    }
    return out;
}

struct SurveyRow {
    int t, m, n;
    std::string F_value;
    std::string classify_case;
    std::string betti_corner;
    std::string betti_corner_kind;
    std::string verdicts[4];
    long long wall_time_ms = 0;
};

const char* const kVerdictColumns[4] = {"wlp_initial", "slp_initial", "wlp_minors", "slp_minors"};

SurveyRow survey_row(const RunConfig& c, const GridShape& shape, const FieldSpec& field) {
    const auto start = std::chrono::steady_clock::now();
    SurveyRow row{shape.t(), shape.m(), shape.n()};
    const auto report = classify(shape);
    row.F_value = report.F_value.str();
    row.classify_case = to_string(report.main_theorem_case);
    const auto betti_budget = c.budget ? *c.budget : kDefaultBettiBudget;
    try {
        const auto res =
            hochster_betti(shape, shape.height(), shape.height() + shape.t() - 1, field, betti_budget, c.threads);
        row.betti_corner = std::to_string(res.value);
        row.betti_corner_kind = "exact";
    } catch (const BudgetError&) {
        if (shape.t_is_min()) {
            row.betti_corner = "skipped(budget)";
            row.betti_corner_kind = "skipped(budget)";
        } else {
            row.betti_corner = std::to_string(omega_lower_bound(shape, field).value);
            row.betti_corner_kind = "lower_bound";
        }
    }
    const bool fits = facet_count_lgv(shape) <= BigInt(kDefaultFacetBudget);
    int k = 0;
    for (auto ring : {RingKind::initial, RingKind::minors}) {
        for (auto property : {Property::wlp, Property::slp}) {
            row.verdicts[k++] = fits ? to_string(lefschetz_verdict(shape, ring, property, field, VerdictOptions{c.trials}).outcome)
                                     : "skipped(budget)";
        }
    }
    row.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::vector<GridShape> survey_shapes(const RunConfig& c) {
    if (c.t < 2) throw ParameterError("survey: --t must be at least 2");
    if (c.max_m < c.t || c.max_n < c.t) throw ParameterError("survey: --max-m and --max-n must be at least t");
    std::vector<GridShape> out;
    for (int m = c.t; m <= c.max_m; ++m)
        for (int n = m; n <= c.max_n; ++n)
            if (c.t < std::max(m, n) && m * n <= 256) out.push_back(GridShape::make(c.t, m, n));
    return out;
}

// ---------------------------------------------------------------------------

void emit_report(std::ostream& os, const std::string& format, const std::string& command, const Json& config,
                 const Json& result) {
    if (format == "json") {
        Json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = command;
        doc["config"] = config;
        doc["result"] = result;
        os << doc.dump(2) << "\n";
    } else {
        os << command << "\n";
        render_human(Json{{"config", config}}, os, 0);
        render_human(result, os, 0);
    }
}

Json config_json(const std::string& command, const RunConfig& c) {
    Json out;
    if (command == "survey") {
        out["t"] = c.t;
        out["max_m"] = c.max_m;
        out["max_n"] = c.max_n;
    } else {
        const auto shape = GridShape::make(c.t, c.m, c.n);
        out["shape"] = shape_json(shape);
    }
    if (command == "check") {
        out["ring"] = c.ring;
        out["property"] = to_string(parse_property(c.property));
    }
    out["field"] = field_json(field_of(c));
    if (command == "check" || command == "survey") out["trials"] = c.trials;
    if (c.budget) out["budget"] = *c.budget;
    return out;
}

int run_survey(const RunConfig& c, std::ostream& os, const std::string& format) {
    const auto field = field_of(c);
    const auto shapes = survey_shapes(c);
    if (format == "csv") {
        os << "t,m,n,F_value,classify_case,betti_corner,betti_corner_kind";
        for (auto col : kVerdictColumns) os << "," << col;
        os << ",wall_time_ms\r\n";
        for (const auto& s : shapes) {
            const auto r = survey_row(c, s, field);
            os << r.t << "," << r.m << "," << r.n << "," << csv_field(r.F_value) << "," << csv_field(r.classify_case) << ","
               << csv_field(r.betti_corner) << "," << csv_field(r.betti_corner_kind);
            for (const auto& v : r.verdicts) os << "," << csv_field(v);
            os << "," << r.wall_time_ms << "\r\n";
            os.flush();
        }
        return kExitOk;
    }
    Json rows = Json::array();
    for (const auto& s : shapes) {
        const auto r = survey_row(c, s, field);
        Json row{{"t", r.t},
                 {"m", r.m},
                 {"n", r.n},
                 {"F_value", r.F_value},
                 {"classify_case", r.classify_case},
                 {"betti_corner", r.betti_corner},
                 {"betti_corner_kind", r.betti_corner_kind}};
        for (int k = 0; k < 4; ++k) row[kVerdictColumns[k]] = r.verdicts[k];
        // Wall time stays out of JSON so identical runs give identical bytes.
        rows.push_back(row);
    }
    emit_report(os, format, "survey", config_json("survey", c), Json{{"rows", rows}});
    return kExitOk;
}

std::string one_line(std::string s) {
    for (auto& ch : s)
        if (ch == '\n' || ch == '\r') ch = ' ';
    return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lefschetz properties of determinantal rings and their initial ideals", "lefforge"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool with_shape) {
        if (with_shape) {
            sub->add_option("--t", cfg.t, "minor size")->required();
            sub->add_option("--m", cfg.m, "rows")->required();
            sub->add_option("--n", cfg.n, "columns")->required();
        }
        auto* prime = sub->add_option("--prime", cfg.prime, "prime modulus (default 2^61-1)");
        sub->add_flag("--rational", cfg.rational, "exact rational arithmetic")->excludes(prime);
        sub->add_option("--seed", cfg.seed, "random seed (default: LEFFORGE_SEED or a fixed constant)");
        sub->add_option("--budget", cfg.budget, "work budget for the command");
        sub->add_option("--format", cfg.format, "human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));
        sub->add_option("--output", cfg.output, "write the report to this file");
        sub->add_option("--threads", cfg.threads, "worker cap")->check(CLI::Range(1u, 256u));
        sub->add_flag("--full", cfg.full, "include full lists (facets, witnesses, socle)");
    };

    std::map<std::string, std::function<Json(const RunConfig&)>> commands{
        {"ideal", cmd_ideal}, {"facets", cmd_facets}, {"omega", cmd_omega},       {"homology", cmd_homology},
        {"betti", cmd_betti}, {"criteria", cmd_criteria}, {"check", cmd_check},
    };

    auto* ideal = app.add_subcommand("ideal", "generators of the initial ideal");
    add_common(ideal, true);
    auto* facets = app.add_subcommand("facets", "facets of Delta(t,m,n) as nonintersecting path families");
    add_common(facets, true);
    auto* omega = app.add_subcommand("omega", "the subcomplexes Omega_a and their homology");
    add_common(omega, true);
    omega->add_option("--a", cfg.a, "region index in [0, t-1]");
    auto* homology = app.add_subcommand("homology", "reduced homology of Delta or a restriction");
    add_common(homology, true);
    homology->add_option("--a", cfg.a, "restrict to V_a");
    homology->add_option("--subset", cfg.subset, "restrict to the points r,c;r,c;...");
    auto* betti = app.add_subcommand("betti", "graded Betti number of R/in(I_t) by Hochster's formula");
    add_common(betti, true);
    betti->add_option("--i", cfg.i, "homological degree (default h)");
    betti->add_option("--j", cfg.j, "internal degree (default h+t-1)");
    auto* criteria = app.add_subcommand("criteria", "F_t(m,n) and the case table");
    add_common(criteria, true);
    auto* check = app.add_subcommand("check", "WLP/SLP verdict for one ring");
    add_common(check, true);
    check->add_option("--ring", cfg.ring, "initial or minors")->check(CLI::IsMember({"initial", "minors"}));
    check->add_option("--property", cfg.property, "WLP or SLP")
        ->check(CLI::IsMember({"WLP", "SLP", "wlp", "slp"}));
    check->add_option("--trials", cfg.trials, "independent draws")->check(CLI::Range(1, 64));
    auto* survey = app.add_subcommand("survey", "verdict grid over all shapes up to a size");
    add_common(survey, false);
    survey->add_option("--t", cfg.t, "minor size")->required();
    survey->add_option("--max-m", cfg.max_m, "largest m")->required();
    survey->add_option("--max-n", cfg.max_n, "largest n")->required();
    survey->add_option("--trials", cfg.trials, "independent draws")->check(CLI::Range(1, 64));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: parameter: " << one_line(e.what()) << "\n";
        return kExitParameter;
    }

    const auto* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    try {
        std::string format = cfg.format;
        if (format.empty()) format = command == "survey" ? "csv" : "human";
        if (format == "csv" && command != "survey") throw ParameterError("--format csv is only available for survey");

        std::ofstream file;
        std::ostream* os = &out;
        if (!cfg.output.empty()) {
            file.open(cfg.output, std::ios::binary);
            if (!file) throw ParameterError("cannot open --output file '" + cfg.output + "'");
            os = &file;
        }
        if (command == "survey") return run_survey(cfg, *os, format);
        const auto config = config_json(command, cfg);
        const auto result = commands.at(command)(cfg);
        emit_report(*os, format, command, config, result);
        return kExitOk;
    } catch (const ParameterError& e) {
        err << "error: parameter: " << one_line(e.what()) << "\n";
        return kExitParameter;
    } catch (const BudgetError& e) {
        err << "error: budget: required=" << e.required() << ": " << one_line(e.what()) << "\n";
        return kExitBudget;
    } catch (const DegenerateDrawError& e) {
        err << "error: degenerate: " << one_line(e.what()) << "\n";
        return kExitDegenerate;
    }
}

}  // namespace lefforge
