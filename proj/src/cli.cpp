#include "toyqm/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "toyqm/correspondence.hpp"
#include "toyqm/f5qm.hpp"
#include "toyqm/projective.hpp"
#include "toyqm/spekkens.hpp"
#include "toyqm/verify.hpp"

namespace toyqm::cli {

namespace {

namespace sp = toyqm::spekkens;
namespace corr = toyqm::correspondence;
using Json = nlohmann::ordered_json;

constexpr const char* schema_version = "toyqm-report/1";

std::string ket_symbol(char name) { return std::string("|") + name + ">"; }
std::string bra_symbol(char name) { return std::string("<") + name + "|"; }

Json make_doc(const std::string& command) {
    Json doc;
    doc["schema"] = schema_version;
    doc["command"] = command;
    return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

/// Expresses a nonzero dim-2 vector as scale * named state.
std::pair<F5, char> named_form(const Ket& raw) {
    ProjectiveState canonical(raw);
    int lead = canonical.rep()[0].is_zero() ? 1 : 0;
    return {raw[lead], basis::name_of(canonical)};
}

std::string scaled_ket_symbol(F5 scale, char name) {
    std::string text;
    if (scale == F5(-1))
        text = "-";
    else if (scale != F5(1))
        text = scale.to_string();
    return text + ket_symbol(name);
}

std::string product_label(const ProjectiveState& s) {
    auto f = factor_product(s);
    return std::string(1, basis::name_of(f->first)) + "*" +
           std::string(1, basis::name_of(f->second));
}

// ---------------------------------------------------------------- tables

std::string tables_text() {
    std::ostringstream os;
    os << "pairing <row|col>\n";
    os << "     ";
    for (char c : basis::names()) os << std::setw(5) << ket_symbol(c);
    os << "\n";
    for (char r : basis::names()) {
        os << "  " << bra_symbol(r);
        for (char c : basis::names())
            os << std::setw(5) << pairing(basis::bra(r), basis::ket(c)).to_string();
        os << "\n";
    }
    os << "\nkets\n";
    for (char n : basis::names())
        os << "  " << ket_symbol(n) << " = " << basis::ket(n).to_string() << "\n";
    os << "\nbras\n";
    for (char n : basis::names())
        os << "  " << bra_symbol(n) << " = " << basis::bra(n).to_string() << "\n";
    os << "\nobservables\n";
    for (const Observable& o : Observable::all())
        os << "  " << o.name() << ": +1 reads "
           << bra_symbol(o.outcome_state(Outcome::plus)) << ", -1 reads "
           << bra_symbol(o.outcome_state(Outcome::minus)) << "\n";
    return os.str();
}

Json vector_json(const Ket& k) {
    Json arr = Json::array();
    for (int i = 0; i < k.dim(); ++i) arr.push_back(k[i].value());
    return arr;
}

Json vector_json(const Bra& b) {
    Json arr = Json::array();
    for (int i = 0; i < b.dim(); ++i) arr.push_back(b[i].value());
    return arr;
}

std::string tables_json() {
    Json doc = make_doc("tables");
    Json table;
    for (char r : basis::names()) {
        Json row;
        for (char c : basis::names())
            row[std::string(1, c)] =
                pairing(basis::bra(r), basis::ket(c)).value();
        table[std::string(1, r)] = row;
    }
    doc["pairing"] = table;
    Json kets, bras;
    for (char n : basis::names()) {
        kets[std::string(1, n)] = vector_json(basis::ket(n));
        bras[std::string(1, n)] = vector_json(basis::bra(n));
    }
    doc["kets"] = kets;
    doc["bras"] = bras;
    Json observables;
    for (const Observable& o : Observable::all()) {
        Json entry;
        entry["+1"] = std::string(1, o.outcome_state(Outcome::plus));
        entry["-1"] = std::string(1, o.outcome_state(Outcome::minus));
        observables[std::string(1, o.name())] = entry;
    }
    doc["observables"] = observables;
    return dump(doc);
}

// ------------------------------------------------------------- enumerate

std::string enumerate_text(const std::string& space) {
    std::ostringstream os;
    if (space == "p1") {
        for (const auto& s : enumerate_states(2))
            os << s.to_string() << " = " << basis::name_of(s) << "\n";
        os << "6 states\n";
    } else if (space == "p3") {
        long products = 0;
        const auto states = enumerate_states(4);
        for (const auto& s : states) {
            os << s.to_string();
            if (is_product(s)) {
                ++products;
                os << " = " << product_label(s);
            }
            os << "\n";
        }
        os << states.size() << " total, " << products << " product, "
           << states.size() - products << " entangled\n";
    } else if (space == "spekkens1") {
        for (const auto& e : sp::epistemic_states()) os << e.to_string() << "\n";
        os << "6 states\n";
    } else {
        auto census = sp::pair_states();
        for (const auto& s : census.products) os << s.to_string() << "\n";
        for (const auto& s : census.entangled) os << s.to_string() << "\n";
        os << census.products.size() << " product, " << census.entangled.size()
           << " entangled\n";
    }
    return os.str();
}

std::string enumerate_json(const std::string& space) {
    Json doc = make_doc("enumerate");
    doc["space"] = space;
    if (space == "p1") {
        Json states = Json::array();
        for (const auto& s : enumerate_states(2)) {
            Json entry;
            entry["state"] = s.to_string();
            entry["name"] = std::string(1, basis::name_of(s));
            states.push_back(entry);
        }
        doc["states"] = states;
        doc["counts"] = {{"total", 6}};
    } else if (space == "p3") {
        Json states = Json::array();
        long products = 0;
        const auto all = enumerate_states(4);
        for (const auto& s : all) {
            Json entry;
            entry["state"] = s.to_string();
            bool product = is_product(s);
            entry["product"] = product;
            if (product) {
                ++products;
                entry["factors"] = product_label(s);
            }
            states.push_back(entry);
        }
        doc["states"] = states;
        doc["counts"] = {{"total", all.size()},
                         {"product", products},
                         {"entangled", long(all.size()) - products}};
    } else if (space == "spekkens1") {
        Json states = Json::array();
        for (const auto& e : sp::epistemic_states()) states.push_back(e.to_string());
        doc["states"] = states;
        doc["counts"] = {{"total", 6}};
    } else {
        auto census = sp::pair_states();
        Json products = Json::array(), entangled = Json::array();
        for (const auto& s : census.products) products.push_back(s.to_string());
        for (const auto& s : census.entangled) entangled.push_back(s.to_string());
        doc["products"] = products;
        doc["entangled"] = entangled;
        doc["counts"] = {{"product", census.products.size()},
                         {"entangled", census.entangled.size()}};
    }
    return dump(doc);
}

// ---------------------------------------------------------------- verify

std::string verify_text(const verify::Report& report) {
    std::ostringstream os;
    verify::print(report, os);
    return os.str();
}

std::string verify_json(const verify::Report& report) {
    Json doc = make_doc("verify");
    doc["passed"] = report.all_passed();
    Json suites = Json::array();
    for (const auto& suite : report.suites) {
        Json entry;
        entry["name"] = suite.name;
        entry["checks"] = suite.checks;
        entry["passed"] = suite.passed();
        Json failures = Json::array();
        for (const auto& f : suite.failures) {
            Json fail;
            fail["check"] = f.check;
            fail["expected"] = f.expected;
            fail["actual"] = f.actual;
            failures.push_back(fail);
        }
        entry["failures"] = failures;
        Json notes = Json::array();
        for (const auto& line : suite.info) notes.push_back(line);
        entry["notes"] = notes;
        suites.push_back(entry);
    }
    doc["suites"] = suites;
    return dump(doc);
}

// -------------------------------------------------------------- classify

std::string support_grid(const sp::PairState& state) {
    std::ostringstream os;
    auto cells = state.ontic_support();
    for (int row = 1; row <= 4; ++row) {
        os << "    ";
        for (int col = 1; col <= 4; ++col) {
            bool shaded = false;
            for (auto [r, c] : cells) shaded |= r == row && c == col;
            os << (shaded ? '#' : '.');
            if (col < 4) os << ' ';
        }
        os << "\n";
    }
    return os.str();
}

std::string classify_text(const corr::ClassificationReport& report) {
    std::ostringstream os;
    for (const auto& rec : report.records) {
        os << "perm:" << rec.perm.to_string()
           << "  parity=" << (rec.perm.is_even() ? "even" : "odd")
           << "  matched=" << (rec.matched ? "true" : "false");
        if (!rec.analogs.empty()) {
            os << "  analogs:";
            for (const auto& a : rec.analogs) os << " " << a.to_string();
        }
        os << "\n" << support_grid(sp::PairState::entangled(rec.perm)) << "\n";
    }
    os << report.matched_count << " matched, "
       << report.records.size() - report.matched_count << " unmatched\n";
    os << "matched permutations all odd: "
       << (report.matched_exactly_odd ? "yes" : "no") << "\n";
    os << "distinct analogs: " << report.distinct_analog_count
       << ", analog lists pairwise disjoint: "
       << (report.analog_lists_disjoint ? "yes" : "no") << "\n";
    return os.str();
}

std::string classify_json(const corr::ClassificationReport& report) {
    Json doc = make_doc("classify");
    Json records = Json::array();
    for (const auto& rec : report.records) {
        Json entry;
        entry["perm"] = rec.perm.to_string();
        entry["parity"] = rec.perm.is_even() ? "even" : "odd";
        entry["matched"] = rec.matched;
        Json analogs = Json::array();
        for (const auto& a : rec.analogs) analogs.push_back(a.to_string());
        entry["analogs"] = analogs;
        Json support = Json::array();
        for (auto [r, c] : sp::PairState::entangled(rec.perm).ontic_support())
            support.push_back(Json::array({r, c}));
        entry["support"] = support;
        Json profile;
        for (const auto& [setting, collapse] : rec.profile.entries)
            profile[setting.key()] = {
                {"probability", to_string(collapse.probability)},
                {"post", collapse.post.to_string()},
                {"factors", product_label(collapse.post)},
            };
        entry["profile"] = profile;
        records.push_back(entry);
    }
    doc["records"] = records;
    doc["summary"] = {
        {"matched", report.matched_count},
        {"unmatched", int(report.records.size()) - report.matched_count},
        {"matched_exactly_odd", report.matched_exactly_odd},
        {"distinct_analogs", report.distinct_analog_count},
        {"analog_lists_disjoint", report.analog_lists_disjoint},
    };
    return dump(doc);
}

// -------------------------------------------------------------- simulate

std::vector<sp::Observable> parse_observables(const std::string& text) {
    std::vector<sp::Observable> seq;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        if (token.size() != 1)
            throw std::invalid_argument("observable must be X, Y or Z");
        seq.push_back(sp::Observable::by_name(token[0]));
    }
    if (seq.empty()) throw std::invalid_argument("no observables given");
    return seq;
}

std::string frequency(std::int64_t count, std::int64_t trials) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(5)
       << double(count) / double(trials);
    return os.str();
}

std::string simulate_text(const sp::SequenceReport& report) {
    std::ostringstream os;
    os << "initial state: " << report.initial.to_string() << "\n";
    os << "trials: " << report.trials << "  seed: " << report.seed << "\n";
    for (size_t i = 0; i < report.steps.size(); ++i) {
        const auto& step = report.steps[i];
        os << "step " << i + 1 << ": " << step.observable << "  +1 "
           << step.plus_count << " (" << frequency(step.plus_count, report.trials)
           << ")  -1 " << step.minus_count << " ("
           << frequency(step.minus_count, report.trials) << ")  exact p(+1) = "
           << to_string(step.exact_p_plus);
        if (i > 0)
            os << "  repeat " << frequency(step.same_as_previous, report.trials);
        os << "\n";
    }
    os << "knowledge balance: " << (report.knowledge_balance ? "ok" : "VIOLATED")
       << " (" << report.containment_checks << " containment checks)\n";
    return os.str();
}

std::string simulate_json(const sp::SequenceReport& report) {
    Json doc = make_doc("simulate");
    doc["initial"] = report.initial.to_string();
    doc["trials"] = report.trials;
    doc["seed"] = report.seed;
    Json steps = Json::array();
    for (size_t i = 0; i < report.steps.size(); ++i) {
        const auto& step = report.steps[i];
        Json entry;
        entry["observable"] = std::string(1, step.observable);
        entry["plus"] = step.plus_count;
        entry["minus"] = step.minus_count;
        entry["plus_frequency"] = double(step.plus_count) / double(report.trials);
        entry["exact_p_plus"] = to_string(step.exact_p_plus);
        if (i > 0)
            entry["repeat_frequency"] =
                double(step.same_as_previous) / double(report.trials);
        steps.push_back(entry);
    }
    doc["steps"] = steps;
    doc["knowledge_balance"] = report.knowledge_balance;
    doc["containment_checks"] = report.containment_checks;
    return dump(doc);
}

// ------------------------------------------------------------- superpose

struct SuperposeParts {
    sp::EpistemicState result;
    char left_name;
    char right_name;
    F5 coefficient;
    Ket raw;
    F5 scale;
    char sum_name;
};

SuperposeParts superpose_parts(const sp::EpistemicState& left, int variant,
                               const sp::EpistemicState& right) {
    SuperposeParts parts{
        corr::extended_sum(left, variant, right),
        corr::letter_of(left),
        corr::letter_of(right),
        corr::variant_coefficient(variant),
        Ket::dim2(0, 0),
        F5(0),
        'a',
    };
    parts.raw = basis::ket(parts.left_name) +
                parts.coefficient * basis::ket(parts.right_name);
    auto [scale, name] = named_form(parts.raw);
    parts.scale = scale;
    parts.sum_name = name;
    return parts;
}

std::string superpose_text(const SuperposeParts& p) {
    std::ostringstream os;
    os << p.result.to_string() << " (" << ket_symbol(p.left_name);
    if (p.coefficient == F5(1))
        os << "+";
    else if (p.coefficient == F5(-1))
        os << "-";
    else if (p.coefficient == F5(2))
        os << "+2";
    else
        os << "-2";
    os << ket_symbol(p.right_name) << " = "
       << scaled_ket_symbol(p.scale, p.sum_name);
    if (p.scale != F5(1)) os << " ~ " << ket_symbol(p.sum_name);
    os << ")\n";
    return os.str();
}

std::string superpose_json(const sp::EpistemicState& left, int variant,
                           const sp::EpistemicState& right,
                           const SuperposeParts& p) {
    Json doc = make_doc("superpose");
    doc["left"] = left.to_string();
    doc["variant"] = variant;
    doc["right"] = right.to_string();
    doc["result"] = p.result.to_string();
    Json f5;
    f5["left_ket"] = std::string(1, p.left_name);
    f5["coefficient"] = p.coefficient.value();
    f5["right_ket"] = std::string(1, p.right_name);
    f5["raw_sum"] = p.raw.to_string();
    f5["scale"] = p.scale.value();
    f5["canonical"] = std::string(1, p.sum_name);
    doc["f5"] = f5;
    return dump(doc);
}

std::string compare_sums_json(const std::vector<corr::SumComparisonRow>& rows) {
    Json doc = make_doc("compare-sums");
    Json out_rows = Json::array();
    int agreements = 0;
    for (const auto& r : rows) {
        Json entry;
        entry["lhs"] = r.lhs.to_string();
        entry["rhs"] = r.rhs.to_string();
        entry["variant"] = r.variant;
        entry["disjoint"] = r.disjoint_sum.to_string();
        entry["induced"] = r.induced_sum.to_string();
        entry["agree"] = r.agree;
        if (r.agree) ++agreements;
        out_rows.push_back(entry);
    }
    doc["rows"] = out_rows;
    doc["agreements"] = agreements;
    doc["total"] = rows.size();
    return dump(doc);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Spekkens toy model and quantum mechanics over F5, side by side"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    std::string out_path;
    app.add_option("--out", out_path, "also write the report to this file");

    CLI::App* tables_cmd = app.add_subcommand(
        "tables", "print the pairing table, basis vectors and observables");

    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "list a state space with counts");
    std::string space;
    enumerate_cmd
        ->add_option("space", space, "p1, p3, spekkens1 or spekkens2")
        ->required()
        ->check(CLI::IsMember({"p1", "p3", "spekkens1", "spekkens2"}));

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run every verification suite");
    std::vector<int> override_cell;
    verify_cmd
        ->add_option("--override-pairing-cell", override_cell,
                     "self-test hook: row, column, value")
        ->expected(3)
        ->group("");

    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "search F5 analogs for all 24 correlated pair states");

    CLI::App* simulate_cmd = app.add_subcommand(
        "simulate", "sample a measurement sequence on one Spekkens system");
    std::string state_text;
    std::string observables_text;
    std::int64_t trials = 1000;
    std::uint64_t seed = 0;
    simulate_cmd->add_option("--state", state_text, "initial state, e.g. 1v2")
        ->required();
    simulate_cmd
        ->add_option("--observables", observables_text,
                     "comma-separated sequence, e.g. X,Z")
        ->required();
    simulate_cmd->add_option("--trials", trials, "number of runs")
        ->capture_default_str();
    simulate_cmd->add_option("--seed", seed, "random seed")
        ->capture_default_str();

    CLI::App* superpose_cmd = app.add_subcommand(
        "superpose", "combine two epistemic states through the F5 dictionary");
    std::string left_text, right_text;
    int variant = 1;
    bool compare_sums_flag = false;
    superpose_cmd->add_flag("--compare-sums", compare_sums_flag,
                            "print the disjoint and induced sums side by side");
    superpose_cmd->add_option("left", left_text, "left state, e.g. 1v2");
    superpose_cmd->add_option("variant", variant, "sum variant 1..4")
        ->check(CLI::Range(1, 4));
    superpose_cmd->add_option("right", right_text, "right state, e.g. 1v3");

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("toyqm");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const bool json = format == "json";
    std::string rendered;
    int code = 0;
    try {
        if (app.got_subcommand(tables_cmd)) {
            rendered = json ? tables_json() : tables_text();
        } else if (app.got_subcommand(enumerate_cmd)) {
            rendered = json ? enumerate_json(space) : enumerate_text(space);
        } else if (app.got_subcommand(verify_cmd)) {
            verify::Options options;
            if (!override_cell.empty()) {
                if (override_cell[0] < 0 || override_cell[0] > 5 ||
                    override_cell[1] < 0 || override_cell[1] > 5)
                    throw std::invalid_argument("pairing cell out of range");
                options.pairing_golden[override_cell[0]][override_cell[1]] =
                    override_cell[2];
            }
            verify::Report report = verify::run_all(options);
            code = report.all_passed() ? 0 : 1;
            rendered = json ? verify_json(report) : verify_text(report);
        } else if (app.got_subcommand(classify_cmd)) {
            auto report = corr::classify_all();
            rendered = json ? classify_json(report) : classify_text(report);
        } else if (app.got_subcommand(simulate_cmd)) {
            auto initial = sp::EpistemicState::parse(state_text);
            auto sequence = parse_observables(observables_text);
            auto report = sp::simulate_sequence(initial, sequence, trials, seed);
            rendered = json ? simulate_json(report) : simulate_text(report);
        } else if (app.got_subcommand(superpose_cmd)) {
            if (compare_sums_flag) {
                auto rows = corr::compare_sum_definitions();
                rendered = json ? compare_sums_json(rows)
                                : corr::render_compare_sums(rows);
            } else {
                if (left_text.empty() || right_text.empty()) {
                    err << "error: superpose needs left, variant and right "
                           "(or --compare-sums)\n";
                    return 2;
                }
                auto left = sp::EpistemicState::parse(left_text);
                auto right = sp::EpistemicState::parse(right_text);
                auto parts = superpose_parts(left, variant, right);
                rendered = json ? superpose_json(left, variant, right, parts)
                                : superpose_text(parts);
            }
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    out << rendered;
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            err << "error: cannot write " << out_path << "\n";
            return 1;
        }
        file << rendered;
    }
    return code;
}

} // namespace toyqm::cli
