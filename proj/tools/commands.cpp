#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lowprob/compat.hpp"
#include "lowprob/dempster.hpp"
#include "lowprob/envelope.hpp"
#include "lowprob/error.hpp"
#include "lowprob/reduced.hpp"

namespace lowprob::cli {

namespace {

using nlohmann::ordered_json;

std::string approx(const Rational& r)
{
    std::ostringstream os;
    os << std::setprecision(12) << r.approx();
    return os.str();
}

void put(ordered_json& row, const std::string& key, const Rational& value, bool decimal)
{
    row[key] = value.str();
    if (decimal) {
        row[key + "_approx"] = approx(value);
    }
}

ordered_json labels_json(const FiniteSpace& space)
{
    ordered_json out = ordered_json::array();
    for (const auto& label : space.labels()) {
        out.push_back(label);
    }
    return out;
}

ordered_json measure_json(const ProbMeasure& q, bool decimal)
{
    ordered_json out = ordered_json::object();
    for (std::size_t i = 0; i < q.space().size(); ++i) {
        put(out, q.space().label(i), q[i], decimal);
    }
    return out;
}

ordered_json masks_json(const FiniteSpace& space, std::span<const Mask> masks)
{
    ordered_json out = ordered_json::array();
    for (Mask m : masks) {
        out.push_back(subset_name(space, m));
    }
    return out;
}

Report header(const std::string& name, const CommandOptions& options)
{
    Report report;
    report["schema_version"] = kSchemaVersion;
    ordered_json command;
    command["name"] = name;
    command["input"] = options.input;
    if (name == "lower") {
        command["family"] = options.family;
        command["sets"] = options.sets;
    }
    if (name == "check") {
        command["max_r"] = std::to_string(options.max_r);
        if (options.seed) {
            command["seed"] = std::to_string(*options.seed);
        }
    }
    command["decimal"] = options.decimal;
    report["command"] = std::move(command);
    return report;
}

std::vector<Subset> query_sets(const FiniteSpace& xs, const ProblemFile& problem, const CommandOptions& options)
{
    const auto& names = options.sets.empty() ? problem.queries : options.sets;
    std::vector<Subset> out;
    if (names.empty()) {
        for (Mask m : canonical_masks(xs.size())) {
            out.emplace_back(xs, m);
        }
        return out;
    }
    for (const auto& name : names) {
        out.push_back(Subset::parse(xs, name));
    }
    return out;
}

FamilySpec build_family(const ProblemFile& problem, const std::string& family)
{
    if (family == "dempster") {
        problem.require_x();
        problem.require_y();
        return DempsterFamily{problem.require_p(), problem.require_gamma()};
    }
    if (family == "envelope") {
        problem.require_x();
        problem.require_y();
        return EnvelopeFamily{EnvelopeEvidence(problem.require_ell(), problem.require_lambda_y())};
    }
    if (family == "polyhedral") {
        return PolyhedralFamily(problem.require_x(), problem.require_y(), problem.require_constraints());
    }
    throw InvalidInput("unknown family \"" + family + "\" (expected dempster, envelope or polyhedral)");
}

} // namespace

CommandResult cmd_dempster(const ProblemFile& problem, const CommandOptions& options)
{
    const FiniteSpace& xs = problem.require_x();
    const FiniteSpace& ys = problem.require_y();
    const ProbMeasure& p = problem.require_p();
    const MultivaluedMap& gamma = problem.require_gamma();

    const SetFunction belief = belief_from_mapping(p, gamma);
    const SetFunction upper = upper_from_lower(belief);
    const SetFunction mass = mobius(belief);

    Report report = header("dempster", options);
    report["spaces"] = {{"X", labels_json(xs)}, {"Y", labels_json(ys)}};
    ordered_json rows = ordered_json::array();
    for (Mask m : canonical_masks(xs.size())) {
        ordered_json row;
        row["set"] = subset_name(xs, m);
        put(row, "lower", belief[m], options.decimal);
        put(row, "upper", upper[m], options.decimal);
        put(row, "mass", mass[m], options.decimal);
        rows.push_back(std::move(row));
    }
    report["subsets"] = std::move(rows);
    report["predicates"] = {{"belief_function", is_belief_function(belief)}};
    return CommandResult{kExitOk, std::move(report), {}};
}

CommandResult cmd_check(const ProblemFile& problem, const CommandOptions& options)
{
    const FiniteSpace& ys = problem.require_y();
    const SetFunction& ell = problem.require_ell();
    if (!ell.is_normalized()) {
        throw InvalidInput("\"ell\" must satisfy ell(\"\") = 0 and ell(full) = 1");
    }
    if (options.max_r < 2) {
        throw InvalidInput("--max-r must be at least 2");
    }

    const auto lower_check = is_lower_probability(ell);
    const auto dominating = is_dominated(ell);
    const auto envelope = is_lower_envelope(ell);
    const std::optional<SetFunction> extension =
        dominating ? std::optional<SetFunction>(natural_envelope(ell)) : std::nullopt;
    const SetFunction upper = upper_from_lower(ell);
    const SetFunction mass = mobius(ell);

    Report report = header("check", options);
    report["spaces"] = {{"Y", labels_json(ys)}};
    ordered_json rows = ordered_json::array();
    for (Mask m : canonical_masks(ys.size())) {
        ordered_json row;
        row["set"] = subset_name(ys, m);
        put(row, "lower", ell[m], options.decimal);
        put(row, "upper", upper[m], options.decimal);
        put(row, "mass", mass[m], options.decimal);
        if (extension) {
            put(row, "natural_extension", (*extension)[m], options.decimal);
        }
        rows.push_back(std::move(row));
    }
    report["subsets"] = std::move(rows);

    MonotoneCheckOptions mono;
    mono.max_r = options.max_r;
    mono.sampling_seed = options.seed.value_or(0);
    ordered_json monotone_flags = ordered_json::object();
    ordered_json monotone_detail = ordered_json::object();
    for (std::size_t r = 2; r <= options.max_r; ++r) {
        const auto check = is_r_monotone(ell, r, mono);
        monotone_flags[std::to_string(r)] = check.holds;
        ordered_json detail;
        detail["holds"] = check.holds;
        detail["exhaustive"] = check.exhaustive;
        if (!check.holds) {
            detail["failed_order"] = std::to_string(check.failed_order);
            detail["witness"] = masks_json(ys, check.witness);
        }
        monotone_detail[std::to_string(r)] = std::move(detail);
    }

    ordered_json predicates;
    predicates["lower_probability"] = lower_check.holds;
    predicates["dominated"] = dominating.has_value();
    predicates["lower_envelope"] = envelope.holds;
    predicates["belief_function"] = is_belief_function(ell);
    predicates["monotone"] = std::move(monotone_flags);
    report["predicates"] = std::move(predicates);

    ordered_json witnesses;
    if (lower_check.witness) {
        witnesses["lower_probability"] = {{"A", subset_name(ys, lower_check.witness->first)},
                                          {"B", subset_name(ys, lower_check.witness->second)},
                                          {"side", lower_check.upper_side ? "upper" : "lower"}};
    } else {
        witnesses["lower_probability"] = nullptr;
    }
    witnesses["dominating_measure"] = dominating ? measure_json(*dominating, options.decimal) : ordered_json(nullptr);
    if (envelope.gap) {
        ordered_json gap;
        gap["set"] = subset_name(ys, envelope.gap->set);
        put(gap, "value", envelope.gap->value, options.decimal);
        put(gap, "envelope", envelope.gap->envelope, options.decimal);
        witnesses["envelope_gap"] = std::move(gap);
    } else {
        witnesses["envelope_gap"] = nullptr;
    }
    witnesses["monotone"] = std::move(monotone_detail);
    report["witnesses"] = std::move(witnesses);
    return CommandResult{kExitOk, std::move(report), {}};
}

CommandResult cmd_lower(const ProblemFile& problem, const CommandOptions& options)
{
    const FamilySpec family = build_family(problem, options.family);
    const FiniteSpace xs = x_space_of(family);

    Report report = header("lower", options);
    report["spaces"] = {{"X", labels_json(xs)}, {"Y", labels_json(y_space_of(family))}};
    ordered_json rows = ordered_json::array();
    for (const auto& a : query_sets(xs, problem, options)) {
        ordered_json row;
        row["set"] = a.name();
        put(row, "lower", lower_value(family, a), options.decimal);
        rows.push_back(std::move(row));
    }
    report["subsets"] = std::move(rows);
    return CommandResult{kExitOk, std::move(report), {}};
}

CommandResult cmd_verify(const ProblemFile& problem, const CommandOptions& options)
{
    const FiniteSpace& xs = problem.require_x();
    const FiniteSpace& ys = problem.require_y();
    const EnvelopeEvidence evidence(problem.require_ell(), problem.require_lambda_y());
    const FamilySpec family = EnvelopeFamily{evidence};

    Report report = header("verify", options);
    report["spaces"] = {{"X", labels_json(xs)}, {"Y", labels_json(ys)}};
    ordered_json rows = ordered_json::array();
    bool all_equal = true;
    std::size_t checked = 0;
    for (Mask m : canonical_masks(xs.size())) {
        const Subset a(xs, m);
        const Rational joint = lower_value(family, a);
        const Rational reduced = reduced_lower_value(evidence, a);
        const bool equal = joint == reduced;
        all_equal = all_equal && equal;
        ++checked;
        ordered_json row;
        row["set"] = a.name();
        put(row, "joint", joint, options.decimal);
        put(row, "reduced", reduced, options.decimal);
        row["equal"] = equal;
        rows.push_back(std::move(row));
    }
    report["subsets"] = std::move(rows);
    report["verdict"] = {{"all_equal", all_equal}, {"subsets_checked", std::to_string(checked)}};
    if (!all_equal) {
        return CommandResult{kExitMismatch, std::move(report), "joint and reduced lower values disagree"};
    }
    return CommandResult{kExitOk, std::move(report), {}};
}

CommandResult run_command(const std::string& command, const CommandOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    CommandResult result;
    try {
        const ProblemFile problem = load_problem(options.input);
        if (command == "dempster") {
            result = cmd_dempster(problem, options);
        } else if (command == "check") {
            result = cmd_check(problem, options);
        } else if (command == "lower") {
            result = cmd_lower(problem, options);
        } else if (command == "verify") {
            result = cmd_verify(problem, options);
        } else {
            throw InvalidInput("unknown command \"" + command + "\"");
        }
    } catch (const EmptyFamily& e) {
        return CommandResult{kExitInfeasible, std::nullopt, e.what()};
    } catch (const Error& e) {
        return CommandResult{kExitInvalidInput, std::nullopt, e.what()};
    }
    if (result.report) {
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
        (*result.report)["timing"] = {{"elapsed_us", std::to_string(elapsed.count())}};
    }
    return result;
}

std::string render(const Report& report)
{
    return report.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Construct and verify lower probabilities with exact rational arithmetic", "lowprob"};
    app.require_subcommand(1);

    CommandOptions options;
    std::string out_path;
    std::uint64_t seed = 0;
    app.add_option("--input", options.input, "Problem file (JSON)")->required();
    app.add_option("--out", out_path, "Write the report here instead of stdout");
    app.add_flag("--decimal", options.decimal, "Append approximate decimal renderings");
    auto* seed_opt = app.add_option("--seed", seed, "Seed for sampling-based monotonicity checks");
    app.add_option("--max-r", options.max_r, "Highest monotonicity order to check")->capture_default_str();

    auto* dempster = app.add_subcommand("dempster", "Belief function induced by p and gamma");
    auto* check = app.add_subcommand("check", "Classify ell: lower probability, dominated, envelope, monotone");
    auto* lower = app.add_subcommand("lower", "Lower values over a family of compatible joint measures");
    auto* verify = app.add_subcommand("verify", "Compare joint and reduced lower values on every subset");
    lower->add_option("--family", options.family, "dempster | envelope | polyhedral")
        ->required()
        ->check(CLI::IsMember({"dempster", "envelope", "polyhedral"}));
    lower->add_option("--set", options.sets, "Query subset, comma-joined labels (repeatable)");
    for (auto* sub : {dempster, check, lower, verify}) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back(); // program name
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "lowprob: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    if (seed_opt->count() > 0) {
        options.seed = seed;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const CommandResult result = run_command(command, options);
    if (!result.diagnostic.empty()) {
        err << "lowprob: " << result.diagnostic << "\n";
    }
    if (result.report) {
        if (out_path.empty()) {
            out << render(*result.report);
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) {
                err << "lowprob: cannot write \"" << out_path << "\"\n";
                return kExitInvalidInput;
            }
            file << render(*result.report);
        }
    }
    return result.exit_code;
}

} // namespace lowprob::cli
