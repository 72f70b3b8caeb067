#include "problem_file.hpp"

#include <fstream>
#include <set>

#include "lowprob/error.hpp"

namespace lowprob::cli {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownFields = {"X", "Y", "p", "gamma", "ell", "lambda_y", "constraints", "queries"};

[[noreturn]] void fail(const std::string& field, const std::string& message)
{
    throw InvalidInput("field \"" + field + "\": " + message);
}

Rational parse_value(const json& value, const std::string& field)
{
    if (!value.is_string()) {
        fail(field, "rational values must be strings such as \"1/2\", got " + value.dump());
    }
    try {
        return Rational::parse(value.get<std::string>());
    } catch (const InvalidInput& e) {
        fail(field, e.what());
    }
}

FiniteSpace parse_space(const json& labels, const std::string& field)
{
    if (!labels.is_array()) {
        fail(field, "expected an array of labels");
    }
    std::vector<std::string> out;
    for (const auto& label : labels) {
        if (!label.is_string()) {
            fail(field, "labels must be strings");
        }
        out.push_back(label.get<std::string>());
    }
    try {
        return FiniteSpace(std::move(out));
    } catch (const InvalidInput& e) {
        fail(field, e.what());
    }
}

const json& require_object(const json& value, const std::string& field)
{
    if (!value.is_object()) {
        fail(field, "expected an object");
    }
    return value;
}

const FiniteSpace& need(const std::optional<FiniteSpace>& space, const char* name, const std::string& field)
{
    if (!space) {
        fail(field, std::string("requires the space \"") + name + "\"");
    }
    return *space;
}

/// Checks that an object keyed by element labels names every element once.
void require_all_labels(const FiniteSpace& space, const json& table, const std::string& field)
{
    for (const auto& [key, _] : table.items()) {
        try {
            space.index_of(key);
        } catch (const InvalidInput& e) {
            fail(field, e.what());
        }
    }
    for (const auto& label : space.labels()) {
        if (!table.contains(label)) {
            fail(field, "missing entry for \"" + label + "\"");
        }
    }
}

ProbMeasure parse_measure(const FiniteSpace& space, const json& table, const std::string& field)
{
    require_object(table, field);
    require_all_labels(space, table, field);
    std::vector<Rational> masses;
    for (const auto& label : space.labels()) {
        masses.push_back(parse_value(table.at(label), field + "." + label));
    }
    try {
        return validate_measure(space, std::move(masses));
    } catch (const InvalidInput& e) {
        fail(field, e.what());
    }
}

MultivaluedMap parse_mapping(const FiniteSpace& xs, const FiniteSpace& ys, const json& table, const std::string& field)
{
    require_object(table, field);
    require_all_labels(ys, table, field);
    std::vector<Subset> images;
    for (const auto& label : ys.labels()) {
        const json& image = table.at(label);
        if (!image.is_array()) {
            fail(field + "." + label, "expected an array of X labels");
        }
        std::vector<std::string> members;
        for (const auto& m : image) {
            if (!m.is_string()) {
                fail(field + "." + label, "labels must be strings");
            }
            members.push_back(m.get<std::string>());
        }
        try {
            images.push_back(Subset::of(xs, members));
        } catch (const InvalidInput& e) {
            fail(field + "." + label, e.what());
        }
    }
    try {
        return MultivaluedMap(ys, xs, std::move(images));
    } catch (const InvalidInput& e) {
        fail(field, e.what());
    }
}

std::vector<lp::Constraint> parse_constraints(const FiniteSpace& xs, const FiniteSpace& ys, const json& rows,
                                              const std::string& field)
{
    if (!rows.is_array()) {
        fail(field, "expected an array of rows");
    }
    const std::size_t m = xs.size();
    std::vector<lp::Constraint> out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string where = field + "[" + std::to_string(r) + "]";
        const json& row = require_object(rows[r], where);
        for (const auto& [key, _] : row.items()) {
            if (key != "terms" && key != "relation" && key != "rhs") {
                fail(where, "unknown key \"" + key + "\"");
            }
        }
        if (!row.contains("terms") || !row.contains("relation") || !row.contains("rhs")) {
            fail(where, "rows need \"terms\", \"relation\" and \"rhs\"");
        }
        lp::Constraint c{std::vector<Rational>(m * ys.size()), lp::Relation::Equal, parse_value(row["rhs"], where + ".rhs")};
        const json& relation = row["relation"];
        if (relation == "<=") {
            c.relation = lp::Relation::LessEqual;
        } else if (relation == "=") {
            c.relation = lp::Relation::Equal;
        } else if (relation == ">=") {
            c.relation = lp::Relation::GreaterEqual;
        } else {
            fail(where + ".relation", "expected \"<=\", \"=\" or \">=\", got " + relation.dump());
        }
        for (const auto& [name, coef] : require_object(row["terms"], where + ".terms").items()) {
            const auto bar = name.find('|');
            if (bar == std::string::npos) {
                fail(where + ".terms", "variable \"" + name + "\" is not of the form \"x|y\"");
            }
            try {
                const std::size_t x = xs.index_of(name.substr(0, bar));
                const std::size_t y = ys.index_of(name.substr(bar + 1));
                c.coefficients[y * m + x] = parse_value(coef, where + ".terms." + name);
            } catch (const InvalidInput& e) {
                fail(where + ".terms", e.what());
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace

SetFunction parse_set_function(const FiniteSpace& space, const json& table, const std::string& field)
{
    require_object(table, field);
    std::vector<std::optional<Rational>> values(space.subset_count());
    for (const auto& [name, value] : table.items()) {
        Mask mask = 0;
        try {
            mask = Subset::parse(space, name).mask();
        } catch (const InvalidInput& e) {
            fail(field, "bad subset name \"" + name + "\": " + e.what());
        }
        if (values[mask]) {
            fail(field, "subset \"" + subset_name(space, mask) + "\" listed more than once");
        }
        values[mask] = parse_value(value, field + "[\"" + name + "\"]");
    }
    std::vector<Rational> dense;
    dense.reserve(values.size());
    for (Mask mask : canonical_masks(space.size())) {
        if (!values[mask]) {
            fail(field, "missing value for subset \"" + subset_name(space, mask) + "\"");
        }
    }
    for (auto& v : values) {
        dense.push_back(std::move(*v));
    }
    return SetFunction(space, std::move(dense));
}

ProblemFile parse_problem(const json& doc)
{
    if (!doc.is_object()) {
        throw InvalidInput("problem file must be a JSON object");
    }
    for (const auto& [key, _] : doc.items()) {
        if (!kKnownFields.contains(key)) {
            throw InvalidInput("unknown field \"" + key + "\"");
        }
    }

    ProblemFile out;
    if (doc.contains("X")) {
        out.x = parse_space(doc["X"], "X");
    }
    if (doc.contains("Y")) {
        out.y = parse_space(doc["Y"], "Y");
    }
    if (doc.contains("p")) {
        out.p = parse_measure(need(out.y, "Y", "p"), doc["p"], "p");
    }
    if (doc.contains("gamma")) {
        out.gamma = parse_mapping(need(out.x, "X", "gamma"), need(out.y, "Y", "gamma"), doc["gamma"], "gamma");
    }
    if (doc.contains("ell")) {
        out.ell = parse_set_function(need(out.y, "Y", "ell"), doc["ell"], "ell");
    }
    if (doc.contains("lambda_y")) {
        const FiniteSpace& xs = need(out.x, "X", "lambda_y");
        const FiniteSpace& ys = need(out.y, "Y", "lambda_y");
        const json& table = require_object(doc["lambda_y"], "lambda_y");
        require_all_labels(ys, table, "lambda_y");
        std::vector<SetFunction> conditionals;
        for (const auto& label : ys.labels()) {
            conditionals.push_back(parse_set_function(xs, table.at(label), "lambda_y." + label));
        }
        out.lambda_y = std::move(conditionals);
    }
    if (doc.contains("constraints")) {
        out.constraints =
            parse_constraints(need(out.x, "X", "constraints"), need(out.y, "Y", "constraints"), doc["constraints"],
                              "constraints");
    }
    if (doc.contains("queries")) {
        const json& queries = doc["queries"];
        if (!queries.is_array()) {
            fail("queries", "expected an array of subset names");
        }
        for (const auto& q : queries) {
            if (!q.is_string()) {
                fail("queries", "subset names must be strings");
            }
            out.queries.push_back(q.get<std::string>());
        }
    }
    return out;
}

ProblemFile load_problem(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open input file \"" + path.string() + "\"");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput("input file \"" + path.string() + "\" is not valid JSON: " + e.what());
    }
    return parse_problem(doc);
}

namespace {

[[noreturn]] void missing(const char* field)
{
    throw InvalidInput("missing required field \"" + std::string(field) + "\"");
}

} // namespace

const FiniteSpace& ProblemFile::require_x() const
{
    if (!x) {
        missing("X");
    }
    return *x;
}

const FiniteSpace& ProblemFile::require_y() const
{
    if (!y) {
        missing("Y");
    }
    return *y;
}

const ProbMeasure& ProblemFile::require_p() const
{
    if (!p) {
        missing("p");
    }
    return *p;
}

const MultivaluedMap& ProblemFile::require_gamma() const
{
    if (!gamma) {
        missing("gamma");
    }
    return *gamma;
}

const SetFunction& ProblemFile::require_ell() const
{
    if (!ell) {
        missing("ell");
    }
    return *ell;
}

const std::vector<SetFunction>& ProblemFile::require_lambda_y() const
{
    if (!lambda_y) {
        missing("lambda_y");
    }
    return *lambda_y;
}

const std::vector<lp::Constraint>& ProblemFile::require_constraints() const
{
    if (!constraints) {
        missing("constraints");
    }
    return *constraints;
}

} // namespace lowprob::cli
