#include "greyrank/io.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "greyrank/errors.hpp"
#include "greyrank/fixtures.hpp"

namespace greyrank {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read '" + path + "'");
    return buf.str();
}

/// Fixture ids shadow identically named files.
std::string read_source(const std::string& source, std::string& origin) {
    if (const FixtureInfo* f = find_fixture(source)) {
        origin = "fixture " + std::string(f->id);
        return std::string(fixture_content(f->id));
    }
    origin = source;
    return read_file(source);
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' || c == '[';
    }
    return false;
}

double parse_number(const std::string& field, const std::string& where) {
    const std::string s = trim(field);
    char* end = nullptr;
    errno = 0;
    const double v = s.empty() ? 0.0 : std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
        throw ValidationError(where + ": cannot parse number '" + field + "'");
    return v;
}

double parse_rational(const std::string& field, const std::string& where) {
    const std::string s = trim(field);
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) return parse_number(s, where);
    const double num = parse_number(s.substr(0, slash), where);
    const double den = parse_number(s.substr(slash + 1), where);
    if (std::fabs(den) < 1e-300)
        throw ValidationError(where + ": zero denominator in '" + field + "'");
    return num / den;
}

struct CsvRow {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

/// Line-oriented CSV: double quotes protect commas, doubled quotes escape a
/// quote, blank lines and lines starting with '#' are skipped.
std::vector<CsvRow> parse_csv(const std::string& text, const std::string& origin) {
    std::vector<CsvRow> rows;
    std::size_t lineno = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string probe = trim(line);
        if (probe.empty() || probe[0] == '#') continue;
        CsvRow row;
        row.line = lineno;
        std::string cur;
        bool in_quotes = false;
        for (std::size_t p = 0; p < line.size(); ++p) {
            const char c = line[p];
            if (in_quotes) {
                if (c == '"') {
                    if (p + 1 < line.size() && line[p + 1] == '"') {
                        cur += '"';
                        ++p;
                    } else {
                        in_quotes = false;
                    }
                } else {
                    cur += c;
                }
            } else if (c == '"') {
                in_quotes = true;
            } else if (c == ',') {
                row.fields.push_back(trim(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (in_quotes)
            throw ValidationError(origin + " line " + std::to_string(lineno) +
                                  ": unterminated quote");
        row.fields.push_back(trim(cur));
        rows.push_back(std::move(row));
    }
    return rows;
}

CellValue parse_cell(const std::string& field, const std::string& where) {
    if (trim(field).empty()) throw ValidationError(where + ": empty cell");
    try {
        const std::size_t dots = field.find("..");
        if (dots != std::string::npos) {
            const double lo = parse_number(field.substr(0, dots), where);
            const double hi = parse_number(field.substr(dots + 2), where);
            return Interval(lo, hi);
        }
        if (field.find(',') != std::string::npos) {
            std::vector<double> parts;
            std::size_t start = 0;
            while (true) {
                const std::size_t comma = field.find(',', start);
                parts.push_back(parse_number(
                    field.substr(start, comma == std::string::npos ? comma : comma - start),
                    where));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            if (parts.size() != 4)
                throw ValidationError(where + ": trapezoid needs 4 numbers, got " +
                                      std::to_string(parts.size()));
            return TrapezoidalFuzzy{parts[0], parts[1], parts[2], parts[3]};
        }
        return parse_number(field, where);
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        if (msg.rfind(where, 0) == 0) throw;  // already anchored to this cell
        throw ValidationError(where + ": " + msg);
    }
}

Orientation parse_orientation(const std::string& text, const std::string& where) {
    if (text == "desirable") return Orientation::desirable;
    if (text == "undesirable") return Orientation::undesirable;
    throw ValidationError(where + ": orientation must be 'desirable' or 'undesirable', got '" +
                          text + "'");
}

Dataset parse_dataset_csv(const std::string& text, const std::string& origin) {
    const std::vector<CsvRow> rows = parse_csv(text, origin);
    if (rows.size() < 2)
        throw ValidationError(origin + ": need a header row and at least one alternative");
    const CsvRow& header = rows[0];
    if (header.fields.size() < 2)
        throw ValidationError(origin + ": header needs a label column and at least one attribute");

    Dataset ds;
    ds.provenance = origin;
    for (std::size_t j = 1; j < header.fields.size(); ++j) {
        const std::string& h = header.fields[j];
        const std::string where = origin + " header column '" + h + "'";
        AttributeSpec spec;
        const std::size_t colon = h.rfind(':');
        if (colon == std::string::npos) {
            spec.name = trim(h);
        } else {
            spec.name = trim(h.substr(0, colon));
            spec.orientation = parse_orientation(trim(h.substr(colon + 1)), where);
        }
        if (spec.name.empty()) throw ValidationError(where + ": empty attribute name");
        ds.attributes.push_back(std::move(spec));
    }

    const std::size_t n = ds.attributes.size();
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const CsvRow& row = rows[r];
        const std::string label = row.fields.empty() ? "" : row.fields[0];
        if (row.fields.size() != n + 1)
            throw ValidationError(origin + " line " + std::to_string(row.line) + " (row '" +
                                  label + "'): expected " + std::to_string(n + 1) +
                                  " fields, got " + std::to_string(row.fields.size()));
        ds.alternatives.push_back(label);
        for (std::size_t j = 0; j < n; ++j)
            ds.cells.push_back(parse_cell(
                row.fields[j + 1],
                origin + " cell (" + label + ", " + ds.attributes[j].name + ")"));
    }
    try {
        ds.validate();
    } catch (const ValidationError& e) {
        throw ValidationError(origin + ": " + e.what());
    }
    return ds;
}

json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(origin + ": " + e.what());
    }
}

CellValue cell_from_json(const json& c, const std::string& where) {
    try {
        if (c.is_number()) return c.get<double>();
        if (c.is_object() && c.contains("interval")) {
            const auto v = c.at("interval").get<std::vector<double>>();
            if (v.size() != 2)
                throw ValidationError(where + ": interval needs [lo, hi]");
            return Interval(v[0], v[1]);
        }
        if (c.is_object() && c.contains("trapezoid")) {
            const auto v = c.at("trapezoid").get<std::vector<double>>();
            if (v.size() != 4)
                throw ValidationError(where + ": trapezoid needs [y1, y2, y3, y4]");
            return TrapezoidalFuzzy{v[0], v[1], v[2], v[3]};
        }
        throw ValidationError(where + ": expected a number, {\"interval\": [lo, hi]} or "
                              "{\"trapezoid\": [y1, y2, y3, y4]}");
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        if (msg.rfind(where, 0) == 0) throw;
        throw ValidationError(where + ": " + msg);
    } catch (const json::exception& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

Dataset dataset_from_json(const json& j, const std::string& origin) {
    Dataset ds;
    try {
        if (!j.is_object())
            throw ValidationError(origin + ": dataset must be a JSON object");
        ds.provenance = j.value("provenance", std::string{});
        for (const json& a : j.at("attributes")) {
            AttributeSpec spec;
            spec.name = a.at("name").get<std::string>();
            if (a.contains("orientation"))
                spec.orientation = parse_orientation(
                    a.at("orientation").get<std::string>(),
                    origin + " attribute '" + spec.name + "'");
            ds.attributes.push_back(std::move(spec));
        }
        const std::size_t n = ds.attributes.size();
        for (const json& a : j.at("alternatives")) {
            const std::string name = a.at("name").get<std::string>();
            const json& cells = a.at("cells");
            if (!cells.is_array() || cells.size() != n)
                throw ValidationError(origin + " alternative '" + name + "': expected " +
                                      std::to_string(n) + " cells, got " +
                                      std::to_string(cells.is_array() ? cells.size() : 0));
            ds.alternatives.push_back(name);
            for (std::size_t jx = 0; jx < n; ++jx)
                ds.cells.push_back(cell_from_json(
                    cells[jx],
                    origin + " cell (" + name + ", " + ds.attributes[jx].name + ")"));
        }
    } catch (const json::exception& e) {
        throw ValidationError(origin + ": " + e.what());
    }
    try {
        ds.validate();
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        if (msg.rfind(origin, 0) == 0) throw;
        throw ValidationError(origin + ": " + msg);
    }
    return ds;
}

PairwiseMatrix pairwise_from_json(const json& j, const std::string& origin) {
    try {
        auto labels = j.at("labels").get<std::vector<std::string>>();
        const json& rows = j.at("rows");
        if (!rows.is_array() || rows.size() != labels.size())
            throw ValidationError(origin + ": expected " + std::to_string(labels.size()) +
                                  " rows");
        std::vector<double> entries;
        entries.reserve(labels.size() * labels.size());
        for (std::size_t h = 0; h < rows.size(); ++h) {
            const json& row = rows[h];
            if (!row.is_array() || row.size() != labels.size())
                throw ValidationError(origin + " row '" + labels[h] + "': expected " +
                                      std::to_string(labels.size()) + " entries");
            for (const json& e : row) {
                const std::string where = origin + " row '" + labels[h] + "'";
                if (e.is_number())
                    entries.push_back(e.get<double>());
                else if (e.is_string())
                    entries.push_back(parse_rational(e.get<std::string>(), where));
                else
                    throw ValidationError(where + ": entries must be numbers or fractions");
            }
        }
        return PairwiseMatrix(std::move(labels), std::move(entries));
    } catch (const json::exception& e) {
        throw ValidationError(origin + ": " + e.what());
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        if (msg.rfind(origin, 0) == 0) throw;
        throw ValidationError(origin + ": " + msg);
    }
}

PairwiseMatrix parse_pairwise_csv(const std::string& text, const std::string& origin) {
    const std::vector<CsvRow> rows = parse_csv(text, origin);
    if (rows.size() < 3)
        throw ValidationError(origin + ": need a header row and at least a 2x2 matrix");
    const std::size_t n = rows.size() - 1;
    if (rows[0].fields.size() != n + 1)
        throw ValidationError(origin + ": header has " + std::to_string(rows[0].fields.size()) +
                              " fields, expected " + std::to_string(n + 1) +
                              " for a " + std::to_string(n) + "x" + std::to_string(n) +
                              " matrix");
    std::vector<std::string> labels;
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t r = 1; r <= n; ++r) {
        const CsvRow& row = rows[r];
        const std::string label = row.fields.empty() ? "" : row.fields[0];
        if (row.fields.size() != n + 1)
            throw ValidationError(origin + " line " + std::to_string(row.line) + " (row '" +
                                  label + "'): expected " + std::to_string(n + 1) +
                                  " fields, got " + std::to_string(row.fields.size()));
        labels.push_back(label);
        for (std::size_t j = 0; j < n; ++j)
            entries.push_back(parse_rational(row.fields[j + 1],
                                             origin + " cell (" + label + ", column " +
                                                 std::to_string(j + 1) + ")"));
    }
    try {
        return PairwiseMatrix(std::move(labels), std::move(entries));
    } catch (const ValidationError& e) {
        throw ValidationError(origin + ": " + e.what());
    }
}

bool is_report_json(const json& j) {
    return j.is_object() && j.contains("grades") && j.contains("dataset");
}

// ---- emission ----

std::string fmt4(double v) {
    if (std::fabs(v) < 5e-5) v = 0.0;  // keep "-0.0000" out of reports
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string fmtg(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string fmt_interval4(const Interval& iv) {
    return "[" + fmt4(iv.lo) + ", " + fmt4(iv.hi) + "]";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

/// Column-aligned plain text: first column left, the rest right.
void render_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c >= width.size()) width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::string& cell = row[c];
            if (c == 0) {
                os << cell;
                if (c + 1 < row.size())
                    os << std::string(width[c] - cell.size(), ' ');
            } else {
                os << "  " << std::string(width[c] - cell.size(), ' ') << cell;
            }
        }
        os << '\n';
    }
}

json interval_to_json(const Interval& iv) { return json::array({iv.lo, iv.hi}); }

json cell_to_json(const CellValue& v) {
    if (const double* d = std::get_if<double>(&v)) return json(*d);
    if (const TrapezoidalFuzzy* f = std::get_if<TrapezoidalFuzzy>(&v)) {
        json out;
        out["trapezoid"] = json::array({f->y1, f->y2, f->y3, f->y4});
        return out;
    }
    json out;
    out["interval"] = interval_to_json(std::get<Interval>(v));
    return out;
}

json dataset_to_json(const Dataset& ds) {
    json j;
    if (!ds.provenance.empty()) j["provenance"] = ds.provenance;
    j["attributes"] = json::array();
    for (const AttributeSpec& a : ds.attributes) {
        json attr;
        attr["name"] = a.name;
        attr["orientation"] =
            a.orientation == Orientation::desirable ? "desirable" : "undesirable";
        j["attributes"].push_back(std::move(attr));
    }
    j["alternatives"] = json::array();
    for (std::size_t i = 0; i < ds.alternative_count(); ++i) {
        json alt;
        alt["name"] = ds.alternatives[i];
        alt["cells"] = json::array();
        for (std::size_t jx = 0; jx < ds.attribute_count(); ++jx)
            alt["cells"].push_back(cell_to_json(ds.cell(i, jx)));
        j["alternatives"].push_back(std::move(alt));
    }
    return j;
}

json pairwise_to_json(const PairwiseMatrix& b) {
    json j;
    j["labels"] = b.labels();
    j["rows"] = json::array();
    for (std::size_t h = 0; h < b.size(); ++h) {
        json row = json::array();
        for (std::size_t q = 0; q < b.size(); ++q) row.push_back(b.at(h, q));
        j["rows"].push_back(std::move(row));
    }
    return j;
}

json envelopment_to_json(const EnvelopmentResult& e) {
    json j;
    j["inefficiency"] = e.inefficiency;
    j["intensities"] = e.intensities;
    j["slacks"] = e.slacks;
    return j;
}

json report_to_json(const GradeReport& r, const Dataset& data,
                    const std::optional<PairwiseMatrix>& pairwise) {
    json j;
    j["config"] = {{"alpha", r.alpha},
                   {"rho", r.rho},
                   {"beta", r.beta},
                   {"variant", to_string(r.variant)}};
    j["dataset"] = dataset_to_json(data);
    if (pairwise) j["pairwise"] = pairwise_to_json(*pairwise);
    if (!r.priorities.empty())
        j["priorities"] = {{"weights", r.priorities},
                           {"lambda_max", r.lambda_max},
                           {"consistency_ratio", r.consistency_ratio}};

    json gra;
    gra["attributes"] = r.coefficients.attributes;
    json comp = json::array();
    for (std::size_t i = 0; i < r.comparability.alternative_count(); ++i) {
        json row = json::array();
        for (std::size_t jx = 0; jx < r.comparability.attribute_count(); ++jx)
            row.push_back(interval_to_json(r.comparability.at(i, jx)));
        comp.push_back(std::move(row));
    }
    gra["comparability"] = std::move(comp);
    json ref = json::array();
    for (const Interval& iv : r.reference.ideal) ref.push_back(interval_to_json(iv));
    gra["reference"] = std::move(ref);
    json coef = json::array();
    for (std::size_t i = 0; i < r.coefficients.alternative_count(); ++i) {
        json row = json::array();
        for (std::size_t jx = 0; jx < r.coefficients.attribute_count(); ++jx)
            row.push_back(r.coefficients.at(i, jx));
        coef.push_back(std::move(row));
    }
    gra["coefficients"] = std::move(coef);
    gra["distance_min"] = r.coefficients.distance_min;
    gra["distance_max"] = r.coefficients.distance_max;
    j["gra"] = std::move(gra);

    json grades;
    grades["optimistic_degenerate"] = r.optimistic_degenerate;
    grades["pessimistic_degenerate"] = r.pessimistic_degenerate;
    grades["rows"] = json::array();
    for (const GradeRow& row : r.rows) {
        json g;
        g["alternative"] = row.alternative;
        g["optimistic"] = {{"grade", row.optimistic.grade},
                           {"weights", row.optimistic.weights},
                           {"intercept", row.optimistic.intercept}};
        g["pessimistic"] = {{"grade", row.pessimistic.grade},
                            {"weights", row.pessimistic.weights},
                            {"intercept", row.pessimistic.intercept}};
        g["compromise"] = row.compromise;
        g["rank"] = row.rank;
        if (row.shortfall) g["shortfall"] = envelopment_to_json(*row.shortfall);
        if (row.excess) g["excess"] = envelopment_to_json(*row.excess);
        grades["rows"].push_back(std::move(g));
    }
    j["grades"] = std::move(grades);
    return j;
}

void table_grades(std::ostream& os, const GradeReport& r) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"alternative", "optimistic", "pessimistic", "compromise", "rank"});
    for (const GradeRow& row : r.rows)
        rows.push_back({row.alternative, fmt4(row.optimistic.grade),
                        fmt4(row.pessimistic.grade), fmt4(row.compromise),
                        std::to_string(row.rank)});
    render_table(os, rows);
}

void table_weight_block(std::ostream& os, const GradeReport& r, bool pessimistic) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"alternative"};
    for (const std::string& a : r.coefficients.attributes) head.push_back(a);
    head.push_back("intercept");
    rows.push_back(std::move(head));
    for (const GradeRow& row : r.rows) {
        const MultiplierResult& m = pessimistic ? row.pessimistic : row.optimistic;
        std::vector<std::string> line{row.alternative};
        for (double w : m.weights) line.push_back(fmt4(w));
        line.push_back(fmt4(m.intercept));
        rows.push_back(std::move(line));
    }
    render_table(os, rows);
}

void table_slack_block(std::ostream& os, const GradeReport& r, bool excess) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"alternative", excess ? "excess" : "shortfall"};
    for (const std::string& a : r.coefficients.attributes) head.push_back("s:" + a);
    rows.push_back(std::move(head));
    for (const GradeRow& row : r.rows) {
        const std::optional<EnvelopmentResult>& e = excess ? row.excess : row.shortfall;
        if (!e) continue;
        std::vector<std::string> line{row.alternative, fmt4(e->inefficiency)};
        for (double s : e->slacks) line.push_back(fmt4(s));
        rows.push_back(std::move(line));
    }
    if (rows.size() > 1) render_table(os, rows);
}

std::string format_report_table(const GradeReport& r, bool audit) {
    std::ostringstream os;
    os << "variant " << to_string(r.variant) << " | alpha " << fmt4(r.alpha) << " | rho "
       << fmt4(r.rho) << " | beta " << fmt4(r.beta) << "\n\n";
    table_grades(os, r);
    if (r.optimistic_degenerate)
        os << "\nnote: optimistic grades are all equal; that compromise term is 0\n";
    if (r.pessimistic_degenerate)
        os << "\nnote: pessimistic grades are all equal; that compromise term is 0\n";
    if (!audit) return os.str();

    if (!r.priorities.empty()) {
        os << "\npriorities (lambda_max " << fmt4(r.lambda_max) << ", consistency ratio "
           << fmt4(r.consistency_ratio) << ")\n";
        std::vector<std::vector<std::string>> rows{{"attribute", "weight"}};
        for (std::size_t jx = 0; jx < r.priorities.size(); ++jx)
            rows.push_back({r.coefficients.attributes[jx], fmt4(r.priorities[jx])});
        render_table(os, rows);
    }

    os << "\nreference sequence\n";
    {
        std::vector<std::vector<std::string>> rows{{"attribute", "ideal"}};
        for (std::size_t jx = 0; jx < r.reference.ideal.size(); ++jx)
            rows.push_back({r.coefficients.attributes[jx],
                            fmt_interval4(r.reference.ideal[jx])});
        render_table(os, rows);
    }

    os << "\ncomparability\n";
    {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> head{"alternative"};
        for (const std::string& a : r.coefficients.attributes) head.push_back(a);
        rows.push_back(std::move(head));
        for (std::size_t i = 0; i < r.comparability.alternative_count(); ++i) {
            std::vector<std::string> line{r.comparability.alternatives()[i]};
            for (std::size_t jx = 0; jx < r.comparability.attribute_count(); ++jx)
                line.push_back(fmt_interval4(r.comparability.at(i, jx)));
            rows.push_back(std::move(line));
        }
        render_table(os, rows);
    }

    os << "\n" << format_coefficients(r.coefficients, OutputFormat::table);

    os << "\noptimistic weights\n";
    table_weight_block(os, r, false);
    os << "\npessimistic weights\n";
    table_weight_block(os, r, true);
    if (!r.rows.empty() && r.rows.front().shortfall) {
        os << "\nshortfall against the best frontier\n";
        table_slack_block(os, r, false);
        os << "\nexcess over the worst frontier\n";
        table_slack_block(os, r, true);
    }
    return os.str();
}

std::string format_report_csv(const GradeReport& r, bool audit) {
    std::ostringstream os;
    os << "alternative,optimistic,pessimistic,compromise,rank\n";
    for (const GradeRow& row : r.rows)
        os << csv_field(row.alternative) << ',' << fmt4(row.optimistic.grade) << ','
           << fmt4(row.pessimistic.grade) << ',' << fmt4(row.compromise) << ',' << row.rank
           << '\n';
    if (!audit) return os.str();

    const std::vector<std::string>& attrs = r.coefficients.attributes;
    if (!r.priorities.empty()) {
        os << "\n# priorities (lambda_max " << fmt4(r.lambda_max) << ", consistency ratio "
           << fmt4(r.consistency_ratio) << ")\nattribute,weight\n";
        for (std::size_t jx = 0; jx < r.priorities.size(); ++jx)
            os << csv_field(attrs[jx]) << ',' << fmt4(r.priorities[jx]) << '\n';
    }
    os << "\n# reference sequence\nattribute,lo,hi\n";
    for (std::size_t jx = 0; jx < r.reference.ideal.size(); ++jx)
        os << csv_field(attrs[jx]) << ',' << fmt4(r.reference.ideal[jx].lo) << ','
           << fmt4(r.reference.ideal[jx].hi) << '\n';
    os << "\n# comparability\nalternative";
    for (const std::string& a : attrs) os << ',' << csv_field(a + ":lo") << ',' << csv_field(a + ":hi");
    os << '\n';
    for (std::size_t i = 0; i < r.comparability.alternative_count(); ++i) {
        os << csv_field(r.comparability.alternatives()[i]);
        for (std::size_t jx = 0; jx < r.comparability.attribute_count(); ++jx)
            os << ',' << fmt4(r.comparability.at(i, jx).lo) << ','
               << fmt4(r.comparability.at(i, jx).hi);
        os << '\n';
    }
    os << "\n# coefficients (rho " << fmt4(r.coefficients.rho) << ", distance min "
       << fmt4(r.coefficients.distance_min) << ", distance max "
       << fmt4(r.coefficients.distance_max) << ")\nalternative";
    for (const std::string& a : attrs) os << ',' << csv_field(a);
    os << '\n';
    for (std::size_t i = 0; i < r.coefficients.alternative_count(); ++i) {
        os << csv_field(r.coefficients.alternatives[i]);
        for (std::size_t jx = 0; jx < r.coefficients.attribute_count(); ++jx)
            os << ',' << fmt4(r.coefficients.at(i, jx));
        os << '\n';
    }
    for (int side = 0; side < 2; ++side) {
        os << (side == 0 ? "\n# optimistic weights\nalternative"
                         : "\n# pessimistic weights\nalternative");
        for (const std::string& a : attrs) os << ',' << csv_field(a);
        os << ",intercept\n";
        for (const GradeRow& row : r.rows) {
            const MultiplierResult& m = side == 0 ? row.optimistic : row.pessimistic;
            os << csv_field(row.alternative);
            for (double w : m.weights) os << ',' << fmt4(w);
            os << ',' << fmt4(m.intercept) << '\n';
        }
    }
    if (!r.rows.empty() && r.rows.front().shortfall) {
        for (int side = 0; side < 2; ++side) {
            os << (side == 0 ? "\n# shortfall\nalternative,inefficiency"
                             : "\n# excess\nalternative,inefficiency");
            for (const std::string& a : attrs) os << ',' << csv_field("s:" + a);
            os << '\n';
            for (const GradeRow& row : r.rows) {
                const std::optional<EnvelopmentResult>& e =
                    side == 0 ? row.shortfall : row.excess;
                if (!e) continue;
                os << csv_field(row.alternative) << ',' << fmt4(e->inefficiency);
                for (double s : e->slacks) os << ',' << fmt4(s);
                os << '\n';
            }
        }
    }
    return os.str();
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
    if (name == "table") return OutputFormat::table;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw ValidationError("unknown output format '" + name + "' (use table, csv or json)");
}

Dataset load_dataset(const std::string& source) {
    return load_run_input(source).dataset;
}

RunInput load_run_input(const std::string& source) {
    std::string origin;
    const std::string text = read_source(source, origin);
    RunInput input;
    if (looks_like_json(text)) {
        const json j = parse_json_text(text, origin);
        if (is_report_json(j)) {
            input.dataset = dataset_from_json(j.at("dataset"), origin + " dataset");
            if (j.contains("pairwise"))
                input.pairwise = pairwise_from_json(j.at("pairwise"), origin + " pairwise");
        } else {
            input.dataset = dataset_from_json(j, origin);
        }
    } else {
        input.dataset = parse_dataset_csv(text, origin);
    }
    return input;
}

Dataset parse_dataset(const std::string& text, const std::string& origin) {
    if (looks_like_json(text)) {
        const json j = parse_json_text(text, origin);
        if (is_report_json(j)) return dataset_from_json(j.at("dataset"), origin + " dataset");
        return dataset_from_json(j, origin);
    }
    return parse_dataset_csv(text, origin);
}

PairwiseMatrix load_pairwise(const std::string& source) {
    std::string origin;
    const std::string text = read_source(source, origin);
    return parse_pairwise(text, origin);
}

PairwiseMatrix parse_pairwise(const std::string& text, const std::string& origin) {
    if (looks_like_json(text)) {
        const json j = parse_json_text(text, origin);
        if (is_report_json(j)) {
            if (!j.contains("pairwise"))
                throw ValidationError(origin + ": report carries no pairwise matrix");
            return pairwise_from_json(j.at("pairwise"), origin + " pairwise");
        }
        return pairwise_from_json(j, origin);
    }
    return parse_pairwise_csv(text, origin);
}

LinearProgram load_lp(const std::string& source) {
    std::string origin;
    const std::string text = read_source(source, origin);
    const json j = parse_json_text(text, origin);
    LinearProgram lp;
    try {
        const std::string sense = j.at("sense").get<std::string>();
        if (sense == "maximize")
            lp.sense = Sense::maximize;
        else if (sense == "minimize")
            lp.sense = Sense::minimize;
        else
            throw ValidationError(origin + ": sense must be 'maximize' or 'minimize'");
        lp.objective = j.at("objective").get<std::vector<double>>();
        for (const json& cj : j.at("constraints")) {
            Constraint c;
            c.coefficients = cj.at("coefficients").get<std::vector<double>>();
            const std::string rel = cj.at("relation").get<std::string>();
            if (rel == "<=")
                c.relation = Relation::less_equal;
            else if (rel == "=")
                c.relation = Relation::equal;
            else if (rel == ">=")
                c.relation = Relation::greater_equal;
            else
                throw ValidationError(origin + ": relation must be '<=', '=' or '>='");
            c.rhs = cj.at("rhs").get<double>();
            lp.constraints.push_back(std::move(c));
        }
        if (j.contains("bounds")) {
            for (const json& bj : j.at("bounds")) {
                if (bj.is_number()) {
                    lp.bounds.push_back(VariableBound::at_least(bj.get<double>()));
                } else if (bj.is_object() && bj.value("free", false)) {
                    lp.bounds.push_back(VariableBound::unbounded());
                } else if (bj.is_object() && bj.contains("lower")) {
                    lp.bounds.push_back(
                        VariableBound::at_least(bj.at("lower").get<double>()));
                } else {
                    throw ValidationError(origin +
                                          ": bounds entries are numbers, {\"lower\": x} or "
                                          "{\"free\": true}");
                }
            }
        }
    } catch (const json::exception& e) {
        throw ValidationError(origin + ": " + e.what());
    }
    try {
        lp.validate();
    } catch (const ValidationError& e) {
        throw ValidationError(origin + ": " + e.what());
    }
    return lp;
}

std::string format_report(const GradeReport& report, const Dataset& data,
                          const std::optional<PairwiseMatrix>& pairwise,
                          OutputFormat format, bool audit) {
    switch (format) {
        case OutputFormat::table: return format_report_table(report, audit);
        case OutputFormat::csv: return format_report_csv(report, audit);
        default: return report_to_json(report, data, pairwise).dump(2) + "\n";
    }
}

std::string format_coefficients(const CoefficientMatrix& xi, OutputFormat format) {
    if (format == OutputFormat::json) {
        json j;
        j["alternatives"] = xi.alternatives;
        j["attributes"] = xi.attributes;
        json rows = json::array();
        for (std::size_t i = 0; i < xi.alternative_count(); ++i) {
            json row = json::array();
            for (std::size_t jx = 0; jx < xi.attribute_count(); ++jx)
                row.push_back(xi.at(i, jx));
            rows.push_back(std::move(row));
        }
        j["coefficients"] = std::move(rows);
        j["rho"] = xi.rho;
        j["distance_min"] = xi.distance_min;
        j["distance_max"] = xi.distance_max;
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream os;
        os << "alternative";
        for (const std::string& a : xi.attributes) os << ',' << csv_field(a);
        os << '\n';
        for (std::size_t i = 0; i < xi.alternative_count(); ++i) {
            os << csv_field(xi.alternatives[i]);
            for (std::size_t jx = 0; jx < xi.attribute_count(); ++jx)
                os << ',' << fmt4(xi.at(i, jx));
            os << '\n';
        }
        os << "# rho " << fmt4(xi.rho) << ", distance min " << fmt4(xi.distance_min)
           << ", distance max " << fmt4(xi.distance_max) << '\n';
        return os.str();
    }
    std::ostringstream os;
    os << "coefficients (rho " << fmt4(xi.rho) << ", distance min " << fmt4(xi.distance_min)
       << ", distance max " << fmt4(xi.distance_max) << ")\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"alternative"};
    for (const std::string& a : xi.attributes) head.push_back(a);
    rows.push_back(std::move(head));
    for (std::size_t i = 0; i < xi.alternative_count(); ++i) {
        std::vector<std::string> line{xi.alternatives[i]};
        for (std::size_t jx = 0; jx < xi.attribute_count(); ++jx)
            line.push_back(fmt4(xi.at(i, jx)));
        rows.push_back(std::move(line));
    }
    render_table(os, rows);
    return os.str();
}

std::string format_priorities(const PairwiseMatrix& b, const PriorityVector& pv,
                              OutputFormat format) {
    if (format == OutputFormat::json) {
        json j;
        j["labels"] = b.labels();
        j["weights"] = pv.weights;
        j["lambda_max"] = pv.lambda_max;
        j["consistency_ratio"] = pv.consistency_ratio;
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream os;
        os << "attribute,weight\n";
        for (std::size_t jx = 0; jx < pv.weights.size(); ++jx)
            os << csv_field(b.labels()[jx]) << ',' << fmt4(pv.weights[jx]) << '\n';
        os << "# lambda_max " << fmt4(pv.lambda_max) << ", consistency ratio "
           << fmt4(pv.consistency_ratio) << '\n';
        return os.str();
    }
    std::ostringstream os;
    std::vector<std::vector<std::string>> rows{{"attribute", "weight"}};
    for (std::size_t jx = 0; jx < pv.weights.size(); ++jx)
        rows.push_back({b.labels()[jx], fmt4(pv.weights[jx])});
    render_table(os, rows);
    os << "lambda_max " << fmt4(pv.lambda_max) << "\nconsistency ratio "
       << fmt4(pv.consistency_ratio) << '\n';
    return os.str();
}

std::string format_lp_solution(const LinearProgram& lp, const LpSolution& sol,
                               OutputFormat format) {
    const char* status = sol.status == LpStatus::optimal     ? "optimal"
                         : sol.status == LpStatus::infeasible ? "infeasible"
                                                              : "unbounded";
    if (format == OutputFormat::json) {
        json j;
        j["status"] = status;
        if (sol.status == LpStatus::optimal) {
            j["objective"] = sol.objective;
            j["variables"] = sol.variables;
            j["duals"] = sol.duals;
        }
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream os;
        os << "component,index,value\nstatus,," << status << '\n';
        if (sol.status == LpStatus::optimal) {
            os << "objective,," << fmtg(sol.objective) << '\n';
            for (std::size_t i = 0; i < sol.variables.size(); ++i)
                os << "variable," << i << ',' << fmtg(sol.variables[i]) << '\n';
            for (std::size_t i = 0; i < sol.duals.size(); ++i)
                os << "dual," << i << ',' << fmtg(sol.duals[i]) << '\n';
        }
        return os.str();
    }
    std::ostringstream os;
    os << "status " << status << '\n';
    if (sol.status == LpStatus::optimal) {
        os << "objective " << fmtg(sol.objective) << '\n';
        std::vector<std::vector<std::string>> rows{{"variable", "value"}};
        for (std::size_t i = 0; i < sol.variables.size(); ++i)
            rows.push_back({"x" + std::to_string(i), fmtg(sol.variables[i])});
        render_table(os, rows);
        rows = {{"constraint", "dual"}};
        for (std::size_t i = 0; i < sol.duals.size(); ++i)
            rows.push_back({"c" + std::to_string(i), fmtg(sol.duals[i])});
        render_table(os, rows);
    }
    (void)lp;
    return os.str();
}

}  // namespace greyrank
