#include "jointslab/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace jointslab {

using nlohmann::json;

namespace {

json element_array(const std::vector<FieldElement>& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(e.str());
    return out;
}

std::vector<FieldElement> parse_elements(const FieldSpec& field, const json& arr,
                                         const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<FieldElement> out;
    out.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_string())
            throw ParseError(std::string(what) + " entries must be decimal strings");
        out.push_back(field.parse(item.get<std::string>()));
    }
    return out;
}

FieldSpec parse_field(const json& doc) {
    if (!doc.contains("field") || !doc["field"].is_object() ||
        !doc["field"].contains("char"))
        throw ParseError("missing field.char");
    const json& c = doc["field"]["char"];
    if (c.is_number_unsigned() || c.is_number_integer())
        return FieldSpec(BigInt(c.get<long long>()));
    if (c.is_string()) return FieldSpec(BigInt(c.get<std::string>()));
    throw ParseError("field.char must be an integer or decimal string");
}

json field_json(const FieldSpec& field) {
    // Characteristics beyond 64 bits go out as strings.
    const BigInt& c = field.characteristic();
    if (c <= (std::numeric_limits<std::int64_t>::max)())
        return json{{"char", c.convert_to<std::int64_t>()}};
    return json{{"char", c.str()}};
}

json point_array(const Point& x) { return element_array(x.coords()); }

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed JSON");
    return doc;
}

}  // namespace

std::string line_collection_to_json(const LineCollection& c) {
    json lines = json::array();
    for (const Line& l : c.lines())
        lines.push_back(json{{"base", point_array(l.base())}, {"dir", element_array(l.dir())}});
    json doc{{"field", field_json(c.spec())},
             {"n", c.dim()},
             {"lines", std::move(lines)}};
    return doc.dump(2) + "\n";
}

LineCollection line_collection_from_json(const std::string& text) {
    json doc = parse_document(text);
    FieldSpec field = parse_field(doc);
    if (!doc.contains("n") || !doc["n"].is_number_unsigned())
        throw ParseError("missing dimension n");
    std::size_t n = doc["n"].get<std::size_t>();
    if (n < 3) throw ParseError("dimension must be at least 3");
    if (!doc.contains("lines") || !doc["lines"].is_array())
        throw ParseError("missing lines array");
    std::vector<Line> lines;
    for (const json& jl : doc["lines"]) {
        if (!jl.is_object() || !jl.contains("base") || !jl.contains("dir"))
            throw ParseError("each line needs base and dir");
        auto base = parse_elements(field, jl["base"], "base");
        auto dir = parse_elements(field, jl["dir"], "dir");
        if (base.size() != n || dir.size() != n)
            throw ParseError("line coordinates must have length n");
        lines.emplace_back(Point(field, base), dir);
    }
    return LineCollection(field, n, lines);
}

std::string joints_to_json(const LineCollection& c, const std::vector<JointRecord>& records) {
    json out = json::array();
    BigInt max_mult = 0;
    for (const JointRecord& r : records) {
        json lines = json::array();
        for (std::size_t i : r.incident_lines) lines.push_back(i);
        out.push_back(json{{"point", point_array(r.point)},
                           {"lines", std::move(lines)},
                           {"multiplicity", r.multiplicity.convert_to<std::int64_t>()}});
        if (r.multiplicity > max_mult) max_mult = r.multiplicity;
    }
    json doc{{"joints", std::move(out)},
             {"summary",
              {{"line_count", c.size()},
               {"joint_count", records.size()},
               {"max_multiplicity", max_mult.convert_to<std::int64_t>()},
               {"merged_duplicates", c.merged_duplicates()}}}};
    return doc.dump(2) + "\n";
}

std::string point_set_to_json(const FieldSpec& field, std::size_t n,
                              const std::set<Point>& points) {
    json arr = json::array();
    for (const Point& x : points) arr.push_back(point_array(x));
    json doc{{"field", field_json(field)}, {"n", n}, {"points", std::move(arr)}};
    return doc.dump(2) + "\n";
}

std::pair<FieldSpec, std::set<Point>> point_set_from_json(const std::string& text) {
    json doc = parse_document(text);
    FieldSpec field = parse_field(doc);
    if (!doc.contains("n") || !doc["n"].is_number_unsigned())
        throw ParseError("missing dimension n");
    std::size_t n = doc["n"].get<std::size_t>();
    if (!doc.contains("points") || !doc["points"].is_array())
        throw ParseError("missing points array");
    std::set<Point> points;
    for (const json& jp : doc["points"]) {
        auto coords = parse_elements(field, jp, "point");
        if (coords.size() != n) throw ParseError("point coordinates must have length n");
        points.emplace(field, std::move(coords));
    }
    return {field, std::move(points)};
}

std::string polynomial_to_json(const MultivariatePolynomial& f) {
    json terms = json::array();
    for (const auto& [exps, coeff] : f.terms()) {
        json je = json::array();
        for (unsigned e : exps) je.push_back(e);
        terms.push_back(json{{"exps", std::move(je)}, {"coeff", coeff.str()}});
    }
    json doc{{"nvars", f.nvars()}, {"terms", std::move(terms)}};
    return doc.dump(2) + "\n";
}

MultivariatePolynomial polynomial_from_json(const FieldSpec& field, const std::string& text) {
    json doc = parse_document(text);
    if (!doc.contains("nvars") || !doc["nvars"].is_number_unsigned())
        throw ParseError("missing nvars");
    MultivariatePolynomial f(field, doc["nvars"].get<std::size_t>());
    if (!doc.contains("terms") || !doc["terms"].is_array())
        throw ParseError("missing terms array");
    for (const json& jt : doc["terms"]) {
        if (!jt.is_object() || !jt.contains("exps") || !jt.contains("coeff"))
            throw ParseError("each term needs exps and coeff");
        ExponentVector exps;
        for (const json& e : jt["exps"]) {
            if (!e.is_number_unsigned()) throw ParseError("exponents must be nonnegative");
            exps.push_back(e.get<unsigned>());
        }
        if (!jt["coeff"].is_string()) throw ParseError("coefficients must be decimal strings");
        f.add_term(exps, field.parse(jt["coeff"].get<std::string>()));
    }
    return f;
}

std::string peeling_trace_to_json(const PeelingTrace& trace) {
    json steps = json::array();
    for (const PeelingStep& s : trace.steps) {
        json pts = json::array();
        for (const Point& x : s.extracted) pts.push_back(point_array(x));
        steps.push_back(json{{"line", s.line_index}, {"extracted", std::move(pts)}});
    }
    json doc{{"initial_joint_count", trace.initial_joint_count},
             {"part_bound", trace.part_bound},
             {"steps", std::move(steps)}};
    return doc.dump(2) + "\n";
}

std::string choice_assignment_to_json(const ChoiceAssignment& a) {
    json chosen = json::array();
    for (std::size_t i : a.chosen_lines) chosen.push_back(i);
    json choices = json::array();
    for (const auto& [x, lines] : a.choices) {
        json jl = json::array();
        for (std::size_t i : lines) jl.push_back(i);
        choices.push_back(json{{"point", point_array(x)}, {"lines", std::move(jl)}});
    }
    json violations = json::array();
    for (const std::string& v : a.violations) violations.push_back(v);
    json doc{{"lambda", a.lambda.str()},
             {"j_lambda_count", a.j_lambda.size()},
             {"chosen_lines", std::move(chosen)},
             {"choices", std::move(choices)},
             {"violations", std::move(violations)}};
    return doc.dump(2) + "\n";
}

std::string genericity_witness_to_json(const GenericityWitness& w) {
    json lines = json::array();
    for (std::size_t i : w.line_indices) lines.push_back(i);
    json doc{{"point", point_array(w.point)}, {"lines", std::move(lines)}};
    return doc.dump(2) + "\n";
}

std::string sampling_report_to_json(const SamplingReport& r) {
    json tracked = json::array();
    for (std::size_t j = 0; j < r.tracked.size(); ++j)
        tracked.push_back(json{{"point", point_array(r.tracked[j])},
                               {"survival_frequency", r.survival_frequency[j]}});
    double mean_kept = 0.0;
    for (std::size_t kept : r.kept_counts) mean_kept += static_cast<double>(kept);
    if (!r.kept_counts.empty()) mean_kept /= static_cast<double>(r.kept_counts.size());
    json doc{{"lambda", r.lambda.str()},
             {"trials", r.trials},
             {"seed", r.seed},
             {"keep_probability", r.keep_probability},
             {"mean_kept_lines", mean_kept},
             {"tracked", std::move(tracked)}};
    return doc.dump(2) + "\n";
}

std::string sampling_report_to_csv(const SamplingReport& r) {
    std::ostringstream out;
    out << "trial,kept_lines,survivors\n";
    for (std::size_t t = 0; t < r.kept_counts.size(); ++t) {
        std::size_t survivors = 0;
        for (char s : r.survived[t])
            if (s) ++survivors;
        out << t << "," << r.kept_counts[t] << "," << survivors << "\n";
    }
    return out.str();
}

std::string slope_partition_to_json(const SlopePartitionReport& r) {
    json blocks = json::array();
    for (const auto& [lo, hi] : r.blocks)
        blocks.push_back(json{{"from", lo.str()}, {"to", hi.str()}});
    json choices = json::array();
    for (const auto& [x, lines] : r.chosen) {
        json jl = json::array();
        for (const Line& l : lines)
            jl.push_back(json{{"base", point_array(l.base())}, {"dir", element_array(l.dir())}});
        choices.push_back(json{{"point", point_array(x)}, {"lines", std::move(jl)}});
    }
    json counts = json::array();
    for (const auto& [l, count] : r.line_choosers)
        counts.push_back(json{{"base", point_array(l.base())},
                              {"dir", element_array(l.dir())},
                              {"choosers", count}});
    json doc{{"p", r.p.str()},
             {"k", r.k},
             {"blocks", std::move(blocks)},
             {"choices", std::move(choices)},
             {"line_choosers", std::move(counts)}};
    return doc.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ParseError("cannot open " + tmp + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw ParseError("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw ParseError("cannot move " + tmp + " into place");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace jointslab
