#include "a1deg/cli.hpp"

#include "a1deg/bezout.hpp"
#include "a1deg/duplicant.hpp"
#include "a1deg/errors.hpp"
#include "a1deg/local_degree.hpp"
#include "a1deg/parse.hpp"
#include "a1deg/sampling.hpp"
#include "a1deg/sums.hpp"

#include <sstream>

namespace a1deg::cli {

using nlohmann::json;

namespace {

json matrix_json(const Mat& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json entries_json(const std::vector<FieldElement>& es)
{
    json out = json::array();
    for (const FieldElement& e : es)
        out.push_back(e.to_string());
    return out;
}

json class_json(const UnstableClass& c)
{
    json out;
    out["positive_entries"] = entries_json(c.form().positive_entries());
    out["negative_entries"] = entries_json(c.form().negative_entries());
    out["unit"] = c.unit().to_string();
    out["rank"] = c.rank();
    out["discriminant"] = c.form().discriminant().to_string();
    if (c.field().is_rationals())
        out["signature"] = c.form().signature();
    return out;
}

std::string matrix_text(const Mat& m, const std::string& indent)
{
    std::vector<std::size_t> widths(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            widths[j] = std::max(widths[j], m.at(i, j).to_string().size());
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string s = m.at(i, j).to_string();
            os << " " << std::string(widths[j] - s.size(), ' ') << s;
        }
        os << " ]\n";
    }
    return os.str();
}

std::string entries_text(const std::vector<FieldElement>& es)
{
    std::string out = "<";
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (i)
            out += ", ";
        out += es[i].to_string();
    }
    return out + ">";
}

std::string class_text(const UnstableClass& c)
{
    std::string out = entries_text(c.form().positive_entries());
    if (!c.form().negative_entries().empty())
        out += " - " + entries_text(c.form().negative_entries());
    out += "  unit " + c.unit().to_string();
    out += "  (rank " + std::to_string(c.rank());
    out += ", disc " + c.form().discriminant().to_string();
    if (c.field().is_rationals())
        out += ", signature " + std::to_string(c.form().signature());
    return out + ")";
}

std::string field_name(const Field& k)
{
    if (k.is_rationals())
        return "Q";
    return "Fp:" + std::to_string(k.modulus());
}

const std::string& single_input(const Request& req, const char* what)
{
    if (req.inputs.size() != 1)
        throw DomainError(std::string("expected exactly one ") + what);
    return req.inputs.front();
}

RationalFunction parse_map(const std::string& text, const Field& k)
{
    ParsedFunction p = parse_rational_function(text, k);
    return RationalFunction(p.numerator, p.denominator);
}

RunResult cmd_degree(const Request& req)
{
    const std::string& expr = single_input(req, "expression");
    const RationalFunction F = parse_map(expr, req.field);
    const GramMatrix bez = bezoutian_matrix(F);
    const UnstableClass cls = gram_to_class(bez);

    RunResult res;
    res.document["command"] = "degree";
    res.document["field"] = field_name(req.field);
    res.document["input"] = expr;
    res.document["map"] = F.to_string();
    res.document["bezoutian"] = matrix_json(bez.entries());
    res.document["determinant"] = bez.det().to_string();
    res.document["class"] = class_json(cls);

    std::ostringstream os;
    os << "map: " << F.to_string() << "\n"
       << "bezoutian:\n"
       << matrix_text(bez.entries(), "  ") << "determinant: "
       << bez.det().to_string() << "\n"
       << "degree: " << class_text(cls) << "\n";
    res.text = os.str();
    return res;
}

RunResult cmd_local(const Request& req)
{
    const std::string& expr = single_input(req, "expression");
    if (req.at.empty())
        throw DomainError("local requires --at <root>");
    const RationalFunction F = parse_map(expr, req.field);
    const FieldElement r = parse_field_element(req.at, req.field);
    const LocalDegreeReport rep = local_degree(F, r);

    RunResult res;
    res.document["command"] = "local";
    res.document["field"] = field_name(req.field);
    res.document["input"] = expr;
    res.document["map"] = F.to_string();
    res.document["root"] = rep.root.to_string();
    res.document["multiplicity"] = rep.multiplicity;
    res.document["newton_matrix"] = matrix_json(rep.matrix.entries());
    res.document["class"] = class_json(rep.cls);

    std::ostringstream os;
    os << "map: " << F.to_string() << "\n"
       << "root " << rep.root.to_string() << ", multiplicity "
       << rep.multiplicity << "\n"
       << "local matrix:\n"
       << matrix_text(rep.matrix.entries(), "  ") << "local degree: "
       << class_text(rep.cls) << "\n";
    res.text = os.str();
    return res;
}

json roots_json(const std::vector<RootDatum>& roots)
{
    json out = json::array();
    for (const RootDatum& rd : roots)
        out.push_back({{"root", rd.root.to_string()},
                       {"multiplicity", rd.multiplicity}});
    return out;
}

RunResult cmd_duplicant(const Request& req)
{
    if (req.roots.empty())
        throw DomainError("duplicant requires --roots \"r:e,...\"");
    if (!req.inputs.empty())
        throw DomainError("duplicant takes no positional input");
    const std::vector<RootDatum> roots = parse_roots_list(req.roots, req.field);
    const FieldElement c = parse_field_element(req.lc, req.field);
    const SigmaMatrix s = sigma_matrix(req.field, roots);
    const FieldElement det = determinant(s.entries);
    const FieldElement dup = duplicant(roots, c);
    const FieldElement closed = duplicant_closed_form(roots, c);
    const bool match = dup == closed;

    RunResult res;
    res.document["command"] = "duplicant";
    res.document["field"] = field_name(req.field);
    res.document["roots"] = roots_json(roots);
    res.document["leading_coefficient"] = c.to_string();
    res.document["sigma"] = matrix_json(s.entries);
    res.document["det_sigma"] = det.to_string();
    res.document["duplicant"] = dup.to_string();
    res.document["closed_form"] = closed.to_string();
    res.document["match"] = match;
    res.exit_code = match ? 0 : 1;

    std::ostringstream os;
    os << "sigma matrix:\n"
       << matrix_text(s.entries, "  ") << "det sigma: " << det.to_string()
       << "\n"
       << "duplicant: " << dup.to_string() << "\n"
       << "closed form: " << closed.to_string() << "\n"
       << "match: " << (match ? "yes" : "NO") << "\n";
    res.text = os.str();
    return res;
}

RunResult cmd_dsum(const Request& req)
{
    if (req.inputs.empty())
        throw DomainError("dsum requires point=expression entries");
    std::vector<DsumEntry> entries;
    json echo = json::array();
    for (const std::string& item : req.inputs) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected point=expression", 0);
        const FieldElement point =
            parse_field_element(item.substr(0, eq), req.field);
        const RationalFunction F = parse_map(item.substr(eq + 1), req.field);
        UnstableClass cls = unstable_degree(F);
        echo.push_back({{"point", point.to_string()},
                        {"expression", item.substr(eq + 1)},
                        {"class", class_json(cls)}});
        entries.push_back(DsumEntry{std::move(cls), point});
    }
    const UnstableClass total = dsum_algebraic(entries);

    RunResult res;
    res.document["command"] = "dsum";
    res.document["field"] = field_name(req.field);
    res.document["entries"] = std::move(echo);
    res.document["dsum_class"] = class_json(total);

    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i)
        os << "entry at " << entries[i].point.to_string() << ": "
           << class_text(entries[i].cls) << "\n";
    os << "D-sum: " << class_text(total) << "\n";
    res.text = os.str();
    return res;
}

RunResult cmd_nsum(const Request& req)
{
    if (req.inputs.size() < 2)
        throw DomainError("nsum requires at least two expressions");
    RationalFunction acc = parse_map(req.inputs[0], req.field);
    for (std::size_t i = 1; i < req.inputs.size(); ++i)
        acc = naive_sum(acc, parse_map(req.inputs[i], req.field));
    const UnstableClass cls = unstable_degree(acc);

    RunResult res;
    res.document["command"] = "nsum";
    res.document["field"] = field_name(req.field);
    res.document["inputs"] = req.inputs;
    res.document["sum"] = acc.to_string();
    res.document["numerator"] = acc.numerator().to_string();
    res.document["denominator"] = acc.denominator().to_string();
    res.document["class"] = class_json(cls);

    std::ostringstream os;
    os << "naive sum: " << acc.to_string() << "\n"
       << "degree: " << class_text(cls) << "\n";
    res.text = os.str();
    return res;
}

json ltg_json(const LtgReport& rep)
{
    json locals = json::array();
    for (const LocalDegreeReport& l : rep.local_reports)
        locals.push_back({{"root", l.root.to_string()},
                          {"multiplicity", l.multiplicity},
                          {"newton_matrix", matrix_json(l.matrix.entries())},
                          {"class", class_json(l.cls)}});
    return {{"global_class", class_json(rep.global_class)},
            {"locals", std::move(locals)},
            {"dsum_class", class_json(rep.dsum_class)},
            {"classes_equal", rep.classes_equal},
            {"matrix_identity_holds", rep.matrix_identity_holds}};
}

RunResult cmd_verify_ltg(const Request& req)
{
    RunResult res;
    res.document["command"] = "verify-ltg";
    res.document["field"] = field_name(req.field);

    if (req.random_count > 0) {
        if (!req.inputs.empty())
            throw DomainError("--random and an explicit expression are "
                              "mutually exclusive");
        Rng rng(req.seed);
        json instances = json::array();
        long passed = 0;
        std::ostringstream os;
        for (long i = 0; i < req.random_count; ++i) {
            const RationalFunction F =
                random_split_function(rng, req.field, 4, 3, 8);
            const LtgReport rep = verify_local_to_global(F);
            const bool ok = rep.classes_equal && rep.matrix_identity_holds;
            passed += ok ? 1 : 0;
            instances.push_back({{"index", i},
                                 {"map", F.to_string()},
                                 {"classes_equal", rep.classes_equal},
                                 {"matrix_identity_holds",
                                  rep.matrix_identity_holds}});
            if (!ok)
                os << "FAIL " << F.to_string() << "\n";
        }
        res.document["seed"] = req.seed;
        res.document["instances"] = std::move(instances);
        res.document["passed"] = passed;
        res.document["total"] = req.random_count;
        res.exit_code = (passed == req.random_count) ? 0 : 1;
        os << "passed " << passed << "/" << req.random_count << "\n";
        res.text = os.str();
        return res;
    }

    const std::string& expr = single_input(req, "expression");
    const RationalFunction F = parse_map(expr, req.field);
    const LtgReport rep = verify_local_to_global(F);
    res.document["input"] = expr;
    res.document["map"] = F.to_string();
    res.document["report"] = ltg_json(rep);
    res.exit_code = (rep.classes_equal && rep.matrix_identity_holds) ? 0 : 1;

    std::ostringstream os;
    os << "map: " << F.to_string() << "\n"
       << "global: " << class_text(rep.global_class) << "\n";
    for (const LocalDegreeReport& l : rep.local_reports)
        os << "local at " << l.root.to_string() << " (mult "
           << l.multiplicity << "): " << class_text(l.cls) << "\n";
    os << "D-sum:  " << class_text(rep.dsum_class) << "\n"
       << "classes equal: " << (rep.classes_equal ? "yes" : "NO") << "\n"
       << "matrix identity: " << (rep.matrix_identity_holds ? "yes" : "NO")
       << "\n";
    res.text = os.str();
    return res;
}

struct Check {
    std::string name;
    bool pass;
};

RunResult selftest_duplicant(const Field& k)
{
    struct Shape {
        std::string label;
        std::vector<std::pair<long, int>> roots;
    };
    const std::vector<Shape> shapes = {
        {"(x-2)*x^2", {{2, 1}, {0, 2}}},
        {"(x-1)*(x-3)", {{1, 1}, {3, 1}}},
        {"x-5", {{5, 1}}},
    };

    RunResult res;
    res.document["command"] = "selftest";
    res.document["topic"] = "duplicant";
    res.document["field"] = field_name(k);
    json examples = json::array();
    std::ostringstream os;
    bool all = true;
    for (const Shape& sh : shapes) {
        std::vector<RootDatum> roots;
        for (auto [r, e] : sh.roots)
            roots.push_back(RootDatum{FieldElement::from_integer(k, r), e});
        const FieldElement c = FieldElement::from_integer(k, 1);
        const SigmaMatrix s = sigma_matrix(k, roots);
        const FieldElement det = determinant(s.entries);
        const FieldElement dup = duplicant(roots, c);
        const FieldElement closed = duplicant_closed_form(roots, c);
        const bool match = dup == closed;
        all = all && match;
        examples.push_back({{"polynomial", sh.label},
                            {"sigma", matrix_json(s.entries)},
                            {"det_sigma", det.to_string()},
                            {"duplicant", dup.to_string()},
                            {"closed_form", closed.to_string()},
                            {"match", match}});
        os << sh.label << ":\n"
           << matrix_text(s.entries, "  ") << "  det sigma = "
           << det.to_string() << ", duplicant = " << dup.to_string()
           << ", closed form = " << closed.to_string() << "\n";
    }
    res.document["examples"] = std::move(examples);
    res.document["all_passed"] = all;
    res.exit_code = all ? 0 : 1;
    os << (all ? "all shapes match" : "MISMATCH") << "\n";
    res.text = os.str();
    return res;
}

RunResult cmd_selftest(const Request& req)
{
    std::string topic;
    if (!req.inputs.empty()) {
        if (req.inputs.size() > 1)
            throw DomainError("selftest takes at most one topic");
        topic = req.inputs.front();
    }
    if (topic == "duplicant")
        return selftest_duplicant(req.field);
    if (!topic.empty())
        throw DomainError("unknown selftest topic '" + topic + "'");

    const Field q = Field::rationals();
    const Field f5 = Field::prime_field(5);
    std::vector<Check> checks;

    {
        const RationalFunction F = parse_map("(x^2-1)/x", q);
        const UnstableClass got = unstable_degree(F);
        const UnstableClass want =
            gw_add(gw_generator(FieldElement::from_integer(q, 1)),
                   gw_generator(FieldElement::from_integer(q, 1)));
        checks.push_back({"degree (x^2-1)/x = <1> + <1>", gw_equal(got, want)});
    }
    {
        Mat h(q, 2, 2);
        h.at(0, 1) = FieldElement::from_integer(q, 1);
        h.at(1, 0) = FieldElement::from_integer(q, 1);
        const UnstableClass got = gram_to_class(GramMatrix(h));
        const UnstableClass want =
            gw_add(gw_generator(FieldElement::from_integer(q, 1)),
                   gw_generator(FieldElement::from_integer(q, -1)));
        checks.push_back({"hyperbolic gram matrix -> <1> + <-1>, unit -1",
                          gw_equal(got, want) &&
                              got.unit() == FieldElement::from_integer(q, -1)});
    }
    {
        std::vector<RootDatum> roots = {
            RootDatum{FieldElement::from_integer(q, 2), 1},
            RootDatum{FieldElement::from_integer(q, 0), 2}};
        const FieldElement one = FieldElement::from_integer(q, 1);
        checks.push_back(
            {"duplicant (x-2)*x^2 = 16",
             duplicant(roots, one) == FieldElement::from_integer(q, 16) &&
                 duplicant_closed_form(roots, one) ==
                     FieldElement::from_integer(q, 16)});
    }
    {
        const RationalFunction x = parse_map("x", q);
        const RationalFunction s = naive_sum(x, x);
        const RationalFunction expect = parse_map("(x^2-1)/x", q);
        checks.push_back({"x (+) x = (x^2-1)/x",
                          s.numerator() == expect.numerator() &&
                              s.denominator() == expect.denominator()});
    }
    {
        const LtgReport rep = verify_local_to_global(parse_map("x^2", q));
        checks.push_back({"local-to-global for x^2",
                          rep.classes_equal && rep.matrix_identity_holds});
    }
    {
        const FieldElement two = FieldElement::from_integer(q, 2);
        const FieldElement mone = FieldElement::from_integer(q, -1);
        checks.push_back({"hilbert symbols (2,2)_2 = 1, (-1,-1)_inf = -1",
                          hilbert_symbol(two, two, Place::finite(2)) == 1 &&
                              hilbert_symbol(mone, mone, Place::real()) == -1});
    }
    for (const Field& k : {q, f5}) {
        const FieldElement a = FieldElement::from_integer(k, 2);
        const FieldElement b = FieldElement::from_integer(k, 3);
        const UnstableClass lhs = gw_generator(a * b * b);
        const UnstableClass rhs =
            gw_add(gw_add(gw_generator(a), gw_generator(b)),
                   gw_neg(gw_generator(b.inverse())));
        const UnstableClass hyp_l =
            gw_add(gw_generator(a.inverse()), gw_generator(-a));
        const UnstableClass hyp_r =
            gw_add(gw_generator(FieldElement::from_integer(k, 1)),
                   gw_generator(FieldElement::from_integer(k, -1)));
        checks.push_back({"group relations over " + field_name(k),
                          gw_equal(lhs, rhs) && gw_equal(hyp_l, hyp_r)});
    }

    RunResult res;
    res.document["command"] = "selftest";
    res.document["field"] = field_name(req.field);
    json rows = json::array();
    bool all = true;
    std::ostringstream os;
    for (const Check& c : checks) {
        rows.push_back({{"name", c.name}, {"pass", c.pass}});
        all = all && c.pass;
        os << (c.pass ? "ok   " : "FAIL ") << c.name << "\n";
    }
    res.document["checks"] = std::move(rows);
    res.document["all_passed"] = all;
    res.exit_code = all ? 0 : 1;
    os << (all ? "selftest passed" : "selftest FAILED") << "\n";
    res.text = os.str();
    return res;
}

RunResult dispatch(const Request& req)
{
    switch (req.command) {
    case Command::degree: return cmd_degree(req);
    case Command::local: return cmd_local(req);
    case Command::duplicant: return cmd_duplicant(req);
    case Command::dsum: return cmd_dsum(req);
    case Command::nsum: return cmd_nsum(req);
    case Command::verify_ltg: return cmd_verify_ltg(req);
    case Command::selftest: return cmd_selftest(req);
    }
    throw InternalError("unhandled command");
}

const char* error_kind(const Error& e)
{
    if (dynamic_cast<const ParseError*>(&e)) return "parse";
    if (dynamic_cast<const NotPointed*>(&e)) return "not_pointed";
    if (dynamic_cast<const NotReduced*>(&e)) return "not_reduced";
    if (dynamic_cast<const UnsupportedPoint*>(&e)) return "unsupported_point";
    if (dynamic_cast<const UnsupportedVanishingLocus*>(&e))
        return "unsupported_vanishing_locus";
    if (dynamic_cast<const InternalError*>(&e)) return "internal";
    return "domain";
}

} // namespace

RunResult run(const Request& req)
{
    try {
        return dispatch(req);
    } catch (const Error& e) {
        RunResult res;
        res.exit_code = 2;
        res.document["error"] = e.what();
        res.document["error_kind"] = error_kind(e);
        res.text = std::string("error: ") + e.what() + "\n";
        return res;
    }
}

Field parse_field_spec(const std::string& spec)
{
    if (spec == "Q")
        return Field::rationals();
    if (spec.rfind("Fp:", 0) == 0) {
        const std::string num = spec.substr(3);
        try {
            std::size_t used = 0;
            const unsigned long long p = std::stoull(num, &used);
            if (used == num.size())
                return Field::prime_field(p);
        } catch (const std::exception&) {
        }
        throw DomainError("invalid prime in field spec '" + spec + "'");
    }
    throw DomainError("unknown field spec '" + spec + "' (use Q or Fp:<prime>)");
}

} // namespace a1deg::cli
