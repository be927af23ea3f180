#include "hyparr/io.hpp"

#include <fstream>
#include <sstream>

#include "hyparr/error.hpp"

namespace hyparr::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::ParseError, where + ": " + what);
}

std::string index_path(const std::string& base, std::size_t i) {
    return base + "[" + std::to_string(i) + "]";
}

Rational parse_entry(const Json& v, const std::string& where) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Rational(Integer(std::to_string(v.get<std::uint64_t>())));
        return Rational(Integer(std::to_string(v.get<std::int64_t>())));
    }
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const Error& e) {
            fail(where, e.detail());
        }
    }
    fail(where, "expected an integer or a \"p/q\" string, got " + std::string(v.type_name()) +
                    (v.is_number_float() ? " (write fractions as strings)" : ""));
}

std::size_t parse_count(const Json& v, const std::string& where) {
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
        fail(where, "expected a nonnegative integer");
    }
    return v.get<std::size_t>();
}

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
    return Json(z.get_str());
}

Json optional_json(const std::optional<std::int64_t>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json optional_json(const std::optional<bool>& v) {
    return v ? Json(*v) : Json(nullptr);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(key, "missing field");
    return j.at(key);
}

std::optional<std::int64_t> optional_int(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<std::int64_t>();
}

std::optional<bool> optional_bool(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<bool>();
}

SigmaMethod sigma_method_from(const std::string& s) {
    for (auto m : {SigmaMethod::UpToRank2, SigmaMethod::FreeFactorization, SigmaMethod::LocalToGlobal}) {
        if (to_string(m) == s) return m;
    }
    fail("sigma_methods", "unknown method \"" + s + "\"");
}

TamenessTag tame_from(const Json& j, const char* key) {
    const Json& t = field(j, key);
    TamenessTag tag;
    const auto status = field(t, "status").get<std::string>();
    const auto reason = field(t, "reason").get<std::string>();
    if (status == "Tame") {
        tag.status = TameStatus::Tame;
    } else if (status != "Unknown") {
        fail(std::string(key) + ".status", "unknown value \"" + status + "\"");
    }
    for (auto r : {TameReason::None, TameReason::RankAtMost3, TameReason::VerifiedFree, TameReason::UserAsserted}) {
        if (to_string(r) == reason) {
            tag.reason = r;
            return tag;
        }
    }
    fail(std::string(key) + ".reason", "unknown value \"" + reason + "\"");
}

}  // namespace

Multiarrangement parse_arrangement(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
        fail("line " + std::to_string(line) + ", column " + std::to_string(column), what);
    }
    return arrangement_from_json(doc);
}

Multiarrangement arrangement_from_json(const Json& doc) {
    if (!doc.is_object()) fail("document", "expected a JSON object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "dim" && key != "hyperplanes" && key != "labels" && key != "mult") {
            fail(key, "unknown field");
        }
    }
    const std::size_t dim = parse_count(field(doc, "dim"), "dim");

    const Json& hs = field(doc, "hyperplanes");
    if (!hs.is_array()) fail("hyperplanes", "expected an array of coefficient rows");
    std::vector<RationalVector> raw;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const std::string where = index_path("hyperplanes", i);
        const Json& row = hs[i];
        if (!row.is_array()) fail(where, "expected an array of " + std::to_string(dim) + " coefficients");
        if (row.size() != dim) {
            fail(where, "expected " + std::to_string(dim) + " coefficients, got " + std::to_string(row.size()));
        }
        RationalVector v;
        for (std::size_t k = 0; k < row.size(); ++k) v.push_back(parse_entry(row[k], index_path(where, k)));
        raw.push_back(std::move(v));
    }

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        const Json& ls = doc.at("labels");
        if (!ls.is_array() || ls.size() != raw.size()) {
            fail("labels", "expected an array of " + std::to_string(raw.size()) + " strings");
        }
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (!ls[i].is_string()) fail(index_path("labels", i), "expected a string");
            labels.push_back(ls[i].get<std::string>());
        }
    }

    std::vector<int> mult(raw.size(), 1);
    if (doc.contains("mult")) {
        const Json& ms = doc.at("mult");
        if (!ms.is_array() || ms.size() != raw.size()) {
            fail("mult", "expected an array of " + std::to_string(raw.size()) + " nonnegative integers");
        }
        for (std::size_t i = 0; i < ms.size(); ++i) {
            const std::size_t m = parse_count(ms[i], index_path("mult", i));
            if (m > 1000) fail(index_path("mult", i), "multiplicity above 1000");
            mult[i] = static_cast<int>(m);
        }
    }
    return Multiarrangement(canonicalize(raw, dim, std::move(labels)), std::move(mult));
}

Multiarrangement read_arrangement_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_arrangement(ss.str());
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.detail());
    }
}

Json to_json(const CentralArrangement& a) {
    Json j;
    j["dim"] = a.dim();
    Json rows = Json::array();
    for (const auto& f : a.forms()) {
        Json row = Json::array();
        for (const auto& c : f.coefficients()) row.push_back(integer_json(c));
        rows.push_back(std::move(row));
    }
    j["hyperplanes"] = std::move(rows);
    if (!a.labels().empty()) j["labels"] = a.labels();
    return j;
}

Json to_json(const Multiarrangement& m) {
    Json j = to_json(m.base);
    if (!m.is_simple()) j["mult"] = m.mult;
    return j;
}

Json to_json(const AffineArrangement& a) {
    Json j;
    j["dim"] = a.dim();
    Json rows = Json::array();
    for (const auto& h : a.hyperplanes()) {
        Json row = Json::array();
        for (const auto& c : h.normal) row.push_back(integer_json(c));
        rows.push_back({{"normal", std::move(row)}, {"offset", integer_json(h.offset)}});
    }
    j["hyperplanes"] = std::move(rows);
    j["source"] = a.source;
    return j;
}

Json to_json(const IntPolynomial& p) {
    return p.coefficients();
}

IntPolynomial poly_from_json(const Json& j) {
    return IntPolynomial(j.get<std::vector<std::int64_t>>());
}

Json to_json(const FreenessVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["method"] = v.method;
    j["bound"] = v.bound;
    j["exponents"] = v.exponents;
    if (!v.witness.empty()) j["witness"] = v.witness;
    if (!v.basis.empty()) {
        Json basis = Json::array();
        for (const auto& theta : v.basis) basis.push_back(theta.to_string());
        j["basis"] = std::move(basis);
    }
    return j;
}

Json to_json(const std::vector<SigmaStatus>& sigma) {
    Json j = Json::array();
    for (const auto& s : sigma) j.push_back({{"value", optional_json(s.value)}, {"method", to_string(s.method)}});
    return j;
}

Json to_json(const TamenessTag& t) {
    return {{"status", to_string(t.status)}, {"reason", to_string(t.reason)}};
}

Json to_json(const ComparisonReport& r) {
    Json j;
    j["dim"] = r.dim;
    j["h0"] = r.h0;
    j["hyperplanes"] = r.hyperplanes;
    j["restriction_multiplicities"] = r.restriction_multiplicities;
    j["b"] = r.table.b;
    Json sigma = Json::array();
    Json methods = Json::array();
    for (const auto& s : r.table.sigma) {
        sigma.push_back(optional_json(s.value));
        methods.push_back(to_string(s.method));
    }
    j["sigma"] = std::move(sigma);
    j["sigma_methods"] = std::move(methods);
    Json flats = Json::array();
    for (const auto& f : r.table.per_flat) {
        flats.push_back({{"flat", f.flat},
                         {"codim", f.codim},
                         {"hyperplanes", f.hyperplanes},
                         {"b", f.b},
                         {"sigma", optional_json(f.sigma)}});
    }
    j["per_flat"] = std::move(flats);
    j["tame_arrangement"] = to_json(r.tame_arrangement);
    j["tame_restriction"] = to_json(r.tame_restriction);
    Json holds = Json::array();
    for (const auto& h : r.inequality_holds) holds.push_back(optional_json(h));
    j["inequality_holds"] = std::move(holds);
    j["chambers_decone"] = r.chambers_decone;
    j["chambers_restriction"] = optional_json(r.chambers_restriction);
    j["mca"] = optional_json(r.mca);
    return j;
}

ComparisonReport report_from_json(const Json& j) {
    ComparisonReport r;
    try {
        r.dim = field(j, "dim").get<std::size_t>();
        r.h0 = field(j, "h0").get<std::size_t>();
        r.hyperplanes = field(j, "hyperplanes").get<std::size_t>();
        r.restriction_multiplicities = field(j, "restriction_multiplicities").get<std::vector<int>>();
        r.table.b = field(j, "b").get<std::vector<std::int64_t>>();
        const Json& sigma = field(j, "sigma");
        const Json& methods = field(j, "sigma_methods");
        if (sigma.size() != methods.size()) fail("sigma_methods", "length differs from sigma");
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            r.table.sigma.push_back({optional_int(sigma[i]), sigma_method_from(methods[i].get<std::string>())});
        }
        for (const auto& f : field(j, "per_flat")) {
            r.table.per_flat.push_back({field(f, "flat").get<std::size_t>(), field(f, "codim").get<std::size_t>(),
                                        field(f, "hyperplanes").get<std::vector<std::size_t>>(),
                                        field(f, "b").get<std::int64_t>(), optional_int(field(f, "sigma"))});
        }
        r.tame_arrangement = tame_from(j, "tame_arrangement");
        r.tame_restriction = tame_from(j, "tame_restriction");
        for (const auto& h : field(j, "inequality_holds")) r.inequality_holds.push_back(optional_bool(h));
        r.chambers_decone = field(j, "chambers_decone").get<std::int64_t>();
        r.chambers_restriction = optional_int(field(j, "chambers_restriction"));
        r.mca = optional_bool(field(j, "mca"));
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("report: ") + e.what());
    }
    return r;
}

}  // namespace hyparr::io
