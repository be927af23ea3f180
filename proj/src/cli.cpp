#include "hyparr/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyparr/corpus.hpp"
#include "hyparr/criteria.hpp"
#include "hyparr/error.hpp"
#include "hyparr/io.hpp"
#include "hyparr/lattice.hpp"
#include "hyparr/oracles.hpp"

namespace hyparr::cli {

namespace {

using io::Json;

constexpr const char* bound_env = "HYPARR_DEGREE_BOUND";

template <class T>
std::string tuple(const std::vector<T>& v) {
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
    s << ')';
    return s.str();
}

std::string show(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : "?";
}

Multiarrangement load(const std::string& source) {
    constexpr std::string_view prefix = "corpus:";
    if (source.starts_with(prefix)) return corpus::get(source.substr(prefix.size())).arrangement;
    return io::read_arrangement_file(source);
}

std::optional<int> degree_bound(const CLI::Option* opt, int value) {
    if (opt->count() > 0) return value;
    const char* env = std::getenv(bound_env);
    if (env == nullptr || *env == '\0') return std::nullopt;
    int v = 0;
    const std::string_view s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || v < 0) {
        throw Error(ErrorCode::ParseError, std::string(bound_env) + ": expected a nonnegative integer, got \"" +
                                               std::string(s) + "\"");
    }
    return v;
}

int verdict_exit(FreenessStatus s) {
    return s == FreenessStatus::Unknown ? UnknownVerdict : Ok;
}

void print_verdict(std::ostream& out, const FreenessVerdict& v) {
    out << v.method << ": " << to_string(v.status);
    if (v.is_free()) out << ' ' << tuple(v.exponents);
    if (!v.witness.empty()) out << " [" << v.witness << ']';
    if (v.status == FreenessStatus::Unknown && v.bound > 0) out << " [searched up to degree " << v.bound << ']';
    out << '\n';
    for (std::size_t i = 0; i < v.basis.size(); ++i) out << "  theta" << i + 1 << " = " << v.basis[i].to_string() << '\n';
}

struct Options {
    std::string file;
    bool json = false;
    bool reduced = false;
    bool verify = false;
    bool assert_tame = false;
    std::size_t h0 = 0;
    int bound = 0;
    std::string method = "all";
    std::string corpus_name;
    CLI::Option* bound_opt = nullptr;
};

int cmd_charpoly(const Options& o, std::ostream& out, std::ostream& err) {
    const CentralArrangement a = load(o.file).base;
    const IntPolynomial chi = char_poly(a);
    const IntPolynomial shown = o.reduced ? reduced_char_poly(a) : chi;
    Json j;
    j["reduced"] = o.reduced;
    j["char_poly"] = io::to_json(shown);
    j["text"] = shown.to_string();
    if (!o.json) out << (o.reduced ? "chi_0(A, t) = " : "chi(A, t) = ") << shown.to_string() << '\n';

    int code = Ok;
    if (o.verify) {
        const auto ff = oracles::finite_field_char_poly(a);
        std::vector<std::int64_t> primes;
        for (const auto& w : ff.witnesses) primes.push_back(w.prime);
        const bool ff_ok = ff.poly == chi;
        const std::int64_t regions = oracles::region_count_recursion(a);
        const bool regions_ok = regions == chamber_count(a);
        j["verify"] = {{"finite_field", {{"primes", primes}, {"char_poly", io::to_json(ff.poly)}, {"agrees", ff_ok}}},
                       {"region_recursion", {{"regions", regions}, {"agrees", regions_ok}}}};
        if (!o.json) {
            out << "finite-field oracle over F_q, q in " << tuple(primes) << ": " << ff.poly.to_string()
                << (ff_ok ? " [agrees]" : " [MISMATCH]") << '\n';
            out << "region recursion: " << regions << " regions" << (regions_ok ? " [agrees]" : " [MISMATCH]")
                << '\n';
        }
        if (!ff_ok || !regions_ok) {
            err << "verification mismatch\n";
            code = Mismatch;
        }
    }
    if (o.json) out << j.dump(2) << '\n';
    return code;
}

int cmd_chambers(const Options& o, std::ostream& out, std::ostream& err) {
    const CentralArrangement a = load(o.file).base;
    const std::int64_t n = chamber_count(a);
    Json j{{"chambers", n}};
    if (!o.json) out << "chambers: " << n << '\n';
    int code = Ok;
    if (o.verify) {
        const std::int64_t regions = oracles::region_count_recursion(a);
        j["verify"] = {{"region_recursion", regions}, {"agrees", regions == n}};
        if (!o.json) out << "region recursion: " << regions << (regions == n ? " [agrees]" : " [MISMATCH]") << '\n';
        if (regions != n) {
            err << "verification mismatch\n";
            code = Mismatch;
        }
    }
    if (o.json) out << j.dump(2) << '\n';
    return code;
}

int cmd_ziegler(const Options& o, std::ostream& out, std::ostream&) {
    const CentralArrangement a = load(o.file).base;
    const Multiarrangement z = ziegler_restriction(a, o.h0);
    if (o.json) {
        out << io::to_json(z).dump(2) << '\n';
        return Ok;
    }
    const std::size_t j = [&] {
        const auto& c = a.form(o.h0).coefficients();
        return static_cast<std::size_t>(std::find_if(c.begin(), c.end(), [](const Integer& x) { return x != 0; }) -
                                        c.begin());
    }();
    out << "restriction to H" << o.h0 << " (" << a.label(o.h0) << "); coordinates x_k, k != " << j + 1 << '\n';
    for (std::size_t i = 0; i < z.base.size(); ++i) {
        out << "  " << std::setw(3) << i << "  " << std::setw(24) << std::left << z.base.form(i).to_string()
            << std::right << " m=" << z.mult[i] << "  from " << z.base.label(i) << '\n';
    }
    out << "|m| = " << z.total() << '\n';
    return Ok;
}

int cmd_exponents(const Options& o, std::ostream& out, std::ostream&) {
    const Multiarrangement m = load(o.file).support();
    FreenessVerdict v;
    if (m.dim() == 2 && m.base.rank() == 2) {
        FreeBasis f = rank2_exponents(m);
        v.status = FreenessStatus::Free;
        v.exponents = f.exponents;
        v.basis = std::move(f.basis);
        v.bound = m.total();
        v.method = "rank2";
    } else {
        v = find_free_basis(m, degree_bound(o.bound_opt, o.bound).value_or(m.total()));
    }
    if (o.json) {
        out << io::to_json(v).dump(2) << '\n';
    } else {
        print_verdict(out, v);
    }
    return verdict_exit(v.status);
}

int cmd_freeness(const Options& o, std::ostream& out, std::ostream& err) {
    const Multiarrangement m = load(o.file);
    const std::optional<int> bound = degree_bound(o.bound_opt, o.bound);
    const bool all = o.method == "all";
    std::vector<FreenessVerdict> verdicts;
    std::vector<std::string> skipped;

    auto applicable = [&](const std::string& method) -> bool {
        std::string why;
        if (!m.is_simple()) {
            why = "needs a simple arrangement";
        } else if (method == "yoshinaga" && (m.dim() != 3 || m.base.rank() != 3)) {
            why = "needs an essential arrangement of rank 3";
        } else if (m.dim() < 2) {
            why = "needs dimension >= 2";
        } else if (o.h0 >= m.base.size()) {
            why = "--h0 out of range";
        }
        if (why.empty()) return true;
        if (!all) throw Error(ErrorCode::WrongRank, method + " " + why);
        skipped.push_back(method + ": " + why);
        return false;
    };

    if ((all || o.method == "yoshinaga") && applicable("yoshinaga")) verdicts.push_back(yoshinaga_3d(m.base, o.h0));
    if ((all || o.method == "abe-yoshinaga") && applicable("abe-yoshinaga")) {
        verdicts.push_back(abe_yoshinaga_free_check(m.base, o.h0, bound));
    }
    if (all || o.method == "saito") {
        const Multiarrangement s = m.support();
        verdicts.push_back(find_free_basis(s, bound.value_or(s.total())));
    }

    // Definitive verdicts must agree; the first one decides.
    FreenessVerdict merged;
    merged.method = "merged";
    bool conflict = false;
    for (const auto& v : verdicts) {
        if (v.status == FreenessStatus::Unknown) continue;
        if (merged.status == FreenessStatus::Unknown) {
            merged.status = v.status;
            merged.exponents = v.exponents;
        } else if (merged.status != v.status || (v.is_free() && merged.exponents != v.exponents)) {
            conflict = true;
        }
    }

    if (o.json) {
        Json j;
        Json vs = Json::array();
        for (const auto& v : verdicts) vs.push_back(io::to_json(v));
        j["h0"] = o.h0;
        j["verdicts"] = std::move(vs);
        j["skipped"] = skipped;
        j["status"] = to_string(merged.status);
        j["exponents"] = merged.exponents;
        j["agree"] = !conflict;
        out << j.dump(2) << '\n';
    } else {
        for (const auto& v : verdicts) print_verdict(out, v);
        for (const auto& s : skipped) out << "skipped " << s << '\n';
        out << "verdict: " << to_string(merged.status);
        if (merged.is_free()) out << ' ' << tuple(merged.exponents);
        out << '\n';
    }
    if (conflict) {
        err << "methods disagree\n";
        return Mismatch;
    }
    return verdict_exit(merged.status);
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream&) {
    const CentralArrangement a = load(o.file).base;
    const ComparisonReport r = compare_coefficients(a, o.h0, degree_bound(o.bound_opt, o.bound), o.assert_tame);
    if (o.json) {
        out << io::to_json(r).dump(2) << '\n';
    } else {
        out << "H0 = H" << r.h0 << " (" << a.label(r.h0) << "), restriction multiplicities "
            << tuple(r.restriction_multiplicities) << '\n';
        out << "  i      b_i  sigma_i  method              b_i >= sigma_i >= 0\n";
        for (std::size_t i = 0; i < r.table.b.size(); ++i) {
            const auto& s = r.table.sigma[i];
            const auto& h = r.inequality_holds[i];
            std::string holds = !h ? "?" : (*h ? "yes" : "NO");
            if (h && *h && s.exact() && r.table.b[i] > *s.value) holds += " (strict)";
            out << std::setw(3) << i << std::setw(9) << r.table.b[i] << std::setw(9) << show(s.value) << "  "
                << std::setw(20) << std::left << to_string(s.method) << std::right << holds << '\n';
        }
        out << "tameness: A " << to_string(r.tame_arrangement.status) << " (" << to_string(r.tame_arrangement.reason)
            << "), A'' " << to_string(r.tame_restriction.status) << " (" << to_string(r.tame_restriction.reason)
            << ")\n";
        out << "chambers of dA: " << r.chambers_decone << ", lower bound from A'': " << show(r.chambers_restriction)
            << ", MCA: " << (!r.mca ? "?" : (*r.mca ? "yes" : "no")) << '\n';
    }
    const bool exact = std::all_of(r.table.sigma.begin(), r.table.sigma.end(), [](const auto& s) { return s.exact(); });
    return exact ? Ok : UnknownVerdict;
}

Json expected_json(const corpus::Expected& e) {
    Json j = Json::object();
    auto tag = [](auto value, corpus::Provenance p) { return Json{{"value", value}, {"provenance", to_string(p)}}; };
    if (e.char_poly) j["char_poly"] = tag(e.char_poly->value, e.char_poly->provenance);
    if (e.chambers) j["chambers"] = tag(e.chambers->value, e.chambers->provenance);
    if (e.verdict) j["verdict"] = tag(to_string(e.verdict->value), e.verdict->provenance);
    if (e.exponents) j["exponents"] = tag(e.exponents->value, e.exponents->provenance);
    if (e.b) j["b"] = tag(e.b->value, e.b->provenance);
    if (e.sigma) {
        Json s = Json::array();
        for (const auto& x : e.sigma->value) s.push_back(x ? Json(*x) : Json(nullptr));
        j["sigma"] = tag(s, e.sigma->provenance);
    }
    return j;
}

int cmd_corpus_list(const Options& o, std::ostream& out, std::ostream&) {
    Json j = Json::array();
    for (const auto& e : corpus::entries()) {
        if (o.json) {
            j.push_back({{"name", e.name}, {"description", e.description}});
        } else {
            out << std::setw(16) << std::left << e.name << std::right << e.description << '\n';
        }
    }
    if (o.json) out << j.dump(2) << '\n';
    return Ok;
}

int cmd_corpus_get(const Options& o, std::ostream& out, std::ostream&) {
    const auto& e = corpus::get(o.corpus_name);
    Json j{{"name", e.name},
           {"description", e.description},
           {"h0", e.h0},
           {"arrangement", io::to_json(e.arrangement)},
           {"expected", expected_json(e.expected)}};
    if (o.json) {
        out << j.dump(2) << '\n';
        return Ok;
    }
    out << e.name << ": " << e.description << '\n';
    out << "arrangement: " << j["arrangement"].dump() << '\n';
    out << "h0: " << e.h0 << '\n';
    for (const auto& [key, value] : j["expected"].items()) {
        out << "expected " << key << " = " << value["value"].dump() << " [" << value["provenance"].get<std::string>()
            << "]\n";
    }
    return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants and freeness checks for rational hyperplane arrangements", "hyparr"};
    app.require_subcommand(1);
    Options o;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", o.file, "arrangement JSON file, or corpus:NAME")->required();
        sub->add_flag("--json", o.json, "emit a JSON report");
    };
    auto add_bound = [&](CLI::App* sub) {
        o.bound_opt = sub->add_option("--bound", o.bound, std::string("degree bound (default |m|, or $") + bound_env + ")")
                          ->check(CLI::NonNegativeNumber);
    };

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
    add_file(charpoly);
    charpoly->add_flag("--reduced", o.reduced, "divide by (t - 1)");
    charpoly->add_flag("--verify", o.verify, "recompute with the finite-field and region oracles");

    auto* chambers = app.add_subcommand("chambers", "number of chambers of the real complement");
    add_file(chambers);
    chambers->add_flag("--verify", o.verify, "recompute by deletion-restriction");

    auto* ziegler = app.add_subcommand("ziegler", "Ziegler restriction onto a hyperplane");
    add_file(ziegler);
    ziegler->add_option("--h0", o.h0, "0-based index of the restricting hyperplane")->required();

    auto* exponents = app.add_subcommand("exponents", "exponents of a (multi)arrangement");
    add_file(exponents);
    add_bound(exponents);
    CLI::Option* exponents_bound = o.bound_opt;

    auto* freeness = app.add_subcommand("freeness", "decide freeness");
    add_file(freeness);
    freeness->add_option("--h0", o.h0, "0-based index of H0 (default 0)");
    add_bound(freeness);
    CLI::Option* freeness_bound = o.bound_opt;
    freeness->add_option("--method", o.method, "yoshinaga, abe-yoshinaga, saito or all")
        ->check(CLI::IsMember({"yoshinaga", "abe-yoshinaga", "saito", "all"}));

    auto* compare = app.add_subcommand("compare", "compare b_i with sigma_i of the Ziegler restriction");
    add_file(compare);
    compare->add_option("--h0", o.h0, "0-based index of H0")->required();
    add_bound(compare);
    CLI::Option* compare_bound = o.bound_opt;
    compare->add_flag("--assert-tame", o.assert_tame, "treat both arrangements as tame");

    auto* corpus_cmd = app.add_subcommand("corpus", "built-in example arrangements");
    corpus_cmd->require_subcommand(1);
    auto* list = corpus_cmd->add_subcommand("list", "list entries");
    list->add_flag("--json", o.json, "emit JSON");
    auto* get = corpus_cmd->add_subcommand("get", "show one entry");
    get->add_option("name", o.corpus_name)->required();
    get->add_flag("--json", o.json, "emit JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : InputError;
    }

    try {
        if (charpoly->parsed()) return cmd_charpoly(o, out, err);
        if (chambers->parsed()) return cmd_chambers(o, out, err);
        if (ziegler->parsed()) return cmd_ziegler(o, out, err);
        if (exponents->parsed()) {
            o.bound_opt = exponents_bound;
            return cmd_exponents(o, out, err);
        }
        if (freeness->parsed()) {
            o.bound_opt = freeness_bound;
            return cmd_freeness(o, out, err);
        }
        if (compare->parsed()) {
            o.bound_opt = compare_bound;
            return cmd_compare(o, out, err);
        }
        if (list->parsed()) return cmd_corpus_list(o, out, err);
        if (get->parsed()) return cmd_corpus_get(o, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::TheoremViolation ? Mismatch : InputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return InputError;
    }
    return InputError;
}

}  // namespace hyparr::cli
