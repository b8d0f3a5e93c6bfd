#pragma once

// Command dispatch shared by the command line and the batch mode. Every
// command takes a flat object of named string arguments and produces a
// Response; the command line only decides how to print it.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwpow/gwpow.hpp"
#include "gwpow/verify/acceptance.hpp"

namespace gwpow::app {

using json = nlohmann::json;

enum class Status { Ok, DomainError, ParseError };

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::Ok:
        return "ok";
    case Status::DomainError:
        return "domain_error";
    case Status::ParseError:
        return "parse_error";
    }
    return "unknown";
}

inline int exit_code(Status s)
{
    switch (s) {
    case Status::Ok:
        return 0;
    case Status::DomainError:
        return 1;
    case Status::ParseError:
        return 2;
    }
    return 1;
}

struct Response {
    Status status = Status::Ok;
    std::string text;
    json result;
    std::vector<std::string> diagnostics;

    [[nodiscard]] json to_json() const
    {
        return json{{"status", app::to_string(status)}, {"result", result}, {"diagnostics", diagnostics}};
    }
};

/// Named arguments of one request; numbers and strings are both accepted.
class Args {
public:
    explicit Args(json object) : object_(std::move(object))
    {
        if (!object_.is_object()) {
            fail(ErrorKind::ParseError, "arguments must be a JSON object");
        }
    }

    [[nodiscard]] bool has(const std::string& key) const { return object_.contains(key); }

    [[nodiscard]] std::string text(const std::string& key) const
    {
        if (!has(key)) {
            fail(ErrorKind::ParseError, "missing argument --" + key);
        }
        const auto& v = object_.at(key);
        if (v.is_string()) {
            return v.get<std::string>();
        }
        if (v.is_number_integer()) {
            return std::to_string(v.get<Int>());
        }
        fail(ErrorKind::ParseError, "argument --" + key + " must be a string or an integer");
    }

    [[nodiscard]] std::string text_or(const std::string& key, const std::string& fallback) const
    {
        return has(key) ? text(key) : fallback;
    }

    [[nodiscard]] Int integer(const std::string& key) const { return parse_integer(text(key)); }

    [[nodiscard]] Int integer_or(const std::string& key, Int fallback) const
    {
        return has(key) ? integer(key) : fallback;
    }

    [[nodiscard]] std::size_t count(const std::string& key) const
    {
        const Int v = integer(key);
        if (v < 0) {
            fail(ErrorKind::OutOfRange, "--" + key + " must be nonnegative");
        }
        return static_cast<std::size_t>(v);
    }

    [[nodiscard]] std::size_t count_or(const std::string& key, std::size_t fallback) const
    {
        return has(key) ? count(key) : fallback;
    }

    [[nodiscard]] BaseField field() const { return BaseField::parse(text_or("field", "Q")); }

    [[nodiscard]] SquareClass square(const std::string& key) const
    {
        return square_class(field(), parse_rational(text(key)));
    }

private:
    json object_;
};

// ---------------------------------------------------------------------------
// Structured renderings

inline json to_json(const GWElement& x)
{
    json terms = json::array();
    for (const auto& [c, m] : x.terms()) {
        terms.push_back(json{{"class", c.rep()}, {"mult", m}});
    }
    return json{{"text", to_string(x)}, {"terms", terms}, {"rank", x.rank()}, {"field", x.field().name()}};
}

inline json to_json(const K0Class& x)
{
    json terms = json::array();
    for (const auto& [m, c] : x.terms()) {
        json gens = json::array();
        for (const auto& g : m.algebra.generators()) {
            gens.push_back(g.rep());
        }
        terms.push_back(json{{"affine", m.affine}, {"algebra", gens}, {"coeff", c}});
    }
    return json{{"text", to_string(x)}, {"terms", terms}, {"field", x.field().name()}};
}

inline json to_json(const GWSeries& f)
{
    json coeffs = json::array();
    for (const auto& c : f.coefficients()) {
        coeffs.push_back(to_json(c));
    }
    return json{{"text", to_string(f)}, {"order", f.order()}, {"coefficients", coeffs}};
}

inline json to_json(const K0Series& f)
{
    json coeffs = json::array();
    std::string text;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        coeffs.push_back(to_json(f[n]));
        text += (n == 0 ? "" : "\n") + ("t^" + std::to_string(n) + ": " + to_string(f[n]));
    }
    return json{{"text", text}, {"order", f.order()}, {"coefficients", coeffs}};
}

inline json to_json(const GWInvariants& inv)
{
    json out{{"rank", inv.rank}, {"disc", inv.disc.rep()}};
    if (inv.signature) {
        out["signature"] = *inv.signature;
    }
    if (inv.hasse) {
        json h = json::object();
        for (const auto& [v, s] : *inv.hasse) {
            h[v.name()] = s;
        }
        out["hasse"] = h;
    }
    return out;
}

inline std::string invariants_text(const GWInvariants& inv)
{
    std::string out = "rank " + std::to_string(inv.rank) + ", disc " + std::to_string(inv.disc.rep());
    if (inv.signature) {
        out += ", signature " + std::to_string(*inv.signature);
    }
    if (inv.hasse) {
        out += ", hasse";
        for (const auto& [v, s] : *inv.hasse) {
            out += " " + v.name() + ":" + std::to_string(s);
        }
    }
    return out;
}

template <class T>
Response value_response(const T& value)
{
    Response r;
    r.result = to_json(value);
    r.text = to_string(value);
    return r;
}

inline Response bool_response(const std::string& key, bool value)
{
    Response r;
    r.result = json{{key, value}};
    r.text = value ? "true" : "false";
    return r;
}

// ---------------------------------------------------------------------------
// Commands

using Handler = std::function<Response(const Args&)>;

struct Command {
    std::string name;                 ///< "group action", e.g. "gw eq"
    std::string help;
    std::vector<std::string> options; ///< names of --options, all taking one value
    Handler run;
};

namespace detail {

inline CubicSurfaceSpec cubic_spec(const Args& a)
{
    return CubicSurfaceSpec(a.square("alpha"), a.square("beta"), a.square("gamma"));
}

inline std::string spec_label(const CubicSurfaceSpec& s)
{
    return "(" + std::to_string(s.alpha().rep()) + ", " + std::to_string(s.beta().rep()) + ", " +
           std::to_string(s.gamma().rep()) + ")";
}

} // namespace detail

inline const std::vector<Command>& commands()
{
    static const std::vector<Command> table = {
        {"gw eq", "Equality in GW(k)", {"x", "y"},
         [](const Args& a) {
             const auto k = a.field();
             return bool_response("equal", eq(parse_gw(k, a.text("x")), parse_gw(k, a.text("y"))));
         }},
        {"gw add", "Sum of two elements", {"x", "y"},
         [](const Args& a) {
             const auto k = a.field();
             return value_response(parse_gw(k, a.text("x")) + parse_gw(k, a.text("y")));
         }},
        {"gw mul", "Product of two elements", {"x", "y"},
         [](const Args& a) {
             const auto k = a.field();
             return value_response(parse_gw(k, a.text("x")) * parse_gw(k, a.text("y")));
         }},
        {"gw invariants", "Rank, discriminant, signature and Hasse invariants", {"x"},
         [](const Args& a) {
             const auto inv = invariants(parse_gw(a.field(), a.text("x")));
             Response r;
             r.result = to_json(inv);
             r.text = invariants_text(inv);
             return r;
         }},
        {"power an", "a_n(q)", {"q", "n", "truncation"},
         [](const Args& a) {
             const auto k = a.field();
             const PowerContext ctx{k, a.count_or("truncation", PowerContext::default_truncation)};
             return value_response(a_n(parse_gw(k, a.text("q")), a.count("n"), ctx));
         }},
        {"power talpha", "t_alpha = <2> + <alpha> - <1> - <2 alpha>", {"alpha"},
         [](const Args& a) {
             auto r = value_response(t_alpha(a.square("alpha")));
             r.result["is_zero"] = eq(t_alpha(a.square("alpha")), GWElement::zero(a.field()));
             return r;
         }},
        {"power closed", "Closed form of a_n(m<1>), a_n(m<-1>) or a_n(mH) against the series value",
         {"kind", "m", "n"},
         [](const Args& a) {
             const auto k = a.field();
             const auto kind = a.text_or("kind", "hyperbolic");
             const Int m = a.integer("m");
             const auto n = a.count("n");
             GWElement closed(k);
             GWElement input(k);
             if (kind == "hyperbolic") {
                 closed = a_hyperbolic(k, m, n);
                 input = GWElement::hyperbolic(k, m);
             } else if (kind == "one" || kind == "minus-one") {
                 const int i = kind == "one" ? 0 : 1;
                 closed = a_basic(k, m, i, n);
                 input = GWElement::form(k, i == 0 ? 1 : -1, m);
             } else {
                 fail(ErrorKind::ParseError, "--kind must be hyperbolic, one or minus-one");
             }
             const auto series = a_n(input, n, PowerContext{k, std::max<std::size_t>(n, 1)});
             const bool same = eq(closed, series);
             Response r;
             r.result = json{{"closed", to_json(closed)}, {"series", to_json(series)}, {"equal", same}};
             r.text = to_string(closed) + (same ? "" : "  (series: " + to_string(series) + ")");
             if (!same) {
                 r.diagnostics.push_back("closed form differs from the series value");
             }
             return r;
         }},
        {"k0 chi", "chi of an etale-linear class", {"x"},
         [](const Args& a) { return value_response(chi(parse_k0(a.field(), a.text("x")))); }},
        {"k0 sym", "n-th symmetric power in K_0", {"x", "n"},
         [](const Args& a) {
             const auto x = parse_k0(a.field(), a.text("x"));
             const auto sym = sym_power(x, static_cast<Int>(a.count("n")));
             auto r = value_response(sym);
             r.result["chi"] = to_json(chi(sym));
             return r;
         }},
        {"k0 mul", "Product in K_0", {"x", "y"},
         [](const Args& a) {
             const auto k = a.field();
             return value_response(parse_k0(k, a.text("x")) * parse_k0(k, a.text("y")));
         }},
        {"zeta geom", "(1-t)^(-q) = sum a_n(q) t^n", {"q", "order"},
         [](const Args& a) {
             return value_response(geom_pow(parse_gw(a.field(), a.text("q")), a.count_or("order", 6)));
         }},
        {"zeta kapranov", "Kapranov zeta function and its image under chi", {"x", "order"},
         [](const Args& a) {
             const auto x = parse_k0(a.field(), a.text("x"));
             const auto order = a.count_or("order", 4);
             const auto zeta = kapranov_zeta(x, order);
             const auto chi_zeta = kapranov_chi_zeta(x, order);
             Response r;
             r.result = json{{"k0", to_json(zeta)}, {"chi", to_json(chi_zeta)}};
             r.text = to_json(zeta)["text"].get<std::string>() + "\nchi: " + to_string(chi_zeta);
             return r;
         }},
        {"grassmann chi", "chi(Gr(d, r))", {"d", "r"},
         [](const Args& a) { return value_response(chi_grassmannian(a.field(), a.integer("d"), a.integer("r"))); }},
        {"grassmann sym", "chi(Gr(d, r)^(n))", {"d", "r", "n"},
         [](const Args& a) {
             return value_response(
                 chi_sym_grassmannian(a.field(), a.integer("d"), a.integer("r"), a.integer("n")));
         }},
        {"grassmann zeta", "(1-t)^(-e(d,r)) (1-<-1>t)^(-o(d,r))", {"d", "r", "order"},
         [](const Args& a) {
             return value_response(grassmann_zeta(a.field(), a.integer("d"), a.integer("r"), a.count_or("order", 6)));
         }},
        {"grassmann losanitsch", "(e(d, r), o(d, r))", {"d", "r"},
         [](const Args& a) {
             const auto [e, o] = losanitsch(a.integer("d"), a.integer("r"));
             Response r;
             r.result = json{{"e", e}, {"o", o}};
             r.text = "(" + std::to_string(e) + ", " + std::to_string(o) + ")";
             return r;
         }},
        {"delpezzo chi", "chi of the cubic surface Bl_Y(P^2)", {"alpha", "beta", "gamma"},
         [](const Args& a) {
             const auto spec = detail::cubic_spec(a);
             auto r = value_response(cubic_chi(spec));
             const bool same = eq(cubic_chi_statement_form(spec), cubic_chi_proof_form(spec));
             r.result["statement_form"] = to_json(cubic_chi_statement_form(spec));
             r.result["statement_form_equal"] = same;
             r.diagnostics.push_back(std::string("2<1> + 4<-1> + <-a> + <-b> + <-c> is ") + (same ? "" : "not ") +
                                     "eq to this value for " + detail::spec_label(spec));
             return r;
         }},
        {"delpezzo sym3", "chi(X^(3)) computed as a_3(chi(X)) and the printed closed form",
         {"alpha", "beta", "gamma"},
         [](const Args& a) {
             const auto spec = detail::cubic_spec(a);
             const auto result = cubic_sym3(spec);
             const auto corrected = cubic_sym3_corrected(spec);
             const bool corrected_equal = eq(result.computed, corrected);
             Response r;
             r.result = json{{"computed", to_json(result.computed)},
                             {"printed", to_json(result.printed)},
                             {"equal", result.equal},
                             {"corrected", to_json(corrected)},
                             {"corrected_equal", corrected_equal}};
             r.text = "computed: " + to_string(result.computed) + "\nprinted:  " + to_string(result.printed) +
                      "\nequal: " + (result.equal ? "true" : "false");
             if (!result.equal) {
                 r.diagnostics.push_back("printed expression is not eq to a_3(chi(X)); the expression with "
                                         "(<-1> + <-2>)(<ab> + <ac> + <bc>) and tail t_abc is " +
                                         std::string(corrected_equal ? "eq" : "not eq"));
             }
             return r;
         }},
    };
    return table;
}

inline const Command* find_command(const std::string& name)
{
    for (const auto& c : commands()) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

/// Runs one request, mapping library errors onto statuses.
inline Response dispatch(const std::string& name, const json& args)
{
    Response r;
    try {
        const auto* cmd = find_command(name);
        if (cmd == nullptr) {
            fail(ErrorKind::ParseError, "unknown command '" + name + "'");
        }
        return cmd->run(Args(args));
    } catch (const Error& e) {
        r.status = e.kind() == ErrorKind::ParseError ? Status::ParseError : Status::DomainError;
        r.text = e.what();
    } catch (const json::exception& e) {
        r.status = Status::ParseError;
        r.text = e.what();
    } catch (const std::logic_error& e) {
        r.status = Status::DomainError;
        r.text = e.what();
    }
    r.result = nullptr;
    r.diagnostics.push_back(r.text);
    return r;
}

/// Newline-delimited {"cmd": "...", "args": {...}} in, {status, result, diagnostics} out.
/// Returns the worst exit code seen.
inline int run_batch(std::istream& in, std::ostream& out)
{
    int worst = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        Response r;
        try {
            const auto request = json::parse(line);
            r = dispatch(request.at("cmd").get<std::string>(), request.value("args", json::object()));
        } catch (const json::exception& e) {
            r.status = Status::ParseError;
            r.result = nullptr;
            r.diagnostics.push_back(std::string("bad request: ") + e.what());
        }
        worst = std::max(worst, exit_code(r.status));
        out << r.to_json().dump() << "\n";
    }
    return worst;
}

inline int run_selftest(bool report, bool as_json, std::ostream& out)
{
    const auto results = verify::run_acceptance();
    bool ok = true;
    json list = json::array();
    for (const auto& r : results) {
        ok = ok && (r.report_only || r.passed());
        if (as_json) {
            list.push_back(json{{"id", r.id},
                                {"title", r.title},
                                {"report_only", r.report_only},
                                {"passed", r.passed()},
                                {"checks", r.checks},
                                {"failures", r.failures},
                                {"notes", report ? json(r.notes) : json::array()}});
            continue;
        }
        out << verify::summary_line(r) << "\n";
        for (const auto& f : r.failures) {
            out << "    " << f << "\n";
        }
        if (report) {
            for (const auto& n : r.notes) {
                out << "    " << n << "\n";
            }
        }
    }
    if (as_json) {
        out << json{{"passed", ok}, {"criteria", list}}.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

/// Entry point; argv[0] is the program name.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App cli{"Grothendieck-Witt arithmetic, power structures and symmetric powers"};
    cli.require_subcommand(1);
    cli.fallthrough();
    std::string field = "Q";
    bool as_json = false;
    cli.add_option("--field", field, "Base field: Q, R, C or Fp:<p>")->capture_default_str();
    cli.add_flag("--json", as_json, "Structured output");

    std::map<std::string, std::string> values;
    std::vector<std::pair<CLI::App*, const Command*>> leaves;
    std::map<std::string, CLI::App*> groups;
    for (const auto& cmd : commands()) {
        const auto space = cmd.name.find(' ');
        const auto group = cmd.name.substr(0, space);
        auto& parent = groups[group];
        if (parent == nullptr) {
            parent = cli.add_subcommand(group, group + " commands");
            parent->require_subcommand(1);
        }
        auto* leaf = parent->add_subcommand(cmd.name.substr(space + 1), cmd.help);
        for (const auto& opt : cmd.options) {
            leaf->add_option("--" + opt, values[cmd.name + "/" + opt], opt);
        }
        leaves.emplace_back(leaf, &cmd);
    }
    bool report = false;
    auto* selftest = cli.add_subcommand("selftest", "Run the acceptance suite");
    selftest->add_flag("--report", report, "Also print the diagnostic report");
    std::string batch_input;
    auto* batch = cli.add_subcommand("batch", "Newline-delimited JSON requests on stdin (or --input)");
    batch->add_option("--input", batch_input, "Read requests from this file");

    // CLI11 wants mutable argv; it never writes through it.
    try {
        cli.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::CallForHelp&) {
        out << cli.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << cli.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (selftest->parsed()) {
        return run_selftest(report, as_json, out);
    }
    if (batch->parsed()) {
        if (batch_input.empty()) {
            return run_batch(std::cin, out);
        }
        std::ifstream file(batch_input);
        if (!file) {
            err << "cannot open " << batch_input << "\n";
            return 2;
        }
        return run_batch(file, out);
    }
    for (const auto& [leaf, cmd] : leaves) {
        if (!leaf->parsed()) {
            continue;
        }
        json args{{"field", field}};
        for (const auto& opt : cmd->options) {
            if (leaf->count("--" + opt) > 0) {
                args[opt] = values[cmd->name + "/" + opt];
            }
        }
        const auto r = dispatch(cmd->name, args);
        if (r.status != Status::Ok) {
            err << "error: " << r.text << "\n";
            return exit_code(r.status);
        }
        if (as_json) {
            auto object = r.result;
            if (!r.diagnostics.empty()) {
                object["diagnostics"] = r.diagnostics;
            }
            out << object.dump() << "\n";
        } else {
            out << r.text << "\n";
            for (const auto& d : r.diagnostics) {
                err << "note: " << d << "\n";
            }
        }
        return 0;
    }
    err << cli.help();
    return 2;
}

} // namespace gwpow::app
