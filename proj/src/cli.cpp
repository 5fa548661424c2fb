#include "quadnorm/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "quadnorm/verify.hpp"

namespace quadnorm {

namespace {

json read_fixture(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        require(in.good(), Errc::ParseError, "cannot open fixture file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(Errc::ParseError, std::string("malformed JSON input: ") + e.what());
    }
}

void write_document(const json& doc, const std::string& out_path, std::ostream& out) {
    std::string text = doc.dump(2);
    if (out_path.empty()) {
        out << text << "\n";
    } else {
        std::ofstream f(out_path);
        require(f.good(), Errc::ParseError, "cannot open output file: " + out_path);
        f << text << "\n";
    }
}

Extension extension_from_json(const json& j) {
    const json& body = j.contains("extension") ? j.at("extension") : j;
    const json& alg = body.contains("algebra") ? body.at("algebra") : body;
    return Extension(algebra_from_json(alg));
}

json cmd_sn(const json& input) {
    Extension ext = extension_from_json(input);
    RingElement x = element_from_json(ext.ring(), input.at("element"));
    json result = element_to_json(norm_sn(x));
    return json{{"result", std::move(result)}};
}

json cmd_char_poly(const json& input) {
    Extension ext = extension_from_json(input);
    RingElement x = element_from_json(ext.ring(), input.at("element"));
    json coeffs = json::array();
    for (const auto& c : char_poly_coeffs(x)) coeffs.push_back(element_to_json(c));
    return json{{"coeffs", coeffs}};
}

json cmd_star(const json& input) {
    BasedQuadratic p = quad_from_json(input.at("p"));
    BasedQuadratic q = quad_from_json(input.at("q"));
    json result = quad_to_json(star(p, q));
    return json{{"quad", std::move(result)}};
}

json cmd_disc(const json& input) {
    BasedQuadratic q = quad_from_json(input.contains("quad") ? input.at("quad") : input);
    json result = element_to_json(discriminant(q));
    return json{{"result", std::move(result)}};
}

json cmd_norm_quad(const json& input) {
    Extension ext = extension_from_json(input);
    BasedQuadratic q = quad_from_json(ext.ring(), input.at("quad"));
    json result = quad_to_json(ext.norm_quad(q));
    return json{{"quad", std::move(result)}};
}

json cmd_norm_hom(const json& input) {
    Extension ext = extension_from_json(input);
    BasedQuadratic target = quad_from_json(ext.ring(), input.at("target"));
    const json& hj = input.at("hom");
    RingElement u = element_from_json(ext.ring(), hj.at("u"));
    RingElement c = element_from_json(ext.ring(), hj.at("c"));
    // The source is determined by the validity equations.
    RingElement two = ext.ring()->from_int(2);
    RingElement t_src = add(mul(u, target.t), mul(two, c));
    RingElement n_src = add(add(mul(mul(u, u), target.n), mul(mul(u, c), target.t)), mul(c, c));
    QuadHom f = make_hom(make_quad(ext.ring(), t_src, n_src), target, u, c);
    QuadHom nf = ext.norm_hom(f);
    return json{{"source", quad_to_json(nf.source())},
                {"target", quad_to_json(nf.target())},
                {"hom", hom_to_json(nf)}};
}

json cmd_glue_norm(const json& input) {
    QuadDescentDatum d = descent_from_json(input);
    return descent_to_json(glue_norm(d));
}

} // namespace

int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact norms of quadratic algebras over finite free ring extensions"};
    app.require_subcommand(1);

    std::string fixture_path;
    std::string out_path;
    uint64_t seed = 0;
    int cases = 200;
    std::vector<std::string> law_filter;

    struct DataCmd {
        const char* name;
        const char* help;
        json (*fn)(const json&);
    };
    static const DataCmd data_cmds[] = {
        {"sn", "norm s_n of an algebra element", cmd_sn},
        {"char-poly", "characteristic polynomial coefficients", cmd_char_poly},
        {"star", "monoid operation on based quadratic algebras", cmd_star},
        {"disc", "discriminant t^2 - 4n", cmd_disc},
        {"norm-quad", "norm of a based quadratic algebra", cmd_norm_quad},
        {"norm-hom", "norm of a norm-preserving homomorphism", cmd_norm_hom},
        {"glue-norm", "glued norm of a quadratic descent datum", cmd_glue_norm},
    };
    std::map<std::string, json (*)(const json&)> dispatch;
    for (const auto& c : data_cmds) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("--fixture", fixture_path, "input JSON file (default: stdin)");
        sub->add_option("--out", out_path, "output JSON file (default: stdout)");
        dispatch[c.name] = c.fn;
    }

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification harness");
    verify_cmd->add_option("--seed", seed, "PRNG seed (default 0)");
    verify_cmd->add_option("--cases", cases, "cases per law (default 200)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--law", law_filter, "law name, repeatable; 'all' for everything");
    verify_cmd->add_option("--out", out_path, "output JSON file (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        json error{{"error", {{"code", "ParseError"}, {"message", e.what()}}}};
        out << error.dump(2) << "\n";
        return 2;
    }

    try {
        if (verify_cmd->parsed()) {
            VerifyConfig config;
            config.seed = seed;
            config.cases_per_law = cases;
            config.laws = law_filter;
            VerifyReport report = run_verify(config);
            write_document(report_to_json(report, /*include_timings=*/false), out_path, out);
            for (const auto& r : report.laws) {
                err << (r.fails == 0 ? "ok   " : "FAIL ") << r.law << "  " << r.passes << "/"
                    << r.cases << "  " << r.seconds << "s\n";
            }
            return report.ok() ? 0 : 1;
        }
        for (const auto& c : data_cmds) {
            CLI::App* sub = app.get_subcommand(c.name);
            if (sub->parsed()) {
                json input = read_fixture(fixture_path);
                write_document(dispatch[c.name](input), out_path, out);
                return 0;
            }
        }
        json error{{"error", {{"code", "ParseError"}, {"message", "no subcommand given"}}}};
        out << error.dump(2) << "\n";
        return 2;
    } catch (const AlgebraError& e) {
        json error{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
        out << error.dump(2) << "\n";
        return 2;
    } catch (const json::exception& e) {
        json error{{"error", {{"code", "ParseError"}, {"message", e.what()}}}};
        out << error.dump(2) << "\n";
        return 2;
    }
}

} // namespace quadnorm
