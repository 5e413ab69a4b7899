#pragma once

/// Command-line front end. Subcommands: check, sum, canon, equiv,
/// continuant, matrix, decompose, irreducible, enumerate, verify, cos.
/// Output is JSON (default) or plain text, written to stdout or --out.
/// Exit codes: 0 evaluation done (whatever the mathematical verdict),
/// 2 usage or parse error, 3 resource ceiling hit.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quiddity/enumerate.hpp"

namespace quiddity {

namespace cli_detail {

using Json = nlohmann::ordered_json;

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Emitter {
    std::ostream& out;
    bool json = true;

    void object(const Json& j) { out << j.dump() << '\n'; }

    void line(const std::string& text) { out << text << '\n'; }
};

inline void emit_verify(Emitter& e, const VerdictReport& report) {
    if (e.json) {
        Json j;
        j["verdict"] = report.pass ? "pass" : "fail";
        j["suite"] = report.suite;
        Json counts = Json::object();
        for (const auto& [key, value] : report.counts) counts[key] = value;
        counts["checks"] = static_cast<std::int64_t>(report.checks.size());
        j["counts"] = counts;
        if (!report.pass) {
            Json failures = Json::array();
            for (const auto& check : report.checks)
                if (!check.pass) failures.push_back({{"name", check.name}, {"detail", check.detail}});
            j["failures"] = failures;
        }
        e.object(j);
    } else {
        e.line("verdict: " + std::string(report.pass ? "pass" : "fail"));
        e.line("suite: " + report.suite);
        for (const auto& [key, value] : report.counts)
            e.line(key + ": " + std::to_string(value));
        e.line("checks: " + std::to_string(report.checks.size()));
        for (const auto& check : report.checks)
            if (!check.pass)
                e.line("fail: " + check.name + (check.detail.empty() ? "" : " (" + check.detail + ")"));
    }
}

inline void emit_enumeration(Emitter& e, const EnumerationReport& report) {
    for (const auto& rec : report.quiddities) {
        if (e.json) {
            Json j;
            j["n"] = static_cast<std::int64_t>(rec.tuple.size());
            j["tuple"] = format_tuple(rec.tuple);
            j["sign"] = to_string(rec.sign);
            j["irreducible"] = rec.irreducible;
            j["canonical"] = format_tuple(rec.canonical);
            e.object(j);
        } else {
            e.line("n=" + std::to_string(rec.tuple.size()) + " " + format_tuple(rec.tuple) +
                   " sign=" + to_string(rec.sign) + " irreducible=" + yes_no(rec.irreducible) +
                   " canonical=" + format_tuple(rec.canonical));
        }
    }
    std::size_t total = report.quiddities.size();
    std::size_t irreducible = 0;
    for (const auto& rec : report.quiddities) irreducible += rec.irreducible;
    if (e.json) {
        Json by_size = Json::object(), irr_by_size = Json::object();
        for (const auto& [n, c] : report.count_by_size) by_size[std::to_string(n)] = c;
        for (const auto& [n, c] : report.irreducible_by_size) irr_by_size[std::to_string(n)] = c;
        Json j;
        j["summary"] = Json{{"count", total},
                            {"irreducible", irreducible},
                            {"count_by_size", by_size},
                            {"irreducible_by_size", irr_by_size}};
        e.object(j);
    } else {
        e.line("count: " + std::to_string(total));
        e.line("irreducible: " + std::to_string(irreducible));
        for (const auto& [n, c] : report.count_by_size)
            e.line("size " + std::to_string(n) + ": count=" + std::to_string(c) +
                   " irreducible=" + std::to_string(report.irreducible_by_size.at(n)));
    }
}

}  // namespace cli_detail

/// Runs the command line given in `args` (program name excluded); results
/// go to `out_stream` or the --out file, errors to `err_stream`.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out_stream,
                   std::ostream& err_stream) {
    using cli_detail::Json;

    CLI::App app{"exact calculator for lambda-quiddity sequences"};
    app.name("quiddity");
    app.require_subcommand(1);

    std::string ring_selector;
    std::string format = "json";
    std::string out_path;
    std::string tuple_text, tuple_text2, suite;
    double tol = 1e-9;
    double ceiling = 1e8;
    std::size_t min_size = 2;
    std::size_t max_size = 6;
    std::int64_t coeff = 0;
    std::int64_t degree = 0;
    std::optional<std::int64_t> im_bound;
    std::uint64_t seed = 20260816;
    int cos_n = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", out_path, "write results to this file instead of stdout");
    };
    auto add_ring = [&](CLI::App* sub) {
        sub->add_option("--ring", ring_selector, "ring selector: z, zmod:<n>, zx, z2i, real")
            ->required();
    };

    CLI::App* check = app.add_subcommand("check", "decide whether a tuple is a lambda-quiddity");
    check->add_option("tuple", tuple_text, "tuple, e.g. (1,1,1)")->required();
    add_ring(check);
    check->add_option("--tol", tol, "tolerance for the real ring");
    add_format(check);

    CLI::App* sum_cmd = app.add_subcommand("sum", "sum of two tuples");
    sum_cmd->add_option("left", tuple_text, "left operand")->required();
    sum_cmd->add_option("right", tuple_text2, "right operand")->required();
    add_ring(sum_cmd);
    add_format(sum_cmd);

    CLI::App* canon = app.add_subcommand("canon", "canonical dihedral representative");
    canon->add_option("tuple", tuple_text)->required();
    add_ring(canon);
    add_format(canon);

    CLI::App* equiv = app.add_subcommand("equiv", "decide dihedral equivalence of two tuples");
    equiv->add_option("left", tuple_text)->required();
    equiv->add_option("right", tuple_text2)->required();
    add_ring(equiv);
    add_format(equiv);

    CLI::App* cont = app.add_subcommand("continuant", "continuant K_n of a tuple");
    cont->add_option("tuple", tuple_text)->required();
    add_ring(cont);
    add_format(cont);

    CLI::App* matrix = app.add_subcommand("matrix", "word matrix E(a_n)...E(a_1) of a tuple");
    matrix->add_option("tuple", tuple_text)->required();
    add_ring(matrix);
    add_format(matrix);

    CLI::App* decomp = app.add_subcommand("decompose", "split a quiddity as a sum, with witness");
    decomp->add_option("tuple", tuple_text)->required();
    add_ring(decomp);
    add_format(decomp);

    CLI::App* irred = app.add_subcommand("irreducible", "decide irreducibility of a quiddity");
    irred->add_option("tuple", tuple_text)->required();
    add_ring(irred);
    add_format(irred);

    CLI::App* enumerate = app.add_subcommand("enumerate", "list all quiddities in a finite box");
    add_ring(enumerate);
    enumerate->add_option("--min-size", min_size, "smallest tuple size (default 2)");
    enumerate->add_option("--max-size", max_size, "largest tuple size")->required();
    enumerate->add_option("--coeff", coeff, "coefficient bound B");
    enumerate->add_option("--degree", degree, "degree bound for zx");
    enumerate->add_option("--im-bound", im_bound, "bound on b in a+2bi (default: --coeff)");
    enumerate->add_option("--ceiling", ceiling, "abort when the raw search space exceeds this");
    add_format(enumerate);

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, "small-sizes, poly-irreducibles, z2i, cuntz-holm, cos or properties")
        ->required()
        ->check(CLI::IsMember({"small-sizes", "poly-irreducibles", "z2i", "cuntz-holm", "cos", "properties"}));
    auto* verify_ring = verify->add_option("--ring", ring_selector, "ring for cuntz-holm");
    auto* verify_coeff = verify->add_option("--coeff", coeff, "coefficient bound");
    auto* verify_degree = verify->add_option("--degree", degree, "degree bound for zx");
    auto* verify_min = verify->add_option("--min-size", min_size, "smallest tuple size");
    auto* verify_max = verify->add_option("--max-size", max_size, "largest tuple size");
    verify->add_option("--im-bound", im_bound, "bound on b in a+2bi for z2i");
    verify->add_option("--tol", tol, "tolerance for cos");
    verify->add_option("--ceiling", ceiling, "abort when the raw search space exceeds this");
    verify->add_option("--seed", seed, "seed for properties");
    add_format(verify);

    CLI::App* cos_cmd = app.add_subcommand("cos", "the constant quiddity (2cos(pi/n),...) of size n");
    cos_cmd->add_option("n", cos_n, "tuple size, n >= 2")->required();
    cos_cmd->add_option("--tol", tol, "tolerance for the sign check");
    add_format(cos_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out_stream << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err_stream << e.what() << '\n';
        return 2;
    }

    std::ofstream out_file;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) {
            err_stream << "cannot open output file '" << out_path << "'\n";
            return 2;
        }
    }
    cli_detail::Emitter emit{out_file.is_open() ? out_file : out_stream, format == "json"};

    auto fail = [&](const Json& j, const std::string& text_line, int code) {
        if (format == "json")
            err_stream << j.dump() << '\n';
        else
            err_stream << text_line << '\n';
        return code;
    };

    try {
        if (app.got_subcommand(check)) {
            RingId ring = RingId::from_selector(ring_selector);
            RingTuple t = parse_tuple(ring, tuple_text);
            Json j;
            bool quiddity = false;
            std::string sign_text;
            bool ambiguous = false;
            if (ring.tag() == RingTag::real) {
                auto sign = is_quiddity_approx(t, tol);
                quiddity = sign.has_value();
                if (sign) sign_text = to_string(*sign);
            } else {
                auto verdict = is_quiddity(t);
                quiddity = verdict.has_value();
                if (verdict) {
                    sign_text = to_string(verdict->sign);
                    ambiguous = verdict->ambiguous;
                }
            }
            if (emit.json) {
                j["quiddity"] = quiddity;
                if (quiddity) j["sign"] = sign_text;
                if (ambiguous) j["ambiguous"] = true;
                emit.object(j);
            } else {
                emit.line("quiddity: " + std::string(cli_detail::yes_no(quiddity)));
                if (quiddity) emit.line("sign: " + sign_text);
                if (ambiguous) emit.line("ambiguous: yes");
            }
        } else if (app.got_subcommand(sum_cmd)) {
            RingId ring = RingId::from_selector(ring_selector);
            RingTuple result =
                sum(parse_tuple(ring, tuple_text), parse_tuple(ring, tuple_text2));
            if (emit.json)
                emit.object(Json{{"result", format_tuple(result)}});
            else
                emit.line("result: " + format_tuple(result));
        } else if (app.got_subcommand(canon)) {
            RingId ring = RingId::from_selector(ring_selector);
            RingTuple result = canonical_form(parse_tuple(ring, tuple_text));
            if (emit.json)
                emit.object(Json{{"canonical", format_tuple(result)}});
            else
                emit.line("canonical: " + format_tuple(result));
        } else if (app.got_subcommand(equiv)) {
            RingId ring = RingId::from_selector(ring_selector);
            bool eq = equivalent(parse_tuple(ring, tuple_text), parse_tuple(ring, tuple_text2));
            if (emit.json)
                emit.object(Json{{"equivalent", eq}});
            else
                emit.line("equivalent: " + std::string(cli_detail::yes_no(eq)));
        } else if (app.got_subcommand(cont)) {
            RingId ring = RingId::from_selector(ring_selector);
            RingValue k = continuant(parse_tuple(ring, tuple_text));
            if (emit.json)
                emit.object(Json{{"continuant", format_value(k)}});
            else
                emit.line("continuant: " + format_value(k));
        } else if (app.got_subcommand(matrix)) {
            RingId ring = RingId::from_selector(ring_selector);
            Mat2 m = word_matrix(parse_tuple(ring, tuple_text));
            if (emit.json)
                emit.object(Json{{"m11", format_value(m.m11())},
                                 {"m12", format_value(m.m12())},
                                 {"m21", format_value(m.m21())},
                                 {"m22", format_value(m.m22())}});
            else {
                emit.line("m11: " + format_value(m.m11()));
                emit.line("m12: " + format_value(m.m12()));
                emit.line("m21: " + format_value(m.m21()));
                emit.line("m22: " + format_value(m.m22()));
            }
        } else if (app.got_subcommand(decomp)) {
            RingId ring = RingId::from_selector(ring_selector);
            auto witness = decompose(parse_tuple(ring, tuple_text));
            if (emit.json) {
                Json j;
                j["reducible"] = witness.has_value();
                if (witness) {
                    j["transform"] = Json{{"rotation", witness->transform.rotation},
                                          {"reversed", witness->transform.reversed}};
                    j["left"] = format_tuple(witness->left);
                    j["right"] = format_tuple(witness->right);
                }
                emit.object(j);
            } else {
                emit.line("reducible: " + std::string(cli_detail::yes_no(witness.has_value())));
                if (witness) {
                    emit.line("rotation: " + std::to_string(witness->transform.rotation));
                    emit.line("reversed: " +
                              std::string(cli_detail::yes_no(witness->transform.reversed)));
                    emit.line("left: " + format_tuple(witness->left));
                    emit.line("right: " + format_tuple(witness->right));
                }
            }
        } else if (app.got_subcommand(irred)) {
            RingId ring = RingId::from_selector(ring_selector);
            bool irr = is_irreducible(parse_tuple(ring, tuple_text));
            if (emit.json)
                emit.object(Json{{"irreducible", irr}});
            else
                emit.line("irreducible: " + std::string(cli_detail::yes_no(irr)));
        } else if (app.got_subcommand(enumerate)) {
            SearchBounds bounds;
            bounds.ring = RingId::from_selector(ring_selector);
            bounds.size_min = min_size;
            bounds.size_max = max_size;
            bounds.coeff_bound = coeff;
            bounds.degree_bound = degree;
            bounds.gauss_im_bound = im_bound;
            EnumerationReport report = enumerate_quiddities(bounds, ceiling);
            cli_detail::emit_enumeration(emit, report);
        } else if (app.got_subcommand(verify)) {
            VerdictReport report;
            if (suite == "small-sizes") {
                report = verify_small_sizes(verify_coeff->count() ? coeff : 3, ceiling);
            } else if (suite == "poly-irreducibles") {
                report = verify_poly_irreducibles(verify_degree->count() ? degree : 1,
                                          verify_coeff->count() ? coeff : 1,
                                          verify_max->count() ? max_size : 6, ceiling);
            } else if (suite == "z2i") {
                report = verify_z2i(verify_coeff->count() ? coeff : 2,
                                    verify_max->count() ? max_size : 5, im_bound, ceiling);
            } else if (suite == "cuntz-holm") {
                SearchBounds bounds;
                bounds.ring =
                    verify_ring->count() ? RingId::from_selector(ring_selector) : RingId::integers();
                bounds.size_min = verify_min->count() ? min_size : 2;
                bounds.size_max = verify_max->count() ? max_size : 6;
                bounds.coeff_bound = verify_coeff->count() ? coeff : 3;
                bounds.degree_bound = verify_degree->count() ? degree : 1;
                bounds.gauss_im_bound = im_bound;
                report = verify_cuntz_holm(enumerate_quiddities(bounds, ceiling));
            } else if (suite == "cos") {
                report = verify_cos(verify_min->count() ? static_cast<int>(min_size) : 2,
                                    verify_max->count() ? static_cast<int>(max_size) : 12, tol);
            } else {
                report = verify_properties(seed);
            }
            cli_detail::emit_verify(emit, report);
        } else if (app.got_subcommand(cos_cmd)) {
            RingTuple t = cos_quiddity(cos_n);
            auto sign = is_quiddity_approx(t, tol);
            if (emit.json) {
                Json j;
                j["n"] = cos_n;
                j["u"] = format_double(t[0].as_real());
                j["tuple"] = format_tuple(t);
                j["quiddity"] = sign.has_value();
                if (sign) j["sign"] = to_string(*sign);
                emit.object(j);
            } else {
                emit.line("n: " + std::to_string(cos_n));
                emit.line("u: " + format_double(t[0].as_real()));
                emit.line("tuple: " + format_tuple(t));
                emit.line("quiddity: " + std::string(cli_detail::yes_no(sign.has_value())));
                if (sign) emit.line("sign: " + std::string(to_string(*sign)));
            }
        }
    } catch (const ceiling_error& e) {
        return fail(Json{{"error", e.what()}, {"estimate", e.estimate()}},
                    std::string("error: ") + e.what(), 3);
    } catch (const parse_error& e) {
        return fail(Json{{"error", e.what()}, {"position", e.position()}},
                    std::string("error: ") + e.what() + " at position " +
                        std::to_string(e.position()),
                    2);
    } catch (const std::invalid_argument& e) {
        return fail(Json{{"error", e.what()}}, std::string("error: ") + e.what(), 2);
    } catch (const std::domain_error& e) {
        return fail(Json{{"error", e.what()}}, std::string("error: ") + e.what(), 2);
    } catch (const std::exception& e) {
        return fail(Json{{"error", e.what()}}, std::string("error: ") + e.what(), 1);
    }
    return 0;
}

}  // namespace quiddity
