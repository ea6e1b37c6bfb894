#include "chilab/cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "chilab/constants.hpp"
#include "chilab/fold.hpp"
#include "chilab/rect.hpp"
#include "chilab/sequences.hpp"
#include "chilab/serialize.hpp"
#include "chilab/svg.hpp"
#include "chilab/verify.hpp"

namespace chilab {

Value parse_value_token(const std::string& token) {
    if (token == "phi") return Value(phi());
    if (token == "1/phi" || token == "inv_phi") return Value(inv_phi());
    if (token == "chi") return Value(chi());
    if (token == "chi_prime") return Value(chi_prime());
    if (token == "sqrt2")
        return Value(TowerElem({}, {Rational(0), Rational(1)}, {Rational(0), Rational(2)}));
    if (const NamedConstant* c = find_constant(token); c && c->exact) return *c->exact;
    if (auto r = Rational::parse(token)) return Value(*r);
    throw std::invalid_argument("unrecognized value token '" + token + "'");
}

namespace {

std::string approx_line(const Value& v, int digits) {
    return pretty_value(v) + " ≈ " + eval_decimal(v, digits).digits;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path == "-") {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

FoldTrace run_fold_kind(const std::string& kind, int n, int depth, int m,
                        const std::string& start) {
    if (kind == "cf") return fold_cf(n, depth).trace;
    if (kind == "harmonic") return fold_harmonic(m, n).trace;
    auto s = Rational::parse(start);
    if (!s) throw std::invalid_argument("bad start '" + start + "'");
    return fold_golden_from(*s, depth).trace;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic laboratory for the chi ratio and its relatives"};
    app.require_subcommand(1);
    int rc = 0;

    // ---- constants ------------------------------------------------------
    auto* cmd_constants = app.add_subcommand("constants", "catalogue of named ratios");
    int const_digits = 10;
    bool const_json = false;
    cmd_constants->add_option("--digits", const_digits, "decimal places")->check(CLI::Range(1, 200));
    cmd_constants->add_flag("--json", const_json, "emit JSON");
    cmd_constants->callback([&] {
        if (const_json) {
            Json arr = Json::array();
            for (const auto& c : named_constants()) arr.push_back(constant_to_json(c, const_digits));
            out << arr.dump(2) << "\n";
            return;
        }
        for (const auto& c : named_constants()) {
            std::string dec = c.approximate ? "~" + c.decimal3
                                            : eval_decimal(*c.exact, const_digits).digits;
            out << c.name << " " << dec << "  " << c.description << "\n";
        }
    });

    // ---- converge --------------------------------------------------------
    auto* cmd_converge = app.add_subcommand("converge", "convergent sequences");
    cmd_converge->require_subcommand(1);

    auto* cv_cf = cmd_converge->add_subcommand("cf", "chain c1 = seed, c_{k+1} = term + 1/c_k");
    std::string cf_term, cf_seed;
    int cf_count = 10, cf_digits = 10;
    bool cf_json = false;
    cv_cf->add_option("--term", cf_term)->required();
    cv_cf->add_option("--seed", cf_seed)->required();
    cv_cf->add_option("--count", cf_count)->check(CLI::Range(1, 500));
    cv_cf->add_option("--digits", cf_digits)->check(CLI::Range(1, 200));
    cv_cf->add_flag("--json", cf_json);
    cv_cf->callback([&] {
        std::vector<Value> cf = cf_convergents(
            {parse_value_token(cf_term), parse_value_token(cf_seed), cf_count});
        if (cf_json) {
            out << cf_to_json(cf, cf_digits).dump(2) << "\n";
            return;
        }
        for (size_t k = 0; k < cf.size(); ++k)
            out << "c" << k + 1 << " = " << approx_line(cf[k], cf_digits) << "\n";
    });

    auto* cv_fib = cmd_converge->add_subcommand("fib", "Fibonacci numbers and ratios");
    int fib_count = 10, fib_digits = 10;
    cv_fib->add_option("--count", fib_count)->check(CLI::Range(1, 500));
    cv_fib->add_option("--digits", fib_digits)->check(CLI::Range(1, 200));
    cv_fib->callback([&] {
        FibonacciRatios fib = fibonacci_ratios(fib_count);
        for (size_t k = 0; k < fib.ratios.size(); ++k)
            out << "F" << k + 2 << "/F" << k + 1 << " = " << fib.ratios[k].to_string() << " ≈ "
                << eval_decimal(Value(fib.ratios[k]), fib_digits).digits << "\n";
    });

    auto* cv_h = cmd_converge->add_subcommand("h-seq", "the H sequence");
    int h_count = 8, h_digits = 3;
    bool h_alt = false, h_json = false;
    cv_h->add_option("--count", h_count)->check(CLI::Range(1, 500));
    cv_h->add_option("--digits", h_digits)->check(CLI::Range(1, 200));
    cv_h->add_flag("--alt-rule", h_alt, "componentwise addition instead");
    cv_h->add_flag("--json", h_json);
    cv_h->callback([&] {
        std::vector<GoldenElem> h = h_alt ? h_sequence_alt_rule(h_count) : h_sequence(h_count);
        if (h_json) {
            out << h_terms_to_json(h, h_digits).dump(2) << "\n";
            return;
        }
        for (size_t k = 0; k < h.size(); ++k)
            out << "H" << k + 1 << " = " << h[k].to_string() << " ≈ "
                << eval_decimal(Value(h[k]), h_digits).digits << "\n";
    });

    auto* cv_hr = cmd_converge->add_subcommand("h-ratios", "consecutive H ratios");
    int hr_count = 10, hr_digits = 10;
    cv_hr->add_option("--count", hr_count)->check(CLI::Range(2, 500));
    cv_hr->add_option("--digits", hr_digits)->check(CLI::Range(1, 200));
    cv_hr->callback([&] {
        std::vector<GoldenElem> r = h_ratio_convergence(hr_count);
        for (size_t k = 0; k < r.size(); ++k)
            out << "H" << k + 2 << "/H" << k + 1 << " = " << approx_line(Value(r[k]), hr_digits)
                << "\n";
    });

    auto* cv_rad = cmd_converge->add_subcommand("radical", "nested radical sqrt(1 + c*x)");
    std::string rad_coeff = "1", rad_start = "1";
    int rad_count = 10, rad_digits = 10;
    bool rad_json = false;
    cv_rad->add_option("--coeff", rad_coeff);
    cv_rad->add_option("--start", rad_start);
    cv_rad->add_option("--count", rad_count)->check(CLI::Range(1, 500));
    cv_rad->add_option("--digits", rad_digits)->check(CLI::Range(1, 200));
    cv_rad->add_flag("--json", rad_json);
    cv_rad->callback([&] {
        auto start = Rational::parse(rad_start);
        if (!start) throw std::invalid_argument("bad start '" + rad_start + "'");
        std::vector<RadicalStep> steps =
            nested_radical({parse_value_token(rad_coeff), *start, rad_count}, rad_digits);
        if (rad_json) {
            out << radical_to_json(steps).dump(2) << "\n";
            return;
        }
        for (size_t k = 0; k < steps.size(); ++k)
            out << "x" << k + 1 << " ≈ " << steps[k].approx.digits << "\n";
    });

    // ---- extend ----------------------------------------------------------
    auto* cmd_extend = app.add_subcommand("extend", "ratio extension x - 1/x = rho or 1/rho");
    std::string ext_rho;
    std::string ext_branch = "below";
    int ext_digits = 10, ext_chain = -1;
    bool ext_json = false;
    cmd_extend->add_option("--rho", ext_rho, "ratio to extend (>= 1)");
    cmd_extend->add_option("--branch", ext_branch)->check(CLI::IsMember({"below", "above"}));
    cmd_extend->add_option("--digits", ext_digits)->check(CLI::Range(1, 200));
    cmd_extend->add_option("--sequence,--chain", ext_chain, "emit the chain x_0..x_N instead")
        ->check(CLI::Range(0, 200));
    cmd_extend->add_flag("--json", ext_json);
    cmd_extend->callback([&] {
        if (ext_chain >= 0) {
            std::vector<ExtendStep> chain = extend_sequence(ext_chain, ext_digits);
            if (ext_json) {
                out << extend_chain_to_json(chain).dump(2) << "\n";
                return;
            }
            for (size_t k = 0; k < chain.size(); ++k) {
                out << "x" << k << " ≈ " << chain[k].approx.digits;
                if (chain[k].exact) out << "  (= " << pretty_value(*chain[k].exact) << ")";
                out << "\n";
            }
            return;
        }
        if (ext_rho.empty())
            throw CLI::RequiredError("--rho (or --sequence)");
        ExtendBranch branch =
            ext_branch == "below" ? ExtendBranch::below_phi : ExtendBranch::above_phi;
        ExtendResult r = extend_ratio(parse_value_token(ext_rho), branch, ext_digits);
        if (r.exact) out << approx_line(*r.exact, ext_digits) << "\n";
        else out << "≈ " << r.approx.digits << "\n";
    });

    // ---- subdivide -------------------------------------------------------
    auto* cmd_subdivide = app.add_subcommand("subdivide", "diagonal-perpendicular subdivision");
    std::string sub_x;
    int sub_digits = 10;
    bool sub_json = false;
    cmd_subdivide->add_option("--x", sub_x, "rectangle ratio (> 1)")->required();
    cmd_subdivide->add_option("--digits", sub_digits)->check(CLI::Range(1, 200));
    cmd_subdivide->add_flag("--json", sub_json);
    cmd_subdivide->callback([&] {
        Subdivision s = subdivide(parse_value_token(sub_x));
        if (sub_json) {
            out << subdivision_to_json(s, sub_digits).dump(2) << "\n";
            return;
        }
        out << "whole = " << approx_line(s.whole_length, sub_digits) << "\n";
        out << "kept  = " << approx_line(s.kept_length, sub_digits) << "\n";
        out << "strip = " << approx_line(s.strip_width, sub_digits) << "\n";
    });

    // ---- fold -------------------------------------------------------------
    auto* cmd_fold = app.add_subcommand("fold", "paper-strip folding");
    cmd_fold->require_subcommand(1);

    auto* fd_cf = cmd_fold->add_subcommand("cf", "reciprocal + n squares, repeated");
    int fcf_n = 2, fcf_depth = 3;
    bool fcf_trace = false;
    fd_cf->add_option("--n", fcf_n)->check(CLI::Range(1, 100));
    fd_cf->add_option("--depth", fcf_depth)->check(CLI::Range(0, 200));
    fd_cf->add_flag("--trace", fcf_trace, "emit the trace as JSON lines");
    fd_cf->callback([&] {
        FoldResult r = fold_cf(fcf_n, fcf_depth);
        out << "value = " << r.value.to_string() << " ≈ "
            << eval_decimal(Value(r.value), 10).digits << "\n";
        if (fcf_trace) out << trace_to_jsonl(r.trace);
    });

    auto* fd_h = cmd_fold->add_subcommand("harmonic", "1/m + 1/n and the harmonic mean");
    int fh_m = 3, fh_n = 2;
    bool fh_trace = false;
    fd_h->add_option("--m", fh_m)->check(CLI::Range(1, 1000));
    fd_h->add_option("--n", fh_n)->check(CLI::Range(1, 1000));
    fd_h->add_flag("--trace", fh_trace);
    fd_h->callback([&] {
        HarmonicResult r = fold_harmonic(fh_m, fh_n);
        out << "1/m + 1/n = " << r.sum_recip.to_string() << " ≈ "
            << eval_decimal(Value(r.sum_recip), 10).digits << "\n";
        out << "harmonic mean = " << r.harmonic.to_string() << " ≈ "
            << eval_decimal(Value(r.harmonic), 10).digits << "\n";
        if (fh_trace) out << trace_to_jsonl(r.trace);
    });

    auto* fd_g = cmd_fold->add_subcommand("golden", "reciprocal + square toward phi");
    std::string fg_start = "1";
    int fg_depth = 10;
    bool fg_trace = false;
    fd_g->add_option("--start", fg_start);
    fd_g->add_option("--depth", fg_depth)->check(CLI::Range(0, 500));
    fd_g->add_flag("--trace", fg_trace);
    fd_g->callback([&] {
        auto s = Rational::parse(fg_start);
        if (!s) throw std::invalid_argument("bad start '" + fg_start + "'");
        FoldResult r = fold_golden_from(*s, fg_depth);
        out << "value = " << r.value.to_string() << " ≈ "
            << eval_decimal(Value(r.value), 10).digits << "\n";
        if (fg_trace) out << trace_to_jsonl(r.trace);
    });

    // ---- render ------------------------------------------------------------
    auto* cmd_render = app.add_subcommand("render", "SVG figures");
    cmd_render->require_subcommand(1);

    auto* rd_sub = cmd_render->add_subcommand("subdivision", "x:1 rectangle subdivision");
    std::string rsub_x = "chi", rsub_out = "-";
    rd_sub->add_option("--x", rsub_x);
    rd_sub->add_option("--out", rsub_out, "output path ('-' for stdout)");
    rd_sub->callback(
        [&] { write_output(rsub_out, render_subdivision_svg(parse_value_token(rsub_x)), out); });

    auto* rd_ext = cmd_render->add_subcommand("extend", "extension chain rectangles");
    int rext_count = 4;
    std::string rext_out = "-";
    rd_ext->add_option("--count", rext_count)->check(CLI::Range(2, 30));
    rd_ext->add_option("--out", rext_out);
    rd_ext->callback([&] { write_output(rext_out, render_extend_svg(rext_count), out); });

    auto* rd_fold = cmd_render->add_subcommand("fold", "fold trace panels");
    std::string rf_kind = "cf", rf_out = "-", rf_start = "1";
    int rf_n = 2, rf_depth = 1, rf_m = 3;
    rd_fold->add_option("--kind", rf_kind)->check(CLI::IsMember({"cf", "harmonic", "golden"}));
    rd_fold->add_option("--n", rf_n)->check(CLI::Range(1, 100));
    rd_fold->add_option("--depth", rf_depth)->check(CLI::Range(0, 60));
    rd_fold->add_option("--m", rf_m)->check(CLI::Range(1, 100));
    rd_fold->add_option("--start", rf_start);
    rd_fold->add_option("--out", rf_out);
    rd_fold->callback([&] {
        write_output(rf_out, render_fold_svg(run_fold_kind(rf_kind, rf_n, rf_depth, rf_m, rf_start)),
                     out);
    });

    auto* rd_con = cmd_render->add_subcommand("construction", "straightedge-style figure");
    std::string rc_target = "chi", rc_out = "-";
    rd_con->add_option("--target", rc_target)->check(CLI::IsMember({"phi", "chi"}));
    rd_con->add_option("--out", rc_out);
    rd_con->callback([&] {
        write_output(rc_out,
                     render_construction_svg(rc_target == "phi" ? ConstructionTarget::phi
                                                                : ConstructionTarget::chi),
                     out);
    });

    // ---- verify -------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run the exact identity suite");
    cmd_verify->callback([&] {
        if (run_verify(out) != 0) rc = 2;  // verification failure
    });

    // exit codes: 0 success, 1 usage error, 2 verification failure
    try {
        std::vector<const char*> argv;
        argv.push_back("chi-lab");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help();
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace chilab
