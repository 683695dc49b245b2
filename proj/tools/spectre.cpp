// Command-line front end: parses diagram files and generator tuples, runs the
// library, and emits deterministic CSV/JSON reports.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectre/curve.hpp"
#include "spectre/dist.hpp"
#include "spectre/error.hpp"
#include "spectre/report.hpp"
#include "spectre/spectrum.hpp"

namespace {

using namespace spectre;

std::vector<long long> parse_ll_list(const std::string& text, const std::string& flag) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(errc::parse_error, flag + ": expected a comma-separated integer list, got \"" + text + "\"");
        }
        pos = comma + 1;
    }
    return out;
}

std::string ll_list_string(const std::vector<long long>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

ordered_json ll_array(const std::vector<long long>& xs) {
    ordered_json arr = ordered_json::array();
    for (long long x : xs) arr.push_back(x);
    return arr;
}

ordered_json tail_array(const std::vector<long long>& xs) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 1; i < xs.size(); ++i) arr.push_back(xs[i]);
    return arr;
}

struct Options {
    std::string format = "csv";
    std::string out_path;
    std::string echo;
};

void run_spectrum(const Options& opt, const std::string& diagram_path) {
    const DiagramInput in = load_diagram(diagram_path);
    const NewtonPolyhedron poly = NewtonPolyhedron::build(in.support);
    const FracPoly spectrum = steenbrink_spectrum(in.support);
    const SpectrumStats st = spectrum_stats(spectrum, in.support.vars);
    const VarianceCheck vc = variance_check(st);

    ordered_json rep = make_report(opt.echo, in.hash);
    rep["meta"]["vars"] = in.support.vars;
    rep["meta"]["mu_spectrum"] = st.mu;
    rep["meta"]["mu_volume"] = milnor_kouchnirenko(poly);
    rep["meta"]["symmetric"] = spectrum_symmetric(st);
    rep["meta"]["variance_lhs"] = frac_string(vc.lhs);
    rep["meta"]["variance_rhs"] = frac_string(vc.rhs);
    rep["meta"]["variance_holds"] = vc.holds;
    rep["columns"] = {"exponent_num", "exponent_den", "multiplicity"};
    for (const auto& [expo, count] : spectrum.sorted_terms())
        rep["rows"].push_back({to_ll(rat_num(expo)), to_ll(rat_den(expo)), count});
    emit_report(rep, opt.format, opt.out_path);
}

void run_milnor(const Options& opt, const std::string& diagram_path) {
    const DiagramInput in = load_diagram(diagram_path);
    const NewtonPolyhedron poly = NewtonPolyhedron::build(in.support);
    const std::vector<Rat> vols = poly.volumes();

    ordered_json rep = make_report(opt.echo, in.hash);
    rep["meta"]["vars"] = in.support.vars;
    rep["meta"]["mu"] = milnor_kouchnirenko(poly);
    rep["columns"] = {"k", "volume"};
    for (std::size_t k = 0; k < vols.size(); ++k)
        rep["rows"].push_back({static_cast<long long>(k + 1), frac_string(vols[k])});
    emit_report(rep, opt.format, opt.out_path);
}

void run_curve(const Options& opt, const std::vector<long long>& gens) {
    const CurveData c = curve_from_generators(gens);
    const SemigroupView sv = semigroup_view(c, c.conductor);

    ordered_json rep = make_report(opt.echo, hash_tag("generators=" + ll_list_string(gens)));
    rep["meta"]["generators"] = ll_array(c.gens);
    rep["meta"]["pairs"] = c.g;
    rep["meta"]["gcd_chain"] = ll_array(c.e);
    rep["meta"]["multiplicities_n"] = tail_array(c.n);
    rep["meta"]["normalized_q"] = tail_array(c.q);
    rep["meta"]["char_exponents"] = ll_array(c.beta);
    rep["meta"]["mu"] = c.mu;
    rep["meta"]["mu_acampo"] = milnor_acampo(c);
    rep["meta"]["conductor"] = c.conductor;
    rep["meta"]["gap_count"] = static_cast<long long>(sv.gaps.size());
    rep["meta"]["lct"] = frac_string(lct(c));
    rep["meta"]["phi_at_lct"] = frac_string(phi_at_lct(c));
    if (c.g == 1) rep["meta"]["phi_at_top"] = frac_string(phi_at_top(c));
    rep["columns"] = {"gap"};
    for (long long gap : sv.gaps) rep["rows"].push_back({gap});
    emit_report(rep, opt.format, opt.out_path);
}

int run_sweep(const Options& opt, int max_g, long long max_gen) {
    const SweepResult res = thm34_sweep(max_g, max_gen);

    ordered_json rep = make_report(
        opt.echo, hash_tag("max_g=" + std::to_string(max_g) + ";max_gen=" + std::to_string(max_gen)));
    rep["meta"]["max_g"] = max_g;
    rep["meta"]["max_gen"] = max_gen;
    rep["meta"]["instances"] = res.instances;
    rep["meta"]["instances_by_g"] = ll_array(res.instances_by_g);
    rep["meta"]["exception_count"] = static_cast<long long>(res.exceptions.size());
    rep["meta"]["violation_count"] = static_cast<long long>(res.violations.size());
    ordered_json viol = ordered_json::array();
    for (const std::string& v : res.violations) viol.push_back(v);
    rep["meta"]["violations"] = viol;
    rep["columns"] = {"generators", "phi_at_lct"};
    for (const SweepException& ex : res.exceptions)
        rep["rows"].push_back({ll_array(ex.gens), frac_string(ex.phi)});
    emit_report(rep, opt.format, opt.out_path);
    return res.violations.empty() ? 0 : 1;
}

void run_dist_phi(const Options& opt, const std::string& diagram_path, const std::string& r_text) {
    const DiagramInput in = load_diagram(diagram_path);
    const Rat r = parse_frac(r_text);
    const SpectrumStats st = spectrum_stats(steenbrink_spectrum(in.support), in.support.vars);

    ordered_json rep = make_report(opt.echo, in.hash);
    rep["meta"]["vars"] = in.support.vars;
    rep["meta"]["mu"] = st.mu;
    rep["columns"] = {"r", "limit_cdf", "count_leq", "phi"};
    rep["rows"].push_back(
        {frac_string(r), frac_string(ih_cdf(st.vars, r)), st.count_leq(r), frac_string(phi_f(st, r))});
    emit_report(rep, opt.format, opt.out_path);
}

void run_dist_converge(const Options& opt, const std::string& diagram_path, const std::string& scales_text,
                       const std::string& metric) {
    const DiagramInput in = load_diagram(diagram_path);
    const std::vector<long long> scales = parse_ll_list(scales_text, "--scales");
    const std::vector<ConvergenceRow> rows = convergence_sweep(in.support, scales, metric);

    ordered_json rep = make_report(opt.echo, in.hash);
    rep["meta"]["vars"] = in.support.vars;
    rep["meta"]["metric"] = metric;
    rep["columns"] = {"scale", "mu", "distance"};
    for (const ConvergenceRow& row : rows)
        rep["rows"].push_back({row.scale, row.mu, format_real(row.distance)});
    emit_report(rep, opt.format, opt.out_path);
}

void run_fig1(const Options& opt, const std::vector<long long>& gens, long long max_k, long long samples) {
    const CurveData c = curve_from_generators(gens);
    if (c.g != 1)
        fail(errc::not_single_pair, "the staircase plot needs exactly two generators");
    if (samples < 1)
        fail(errc::parse_error, "--samples must be at least 1");
    const long long p = c.beta[0];
    const long long q = c.beta[1];
    const long long d = p * q;
    if (max_k < 0) max_k = c.mu + p - 1;
    const std::vector<long long> elements = staircase_elements(c, max_k);

    ordered_json rep = make_report(opt.echo, hash_tag("generators=" + ll_list_string(gens)));
    rep["meta"]["generators"] = ll_array(c.gens);
    rep["meta"]["mu"] = c.mu;
    rep["meta"]["max_k"] = max_k;
    rep["meta"]["jump_count"] = static_cast<long long>(elements.size());
    rep["meta"]["samples"] = samples;
    rep["columns"] = {"curve", "r", "value"};
    for (long long j = 0; j <= samples; ++j) {
        const Rat r = Rat(23 * j, 20 * samples);  // equispaced over [0, 23/20]
        rep["rows"].push_back({"continuous", frac_string(r), frac_string(r * r / 2)});
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const Rat r = Rat(elements[i] + p + q, d);
        rep["rows"].push_back({"staircase", frac_string(r), frac_string(Rat(static_cast<long long>(i) + 1, c.mu))});
    }
    emit_report(rep, opt.format, opt.out_path);
}

// Echo of the invocation for the report header.  The output destination is
// not part of the computation, so --out is omitted: writing the same report
// to two different paths yields byte-identical files.
std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--out") {
            ++i;
            continue;
        }
        if (arg.rfind("--out=", 0) == 0) continue;
        if (!out.empty()) out += ' ';
        out += arg;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact singularity spectra from Newton diagrams and plane-branch semigroups"};
    app.require_subcommand(1);

    Options opt;
    opt.echo = join_args(argc, argv);
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", opt.out_path, "Write the report to this path instead of stdout");

    std::string diagram_path;
    std::string generators_text;
    std::string r_text;
    std::string scales_text = "1,2,4,8,16,32";
    std::string metric = "ks";
    int max_g = 2;
    long long max_gen = 30;
    long long max_k = -1;
    long long samples = 46;

    CLI::App* cmd_spectrum = app.add_subcommand("spectrum", "Spectrum of a Newton-nondegenerate germ");
    cmd_spectrum->add_option("--diagram", diagram_path, "Diagram JSON file")->required();

    CLI::App* cmd_milnor = app.add_subcommand("milnor", "Milnor number from diagram volumes");
    cmd_milnor->add_option("--diagram", diagram_path, "Diagram JSON file")->required();

    CLI::App* cmd_curve = app.add_subcommand("curve", "Plane-branch invariants from semigroup generators");
    cmd_curve->add_option("--generators", generators_text, "Comma-separated minimal generators");
    CLI::App* cmd_sweep = cmd_curve->add_subcommand("sweep", "Scan all generator tuples up to a bound");
    cmd_sweep->add_option("--max-g", max_g, "Largest number of generator pairs")->capture_default_str();
    cmd_sweep->add_option("--max-gen", max_gen, "Largest allowed generator")->capture_default_str();

    CLI::App* cmd_dist = app.add_subcommand("dist", "Compare a spectrum against its limit distribution");
    cmd_dist->require_subcommand(1);
    CLI::App* cmd_phi = cmd_dist->add_subcommand("phi", "Discrepancy at one point");
    cmd_phi->add_option("--diagram", diagram_path, "Diagram JSON file")->required();
    cmd_phi->add_option("--r", r_text, "Evaluation point as num/den")->required();
    CLI::App* cmd_converge = cmd_dist->add_subcommand("converge", "Distance to the limit under diagram scaling");
    cmd_converge->add_option("--diagram", diagram_path, "Diagram JSON file")->required();
    cmd_converge->add_option("--scales", scales_text, "Comma-separated scale factors")->capture_default_str();
    cmd_converge->add_option("--metric", metric, "Distance metric")->check(CLI::IsMember({"ks", "fourier"}))->capture_default_str();

    CLI::App* cmd_fig1 = app.add_subcommand("fig1", "Staircase data for the semigroup counting plot");
    cmd_fig1->add_option("--generators", generators_text, "Two comma-separated generators")->required();
    cmd_fig1->add_option("--max-k", max_k, "Largest semigroup element to include (default: mu + smallest generator - 1)");
    cmd_fig1->add_option("--samples", samples, "Sample count for the continuous curve")->capture_default_str();

    // Let --format/--out be written after the subcommand as well as before it.
    for (CLI::App* sub : {cmd_spectrum, cmd_milnor, cmd_curve, cmd_sweep, cmd_dist, cmd_phi, cmd_converge, cmd_fig1})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_spectrum->parsed()) {
            run_spectrum(opt, diagram_path);
        } else if (cmd_milnor->parsed()) {
            run_milnor(opt, diagram_path);
        } else if (cmd_curve->parsed()) {
            if (cmd_sweep->parsed()) return run_sweep(opt, max_g, max_gen);
            if (generators_text.empty())
                fail(errc::parse_error, "curve needs --generators (or the sweep subcommand)");
            run_curve(opt, parse_ll_list(generators_text, "--generators"));
        } else if (cmd_phi->parsed()) {
            run_dist_phi(opt, diagram_path, r_text);
        } else if (cmd_converge->parsed()) {
            run_dist_converge(opt, diagram_path, scales_text, metric);
        } else if (cmd_fig1->parsed()) {
            run_fig1(opt, parse_ll_list(generators_text, "--generators"), max_k, samples);
        }
        return 0;
    } catch (const spectre::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return errc_is_input(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
