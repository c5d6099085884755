// alphasec command line front end: load body files, run the computations,
// emit deterministic JSON reports or SVG plots.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "alphasec/analysis.hpp"
#include "alphasec/core.hpp"
#include "alphasec/envelope.hpp"
#include "alphasec/errors.hpp"
#include "alphasec/oracle.hpp"
#include "alphasec/report.hpp"

namespace {

using namespace alphasec;

struct Options {
    std::string body_path;
    std::string inner_path;
    std::string outer_path;
    double alpha = 0.25;
    double theta = 0.0;
    double offset = 0.0;
    int samples = 1024;
    double tol = 1e-6;
    uint64_t seed = 1;
    std::string out_path;
    std::string format = "json";
};

int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::BadInput:
    case ErrorKind::DegenerateInput:
        return 2;
    case ErrorKind::ToleranceFailure:
        return 4;
    default:
        return 3;
    }
}

void emit(const Options& opt, const std::string& summary, const std::string& report) {
    std::cout << summary << "\n";
    if (opt.out_path.empty()) {
        std::cout << report << "\n";
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) fail(ErrorKind::BadInput, "cannot write " + opt.out_path);
    out << report;
}

int run_envelope(const Options& opt) {
    ConvexBody body = load_body(opt.body_path);
    EnvelopeCurve curve = sample_envelope(body, opt.alpha, opt.samples);
    FBZReport fbz = fbz_partition(body, opt.alpha, opt.samples);
    std::string report = opt.format == "svg" ? render_svg(body, &curve, &fbz, nullptr)
                                             : envelope_to_json(curve, fbz);
    emit(opt,
         "envelope alpha=" + format_number(opt.alpha) + " samples=" +
             std::to_string(curve.samples.size()) + " cusps=" + std::to_string(fbz.cusps.size()),
         report);
    return 0;
}

int run_core(const Options& opt) {
    ConvexBody body = load_body(opt.body_path);
    CoreResult core = alpha_core(body, opt.alpha, std::max(opt.samples, 64));
    std::string kind = core.kind == CoreKind::Region
                           ? "region"
                           : (core.kind == CoreKind::SinglePoint ? "point" : "empty");
    std::string report = opt.format == "svg" ? render_svg(body, nullptr, nullptr, &core)
                                             : core_to_json(opt.alpha, core);
    emit(opt, "core alpha=" + format_number(opt.alpha) + " kind=" + kind, report);
    return 0;
}

int run_critical(const Options& opt) {
    ConvexBody body = load_body(opt.body_path);
    CriticalValues cv = critical_values(body, opt.tol);
    emit(opt,
         "critical alpha_B=" + format_number(cv.alpha_B) + " alpha_Z=" +
             format_number(cv.alpha_Z) + " alpha_K=" + format_number(cv.alpha_K),
         critical_to_json(cv));
    return 0;
}

int run_classify(const Options& opt) {
    ConvexBody body = load_body(opt.body_path);
    VelocityInterval v = velocity(body, opt.alpha, Angle(opt.theta));
    uint8_t labels = classify_velocity(v, 1e-9 * body.diameter());
    std::string names;
    for (const std::string& s : label_names(labels)) names += s;
    emit(opt, "classify theta=" + format_number(opt.theta) + " labels=" + names,
         classify_to_json(opt.alpha, opt.theta, v, labels));
    return 0;
}

int run_bisected(const Options& opt) {
    ConvexBody body = load_body(opt.body_path);
    Point g = mass_center(body);
    BisectedChords chords = chords_bisected_by(body, g);
    double quotient = asymmetry_quotient(body);
    emit(opt,
         "bisected count=" + std::to_string(chords.chords.size()) +
             (chords.continuum ? " continuum" : "") + " quotient=" + format_number(quotient),
         bisected_to_json(g, chords, quotient));
    return 0;
}

int run_containment(const Options& opt) {
    ConvexBody inner = load_body(opt.inner_path);
    ConvexBody outer = load_body(opt.outer_path);
    bool contained = core_containment(inner, outer, opt.alpha, std::max(opt.samples, 64));
    emit(opt,
         std::string("containment ") + (contained ? "true" : "false") +
             " alpha=" + format_number(opt.alpha),
         containment_to_json(opt.alpha, contained));
    return 0;
}

int run_conjecture(const Options& opt) {
    ConvexBody inner = load_body(opt.inner_path);
    ConvexBody outer = load_body(opt.outer_path);
    ConjectureWitness w = conjecture_check(inner, outer, opt.alpha, opt.samples);
    std::string kind = w.found ? (w.disjoint ? "disjoint" : "beta-section") : "VIOLATION-CANDIDATE";
    if (!w.found)
        std::cerr << "warning: no witness found; the planar statement is proven, so this "
                     "indicates a resolution or input problem\n";
    emit(opt, "conjecture witness=" + kind + " theta=" + format_number(w.theta),
         conjecture_to_json(opt.alpha, w));
    return 0;
}

int run_oracle(const Options& opt) {
    ConvexBody body = load_body(opt.body_path);
    OrientedLine line{Angle(opt.theta), opt.offset};
    McEstimate est = mc_area(body, line, std::max<long>(opt.samples, 10000), opt.seed);
    emit(opt,
         "oracle estimate=" + format_number(est.estimate) + " sigma=" + format_number(est.sigma),
         oracle_to_json(est));
    return 0;
}

int run_alpha1(const Options& opt) {
    double a1 = solve_alpha1();
    emit(opt, "alpha1 " + format_number(a1), alpha1_to_json(a1));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"alpha-sections of planar convex bodies: envelopes, cores, critical values"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_body) {
        if (with_body) cmd->add_option("body", opt.body_path, "body JSON file")->required();
        cmd->add_option("--samples", opt.samples, "sample count for scans");
        cmd->add_option("--tol", opt.tol, "tolerance for critical values")
            ->check(CLI::Range(1e-10, 1.0));
        cmd->add_option("--seed", opt.seed, "random seed for the oracle");
        cmd->add_option("--out", opt.out_path, "write the report to this file");
        cmd->add_option("--format", opt.format, "json or svg")
            ->check(CLI::IsMember({"json", "svg"}));
    };
    auto add_alpha = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", opt.alpha, "area fraction in (0,1)");
    };

    CLI::App* c_env = app.add_subcommand("envelope", "sample the alpha-section envelope");
    add_common(c_env, true);
    add_alpha(c_env);
    CLI::App* c_core = app.add_subcommand("core", "alpha-core by half-plane intersection");
    add_common(c_core, true);
    add_alpha(c_core);
    CLI::App* c_crit = app.add_subcommand("critical", "critical values alpha_B, alpha_Z, alpha_K");
    add_common(c_crit, true);
    CLI::App* c_cls = app.add_subcommand("classify", "forwards/backwards/zero label of a direction");
    add_common(c_cls, true);
    add_alpha(c_cls);
    c_cls->add_option("--theta", opt.theta, "direction in radians");
    CLI::App* c_bis = app.add_subcommand("bisected", "chords bisected by the mass center");
    add_common(c_bis, true);
    CLI::App* c_cont = app.add_subcommand("containment", "core containment for a nested pair");
    c_cont->add_option("inner", opt.inner_path, "inner body JSON file")->required();
    c_cont->add_option("outer", opt.outer_path, "outer body JSON file")->required();
    add_common(c_cont, false);
    add_alpha(c_cont);
    CLI::App* c_conj = app.add_subcommand("conjecture", "section witness search for a nested pair");
    c_conj->add_option("inner", opt.inner_path, "inner body JSON file")->required();
    c_conj->add_option("outer", opt.outer_path, "outer body JSON file")->required();
    add_common(c_conj, false);
    add_alpha(c_conj);
    CLI::App* c_orc = app.add_subcommand("oracle", "Monte-Carlo area of the right part");
    add_common(c_orc, true);
    c_orc->add_option("--theta", opt.theta, "line direction in radians");
    c_orc->add_option("--offset", opt.offset, "line offset t");
    CLI::App* c_a1 = app.add_subcommand("alpha1", "disc-in-triangle containment threshold");
    add_common(c_a1, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_env->parsed()) return run_envelope(opt);
        if (c_core->parsed()) return run_core(opt);
        if (c_crit->parsed()) return run_critical(opt);
        if (c_cls->parsed()) return run_classify(opt);
        if (c_bis->parsed()) return run_bisected(opt);
        if (c_cont->parsed()) return run_containment(opt);
        if (c_conj->parsed()) return run_conjecture(opt);
        if (c_orc->parsed()) return run_oracle(opt);
        if (c_a1->parsed()) return run_alpha1(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 1;
}
