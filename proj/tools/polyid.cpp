#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyid/errors.hpp"
#include "polyid/instance.hpp"
#include "polyid/render.hpp"
#include "polyid/report.hpp"
#include "polyid/toric.hpp"

namespace {

using namespace polyid;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::IoFailure, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail(Errc::IoFailure, "cannot read " + path);
    return buf.str();
}

void deliver(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail(Errc::IoFailure, "cannot write " + out_path);
    out << text;
    out.flush();
    if (!out) fail(Errc::IoFailure, "cannot write " + out_path);
}

void parse_dims(const std::string& spec, coord_t& w, coord_t& h) {
    size_t x = spec.find('x');
    if (x == std::string::npos || x == 0 || x + 1 == spec.size())
        fail(Errc::BadArgument, "rect must look like 5x5, got " + spec);
    try {
        w = std::stoll(spec.substr(0, x));
        h = std::stoll(spec.substr(x + 1));
    } catch (const std::exception&) {
        fail(Errc::BadArgument, "rect must look like 5x5, got " + spec);
    }
}

int exit_code(Errc c) {
    switch (c) {
        case Errc::OutOfScope: return 2;
        case Errc::ResourceLimit: return 3;
        default: return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyomino ideal toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string out_path;
    std::string rect = "5x5";
    std::uint64_t seed = 1;
    bool simple_mode = false;
    bool random_simple = false;
    std::int64_t budget = 0;
    int jobs = 1;

    auto* classify_cmd = app.add_subcommand("classify", "shape classification flags");
    classify_cmd->add_option("file", files, "instance file")->required()->expected(1);

    auto* minors_cmd = app.add_subcommand("minors", "inner 2-minor generators");
    minors_cmd->add_option("file", files, "instance file")->required()->expected(1);

    auto* lambda_cmd = app.add_subcommand("lambda", "interval family members");
    lambda_cmd->add_option("file", files, "instance file")->required()->expected(1);

    auto* alpha_cmd = app.add_subcommand("alpha", "interval products per vertex");
    alpha_cmd->add_option("file", files, "instance file")->required()->expected(1);

    auto* markov_cmd = app.add_subcommand("markov", "Markov basis of the toric kernel");
    markov_cmd->add_option("file", files, "instance file")->required()->expected(1);
    markov_cmd->add_option("--budget", budget, "pair budget");

    auto* verify_cmd = app.add_subcommand("verify", "compare the minor ideal with the kernel");
    verify_cmd->add_option("file", files, "instance files")->required()->expected(1, -1);
    verify_cmd->add_flag("--simple", simple_mode, "edge intervals only");
    verify_cmd->add_option("--budget", budget, "pair budget");
    verify_cmd->add_option("--jobs", jobs, "concurrent instances");

    auto* random_cmd = app.add_subcommand("random", "seeded instance generator");
    random_cmd->add_option("--rect", rect, "rectangle WxH");
    random_cmd->add_option("--seed", seed, "generator seed");
    random_cmd->add_flag("--simple", random_simple, "simple polyomino, no hole");
    random_cmd->add_option("-o,--out", out_path, "output file");

    auto* render_cmd = app.add_subcommand("render", "SVG picture");
    render_cmd->add_option("file", files, "instance file")->required()->expected(1);
    render_cmd->add_option("-o,--out", out_path, "output file");

    for (CLI::App* cmd : {classify_cmd, minors_cmd, lambda_cmd, alpha_cmd, markov_cmd, verify_cmd})
        cmd->add_option("-o,--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*random_cmd) {
            coord_t w = 0, h = 0;
            parse_dims(rect, w, h);
            Instance inst = random_simple
                                ? Instance{random_simple_polyomino(w, h, seed), std::nullopt}
                                : random_instance(w, h, seed);
            deliver(emit_instance(inst), out_path);
            return 0;
        }
        if (*render_cmd) {
            deliver(render_svg(parse_instance(slurp(files[0]))), out_path);
            return 0;
        }
        if (*verify_cmd) {
            VerifyOptions opts;
            opts.force_simple = simple_mode;
            if (budget > 0) opts.max_steps = budget;
            std::vector<std::pair<std::string, Instance>> instances;
            for (const std::string& f : files) instances.emplace_back(f, parse_instance(slurp(f)));
            std::vector<RunReport> reports = run_batch(instances, opts, jobs);
            std::string out;
            for (size_t i = 0; i < reports.size(); ++i) {
                if (i) out += "\n";
                out += render_run_report(reports[i]);
            }
            deliver(out, out_path);
            return 0;
        }

        Instance inst = parse_instance(slurp(files[0]));
        RunReport report;
        if (*classify_cmd) report = cmd_classify(files[0], inst);
        if (*minors_cmd) report = cmd_minors(files[0], inst);
        if (*lambda_cmd) report = cmd_lambda(files[0], inst);
        if (*alpha_cmd) report = cmd_alpha(files[0], inst);
        if (*markov_cmd) {
            GroebnerOptions opts;
            if (budget > 0) opts.max_steps = budget;
            report = cmd_markov(files[0], inst, opts);
        }
        deliver(render_run_report(report), out_path);
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
