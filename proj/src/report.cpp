#include "polyid/report.hpp"

#include <exception>

#include "polyid/errors.hpp"
#include "polyid/toric.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polyid {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string interval_text(const Interval& i) {
    return "[(" + std::to_string(i.lo.x) + "," + std::to_string(i.lo.y) + "),(" +
           std::to_string(i.hi.x) + "," + std::to_string(i.hi.y) + ")]";
}

RunReport base_report(const std::string& name, const Instance& inst) {
    RunReport r;
    r.instance = name;
    r.cells = inst.p.cells().size();
    r.flags = classify(inst.p);
    return r;
}

}  // namespace

std::string render_run_report(const RunReport& r) {
    std::string out;
    out += "instance: " + r.instance + "\n";
    out += "cells: " + std::to_string(r.cells) + "\n";
    out += "row_convex: " + yes_no(r.flags.row_convex) + "\n";
    out += "column_convex: " + yes_no(r.flags.column_convex) + "\n";
    out += "convex: " + yes_no(r.flags.convex) + "\n";
    out += "simple: " + yes_no(r.flags.simple) + "\n";
    out += "rectangle: " + yes_no(r.flags.rectangle) + "\n";
    out += "one_sided_ladder: " + yes_no(r.flags.one_sided_ladder) + "\n";
    if (r.lambda_size) out += "lambda: " + std::to_string(*r.lambda_size) + "\n";
    if (r.minor_count) out += "minors: " + std::to_string(*r.minor_count) + "\n";
    if (r.markov_count) out += "markov: " + std::to_string(*r.markov_count) + "\n";
    if (r.steps) out += "steps: " + std::to_string(*r.steps) + "\n";
    for (const std::string& line : r.listing) out += line + "\n";
    return out;
}

LambdaFamily resolve_family(const Instance& inst, bool force_simple) {
    if (force_simple) {
        if (!classify(inst.p).simple)
            fail(Errc::OutOfScope, "forced simple path on a nonsimple polyomino");
        return lambda_family(inst.p, std::nullopt);
    }
    if (inst.ctx) {
        try {
            return lambda_family(inst.p, inst.ctx);
        } catch (const Error& e) {
            if (e.code() == Errc::NotConvex || e.code() == Errc::BoundaryTouch)
                fail(Errc::OutOfScope, e.what());
            throw;
        }
    }
    if (!classify(inst.p).simple)
        fail(Errc::OutOfScope, "nonsimple polyomino without a hole context");
    return lambda_family(inst.p, std::nullopt);
}

RunReport cmd_classify(const std::string& name, const Instance& inst) {
    return base_report(name, inst);
}

RunReport cmd_minors(const std::string& name, const Instance& inst) {
    RunReport r = base_report(name, inst);
    VariableUniverse xvars = VariableUniverse::vertices(inst.p);
    std::vector<Binomial> minors = inner_minor_generators(inst.p);
    r.minor_count = minors.size();
    for (const Binomial& f : minors) r.listing.push_back(f.render(xvars));
    return r;
}

RunReport cmd_lambda(const std::string& name, const Instance& inst) {
    RunReport r = base_report(name, inst);
    LambdaFamily family = resolve_family(inst, false);
    r.lambda_size = family.size();
    size_t k = 0;
    if (family.special())
        r.listing.push_back("u[" + std::to_string(k++) +
                            "]: special " + interval_text(family.special()->box));
    for (const EdgeIntervalMax& m : family.edges().horizontal)
        r.listing.push_back("u[" + std::to_string(k++) +
                            "]: horizontal " + interval_text(m.span));
    for (const EdgeIntervalMax& m : family.edges().vertical)
        r.listing.push_back("u[" + std::to_string(k++) +
                            "]: vertical " + interval_text(m.span));
    return r;
}

RunReport cmd_alpha(const std::string& name, const Instance& inst) {
    RunReport r = base_report(name, inst);
    ToricMap t = build_toric_map(inst.p, resolve_family(inst, false));
    r.lambda_size = t.lambda.size();
    for (size_t i = 0; i < t.xvars.size(); ++i)
        r.listing.push_back("alpha[" + t.xvars.name(i) + "] = " + t.alpha[i].render(t.uvars));
    return r;
}

RunReport cmd_markov(const std::string& name, const Instance& inst, const GroebnerOptions& opts) {
    RunReport r = base_report(name, inst);
    ToricMap t = build_toric_map(inst.p, resolve_family(inst, false));
    r.lambda_size = t.lambda.size();
    MarkovBasis mb = markov_basis(t, opts);
    r.markov_count = mb.binomials.size();
    r.steps = mb.steps;
    for (const Binomial& f : mb.binomials) r.listing.push_back(f.render(t.xvars));
    return r;
}

RunReport cmd_verify(const std::string& name, const Instance& inst, const VerifyOptions& opts) {
    RunReport r = base_report(name, inst);
    LambdaFamily family = resolve_family(inst, opts.force_simple);
    GroebnerOptions gopts;
    gopts.max_steps = opts.max_steps;
    Certificate c = verify_theorem(inst.p, family, gopts);
    r.steps = c.steps;
    std::string cert = render_certificate(c);
    size_t start = 0;
    while (start < cert.size()) {
        size_t end = cert.find('\n', start);
        r.listing.push_back(cert.substr(start, end - start));
        start = end + 1;
    }
    return r;
}

std::vector<RunReport> run_batch(const std::vector<std::pair<std::string, Instance>>& instances,
                                 const VerifyOptions& opts, int jobs) {
    std::vector<RunReport> reports(instances.size());
    std::vector<std::exception_ptr> errors(instances.size());
    int64_t n = static_cast<int64_t>(instances.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : 1) if (jobs > 1)
#endif
    for (int64_t i = 0; i < n; ++i) {
        try {
            reports[i] = cmd_verify(instances[i].first, instances[i].second, opts);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (int64_t i = 0; i < n; ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);
    return reports;
}

}  // namespace polyid
