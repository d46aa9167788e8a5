// Command-line front end over the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "umf/umf.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Failure {
    std::string message;
};

void check(umf_status s) {
    if (s != UMF_OK) throw Failure{*umf_last_error() ? umf_last_error() : umf_status_name(s)};
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using Doc = std::unique_ptr<umf_doc, Deleter<umf_doc, umf_doc_free>>;
using Mf = std::unique_ptr<umf_mf, Deleter<umf_mf, umf_mf_free>>;
using ReportPtr = std::unique_ptr<umf_report, Deleter<umf_report, umf_report_free>>;
using Ring = std::unique_ptr<umf_ring, Deleter<umf_ring, umf_ring_free>>;
using PolyPtr = std::unique_ptr<umf_poly, Deleter<umf_poly, umf_poly_free>>;

std::string take(char* s) {
    std::string out(s);
    umf_string_free(s);
    return out;
}

Doc load(const std::string& path) {
    umf_doc* d = nullptr;
    check(umf_doc_load(path.c_str(), &d));
    return Doc(d);
}

Mf load_mf(const std::string& path) {
    const auto d = load(path);
    umf_mf* m = nullptr;
    check(umf_mf_from_doc(d.get(), &m));
    return Mf(m);
}

std::string record(const umf_report* r, const char* key) {
    char* s = nullptr;
    check(umf_report_get(r, key, &s));
    return take(s);
}

struct Options {
    std::string field = "2^1";
    int dmax = 6;
    std::uint64_t seed = 1729;
    int budget_bits = 24;
    std::string format = "text";
    std::string point;
    std::string potential;
    std::string vars = "x,y";
    std::string laurent;
    std::size_t size = 1;
    std::string support;
    std::string output;
    std::vector<std::string> inputs;
};

umf_format format_of(const Options& o) { return o.format == "records" ? UMF_FORMAT_RECORDS : UMF_FORMAT_TEXT; }

int finish(const Options& o, ReportPtr rep, const std::string& headline = {}) {
    if (!headline.empty() && format_of(o) == UMF_FORMAT_TEXT) std::cout << headline << "\n";
    char* text = nullptr;
    check(umf_report_render(rep.get(), format_of(o), &text));
    std::cout << take(text);
    int ok = 0;
    check(umf_report_ok(rep.get(), &ok));
    return ok ? kExitOk : kExitFail;
}

PolyPtr potential_from_flags(const Options& o, Ring& ring) {
    if (o.potential.empty()) throw Failure{"--potential is required"};
    std::string flags = o.laurent;
    if (flags.empty()) {
        // Every variable Laurent unless told otherwise.
        flags = "1";
        for (char c : o.vars)
            if (c == ',') flags += ",1";
    }
    umf_ring* r = nullptr;
    check(umf_ring_new(o.field.c_str(), o.vars.c_str(), flags.c_str(), &r));
    ring.reset(r);
    umf_poly* p = nullptr;
    check(umf_poly_parse(ring.get(), o.potential.c_str(), &p));
    return PolyPtr(p);
}

int run(const std::string& cmd, const Options& o) {
    const auto need_inputs = [&](std::size_t lo, std::size_t hi) {
        if (o.inputs.size() < lo || o.inputs.size() > hi)
            throw Failure{cmd + ": expected " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) +
                          " input file(s)"};
    };
    umf_report* raw = nullptr;

    if (cmd == "parse-check") {
        need_inputs(1, 1);
        char* text = nullptr;
        check(umf_doc_format(load(o.inputs[0]).get(), &text));
        std::cout << take(text);
        return kExitOk;
    }
    if (cmd == "verify") {
        need_inputs(1, 1);
        check(umf_doc_verify(load(o.inputs[0]).get(), &raw));
        ReportPtr rep(raw);
        const bool ok = record(rep.get(), "ok") == "true";
        if (format_of(o) == UMF_FORMAT_RECORDS) {
            std::cout << "ok=" << record(rep.get(), "ok") << " residual_terms=" << record(rep.get(), "residual_terms")
                      << "\n";
            return ok ? kExitOk : kExitFail;
        }
        return finish(o, std::move(rep), ok ? "Q² = W·Id: OK" : "Q² = W·Id: FAIL");
    }
    if (cmd == "double") {
        need_inputs(1, 1);
        const auto mf = load_mf(o.inputs[0]);
        umf_mf* d = nullptr;
        check(umf_mf_double(mf.get(), &d, &raw));
        Mf doubled(d);
        ReportPtr rep(raw);
        char* text = nullptr;
        check(umf_mf_format(doubled.get(), &text));
        const auto body = take(text);
        if (!o.output.empty()) {
            std::ofstream out(o.output);
            if (!(out << body)) throw Failure{"cannot write " + o.output};
        } else if (format_of(o) == UMF_FORMAT_TEXT) {
            std::cout << body;
        }
        return finish(o, std::move(rep));
    }
    if (cmd == "cohomology") {
        need_inputs(1, 2);
        const auto q = load_mf(o.inputs[0]);
        const auto r = o.inputs.size() == 2 ? load_mf(o.inputs[1]) : nullptr;
        check(umf_cohomology(q.get(), r ? r.get() : q.get(), o.dmax, &raw));
        return finish(o, ReportPtr(raw));
    }
    if (cmd == "jacobian") {
        need_inputs(0, 0);
        Ring ring;
        const auto w = potential_from_flags(o, ring);
        check(umf_jacobian(w.get(), &raw));
        ReportPtr rep(raw);
        std::string headline;
        const auto dim = record(rep.get(), "dimension");
        if (dim == "infinite") {
            headline = "dimension infinite";
        } else {
            const auto first = o.vars.substr(0, o.vars.find(','));
            auto mp = record(rep.get(), ("minpoly[" + first + "]").c_str());
            std::erase(mp, ' ');
            headline = "dimension " + dim + ", minimal polynomial of " + first + ": " + mp;
        }
        return finish(o, std::move(rep), headline);
    }
    if (cmd == "reduce") {
        need_inputs(1, 1);
        check(umf_reduce(load(o.inputs[0]).get(), &raw));
        ReportPtr rep(raw);
        const auto alpha = record(rep.get(), "alpha");
        return finish(o, std::move(rep), "f ~ (" + alpha + ")·Id");
    }
    if (cmd == "evaluate") {
        need_inputs(1, 1);
        if (o.point.empty()) throw Failure{"--point is required"};
        check(umf_evaluate(load_mf(o.inputs[0]).get(), o.field.c_str(), o.point.c_str(), &raw));
        return finish(o, ReportPtr(raw));
    }
    if (cmd == "search") {
        need_inputs(0, 0);
        if (o.support.empty()) throw Failure{"--support is required"};
        Ring ring;
        const auto w = potential_from_flags(o, ring);
        check(umf_search(w.get(), o.size, o.support.c_str(), o.budget_bits, &raw));
        return finish(o, ReportPtr(raw));
    }
    if (cmd == "suite") {
        need_inputs(0, 0);
        check(umf_suite(o.seed, o.field.c_str(), &raw));
        return finish(o, ReportPtr(raw));
    }
    throw Failure{"unknown command " + cmd};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix factorizations over GF(2^k)"};
    app.require_subcommand(1);
    Options o;

    const auto add = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--field", o.field, "coefficient field 2^k[:modulusbits]");
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "records"}));
        return sub;
    };
    auto* verify = add("verify", "check Q^2 = W*Id");
    verify->add_option("input", o.inputs)->required();
    auto* dbl = add("double", "doubled factorization, forgotten to ungraded");
    dbl->add_option("input", o.inputs)->required();
    dbl->add_option("--output", o.output, "write the doubled factorization here");
    auto* coh = add("cohomology", "window cohomology dimensions of Hom(Q, R)");
    coh->add_option("inputs", o.inputs)->required();
    coh->add_option("--dmax", o.dmax)->check(CLI::Range(1, 12));
    auto* jac = add("jacobian", "Jacobian ring of a potential");
    auto* search = add("search", "enumerate factorizations");
    for (auto* sub : {jac, search}) {
        sub->add_option("--potential", o.potential)->required();
        sub->add_option("--vars", o.vars, "ring variables");
        sub->add_option("--laurent", o.laurent, "0/1 per variable (default all 1)");
    }
    search->add_option("--size", o.size)->check(CLI::Range(1, 8));
    search->add_option("--support", o.support, "comma-separated monomials")->required();
    search->add_option("--budget-bits", o.budget_bits)->check(CLI::Range(1, 40));
    auto* reduce = add("reduce", "normalize a closed endomorphism of the RP^2 factorization");
    reduce->add_option("input", o.inputs)->required();
    auto* eval = add("evaluate", "local cohomology at a point");
    eval->add_option("input", o.inputs)->required();
    eval->add_option("--point", o.point, "a,b[,c] as field element values")->required();
    auto* suite = add("suite", "run every check");
    suite->add_option("--seed", o.seed);
    auto* pc = add("parse-check", "parse and print canonical text");
    pc->add_option("input", o.inputs)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }
    try {
        return run(app.get_subcommands().front()->get_name(), o);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return kExitError;
    }
}
