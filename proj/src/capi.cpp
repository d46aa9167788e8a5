#include "umf/umf.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <sstream>

#include "umf/cohomwin.hpp"
#include "umf/error.hpp"
#include "umf/groebner.hpp"
#include "umf/mfio.hpp"
#include "umf/corpus.hpp"

struct umf_ring {
    umf::RingPtr ring;
};
struct umf_poly {
    umf::Poly poly;
};
struct umf_doc {
    umf::MfDocument doc;
};
struct umf_mf {
    umf::UngradedMF mf;
};
struct umf_report {
    umf::Report report;
};

namespace {

thread_local std::string last_error;

umf_status to_status(umf::ErrorCode code) {
    using umf::ErrorCode;
    switch (code) {
        case ErrorCode::FieldMismatch: return UMF_E_FIELD_MISMATCH;
        case ErrorCode::DivisionByZero: return UMF_E_DIVISION_BY_ZERO;
        case ErrorCode::RingMismatch: return UMF_E_RING_MISMATCH;
        case ErrorCode::Parse: return UMF_E_PARSE;
        case ErrorCode::DimensionMismatch: return UMF_E_DIMENSION_MISMATCH;
        case ErrorCode::Pole: return UMF_E_POLE;
        case ErrorCode::NotClosed: return UMF_E_NOT_CLOSED;
        case ErrorCode::BudgetExceeded: return UMF_E_BUDGET_EXCEEDED;
        case ErrorCode::WindowOverflow: return UMF_E_WINDOW_OVERFLOW;
        case ErrorCode::CriticalDirection: return UMF_E_CRITICAL_DIRECTION;
        case ErrorCode::Overflow: return UMF_E_OVERFLOW;
        case ErrorCode::InvalidArgument: return UMF_E_INVALID_ARGUMENT;
        case ErrorCode::Invariant: return UMF_E_INVARIANT;
        case ErrorCode::Io: return UMF_E_IO;
    }
    return UMF_E_INTERNAL;
}

umf_status fail(umf_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs body, mapping exceptions to status codes.
template <class F>
umf_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const umf::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(UMF_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(UMF_E_INTERNAL, e.what());
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<std::string> split_csv(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in{std::string(s)};
    while (std::getline(in, cur, ',')) {
        const auto b = cur.find_first_not_of(" \t");
        const auto e = cur.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string() : cur.substr(b, e - b + 1));
    }
    return out;
}

umf_status emit(umf::Report rep, umf_report** out) {
    *out = new umf_report{std::move(rep)};
    return UMF_OK;
}

#define UMF_REQUIRE(...)                                                              \
    do {                                                                              \
        const void* ptrs_[] = {__VA_ARGS__};                                          \
        for (const void* p_ : ptrs_)                                                  \
            if (!p_) return fail(UMF_E_NULL_ARGUMENT, "null argument");               \
    } while (0)

}  // namespace

extern "C" {

const char* umf_last_error(void) { return last_error.c_str(); }

const char* umf_status_name(umf_status status) {
    switch (status) {
        case UMF_OK: return "ok";
        case UMF_E_NULL_ARGUMENT: return "null argument";
        case UMF_E_FIELD_MISMATCH: return "field mismatch";
        case UMF_E_DIVISION_BY_ZERO: return "division by zero";
        case UMF_E_RING_MISMATCH: return "ring mismatch";
        case UMF_E_PARSE: return "parse error";
        case UMF_E_DIMENSION_MISMATCH: return "dimension mismatch";
        case UMF_E_POLE: return "pole";
        case UMF_E_NOT_CLOSED: return "not closed";
        case UMF_E_BUDGET_EXCEEDED: return "budget exceeded";
        case UMF_E_WINDOW_OVERFLOW: return "window overflow";
        case UMF_E_CRITICAL_DIRECTION: return "critical direction";
        case UMF_E_OVERFLOW: return "overflow";
        case UMF_E_INVALID_ARGUMENT: return "invalid argument";
        case UMF_E_INVARIANT: return "invariant violated";
        case UMF_E_IO: return "i/o error";
        case UMF_E_NOT_FACTORIZATION: return "not a factorization";
        case UMF_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void umf_string_free(char* s) { std::free(s); }

umf_status umf_ring_new(const char* field, const char* vars, const char* laurent, umf_ring** out) {
    UMF_REQUIRE(field, vars, out);
    return guarded([&] {
        const auto names = split_csv(vars);
        std::vector<bool> flags(names.size(), false);
        if (laurent) {
            const auto f = split_csv(laurent);
            if (f.size() != names.size())
                return fail(UMF_E_INVALID_ARGUMENT, "one laurent flag per variable expected");
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (f[i] != "0" && f[i] != "1") return fail(UMF_E_INVALID_ARGUMENT, "laurent flags must be 0 or 1");
                flags[i] = f[i] == "1";
            }
        }
        *out = new umf_ring{umf::Ring::make(umf::FieldSpec::parse(field), names, flags)};
        return UMF_OK;
    });
}

void umf_ring_free(umf_ring* ring) { delete ring; }

umf_status umf_poly_parse(const umf_ring* ring, const char* text, umf_poly** out) {
    UMF_REQUIRE(ring, text, out);
    return guarded([&] {
        *out = new umf_poly{umf::Poly::parse(text, ring->ring)};
        return UMF_OK;
    });
}

umf_status umf_poly_to_string(const umf_poly* poly, char** out) {
    UMF_REQUIRE(poly, out);
    return guarded([&] {
        *out = dup(poly->poly.to_string());
        return UMF_OK;
    });
}

void umf_poly_free(umf_poly* poly) { delete poly; }

umf_status umf_doc_parse(const char* text, umf_doc** out) {
    UMF_REQUIRE(text, out);
    return guarded([&] {
        *out = new umf_doc{umf::parse_mf(text)};
        return UMF_OK;
    });
}

umf_status umf_doc_load(const char* path, umf_doc** out) {
    UMF_REQUIRE(path, out);
    return guarded([&] {
        *out = new umf_doc{umf::load_mf(path)};
        return UMF_OK;
    });
}

umf_status umf_doc_format(const umf_doc* doc, char** out) {
    UMF_REQUIRE(doc, out);
    return guarded([&] {
        *out = dup(umf::format_mf(doc->doc));
        return UMF_OK;
    });
}

void umf_doc_free(umf_doc* doc) { delete doc; }

umf_status umf_doc_verify(const umf_doc* doc, umf_report** out) {
    UMF_REQUIRE(doc, out);
    return guarded([&] {
        umf::Report rep("verify");
        const auto& d = doc->doc;
        if (!d.matrix.is_square()) return fail(UMF_E_DIMENSION_MISMATCH, "factorization matrix must be square");
        const auto v = umf::verify_mf(d.matrix, d.potential);
        rep.check("Q^2=W*Id", v.ok, v.ok ? "Q² = W·Id: OK" : "Q² = W·Id: FAIL");
        rep.record("ok", v.ok ? "true" : "false");
        rep.record("residual_terms", static_cast<long long>(v.residual.term_count()));
        return emit(std::move(rep), out);
    });
}

umf_status umf_mf_from_doc(const umf_doc* doc, umf_mf** out) {
    UMF_REQUIRE(doc, out);
    return guarded([&] {
        const auto& d = doc->doc;
        if (!d.matrix.is_square()) return fail(UMF_E_DIMENSION_MISMATCH, "factorization matrix must be square");
        if (!umf::verify_mf(d.matrix, d.potential).ok) return fail(UMF_E_NOT_FACTORIZATION, "Q^2 != W*Id");
        *out = new umf_mf{umf::UngradedMF(d.potential, d.matrix)};
        return UMF_OK;
    });
}

umf_status umf_mf_rp2(const char* field, umf_mf** out) {
    UMF_REQUIRE(out);
    return guarded([&] {
        const auto spec = field ? umf::FieldSpec::parse(field) : umf::FieldSpec::gf2();
        *out = new umf_mf{umf::rp2_factorization(spec)};
        return UMF_OK;
    });
}

umf_status umf_mf_size(const umf_mf* mf, size_t* out) {
    UMF_REQUIRE(mf, out);
    *out = mf->mf.size();
    return UMF_OK;
}

umf_status umf_mf_format(const umf_mf* mf, char** out) {
    UMF_REQUIRE(mf, out);
    return guarded([&] {
        *out = dup(umf::format_mf(mf->mf));
        return UMF_OK;
    });
}

void umf_mf_free(umf_mf* mf) { delete mf; }

umf_status umf_mf_double(const umf_mf* mf, umf_mf** doubled, umf_report** out) {
    UMF_REQUIRE(mf, doubled, out);
    return guarded([&] {
        umf::Report rep("double");
        const auto d = umf::double_mf(mf->mf);
        auto f = umf::forget(d);
        const auto w = mf->mf.potential();
        const auto n = mf->mf.size();
        const auto id = umf::RingMatrix::identity(mf->mf.ring(), n);
        rep.check("q0q1", d.q0() * d.q1() == id.scaled(w), "Q0 Q1 = W Id");
        rep.check("q1q0", d.q1() * d.q0() == id.scaled(w), "Q1 Q0 = W Id");
        rep.check("forget", umf::verify_mf(f.matrix(), w).ok, "F(D(Q))^2 = W Id");
        rep.record("rank", static_cast<long long>(d.rank()));
        rep.record("size", static_cast<long long>(f.size()));
        *doubled = new umf_mf{std::move(f)};
        return emit(std::move(rep), out);
    });
}

umf_status umf_cohomology(const umf_mf* q, const umf_mf* r, int dmax, umf_report** out) {
    UMF_REQUIRE(q, r, out);
    return guarded([&] {
        if (dmax < 1) return fail(UMF_E_INVALID_ARGUMENT, "dmax must be positive");
        umf::Report rep("window cohomology");
        const auto h = umf::cohomology_dims(q->mf, r->mf, dmax);
        for (std::size_t d = 0; d < h.size(); ++d)
            rep.record("h[" + std::to_string(d + 1) + "]", static_cast<long long>(h[d]));
        return emit(std::move(rep), out);
    });
}

umf_status umf_jacobian(const umf_poly* potential, umf_report** out) {
    UMF_REQUIRE(potential, out);
    return guarded([&] { return emit(umf::jacobian_report(potential->poly), out); });
}

umf_status umf_reduce(const umf_doc* f, umf_report** out) {
    UMF_REQUIRE(f, out);
    return guarded([&] {
        const auto& d = f->doc;
        const umf::Rp2Context ctx(d.field);
        if (d.ring->vars() != ctx.ring()->vars() || d.ring->laurent_flags() != ctx.ring()->laurent_flags())
            return fail(UMF_E_RING_MISMATCH, "morphism must live over x,y laurent:1,1");
        if (d.potential != umf::Poly::parse(ctx.w().to_string(), d.ring))
            return fail(UMF_E_INVALID_ARGUMENT, "reduce needs potential x + y + x^-1*y^-1");
        // Re-read over the context's ring.
        const auto m = umf::RingMatrix::parse(d.matrix.to_string(), ctx.ring());
        const auto res = ctx.reduce_endomorphism(m);
        umf::Report rep("reduce");
        rep.check("witness", res.witness.reverify(), "delta(g) = f + alpha Id");
        rep.record("alpha", res.alpha.to_string());
        rep.record("witness_terms", static_cast<long long>(res.witness.g().term_count()));
        return emit(std::move(rep), out);
    });
}

umf_status umf_evaluate(const umf_mf* mf, const char* field, const char* point, umf_report** out) {
    UMF_REQUIRE(mf, field, point, out);
    return guarded([&] {
        const auto& ext = umf::Field::get(umf::FieldSpec::parse(field));
        std::vector<umf::FieldElem> p;
        for (auto s : split_csv(point)) {
            if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
            char* end = nullptr;
            const auto v = std::strtoul(s.c_str(), &end, 10);
            if (s.empty() || *end || v >= ext.order())
                return fail(UMF_E_PARSE, "bad field element '" + s + "' for " + ext.spec().to_string());
            p.push_back(ext.elem(static_cast<std::uint32_t>(v)));
        }
        const auto& q = mf->mf;
        if (p.size() != static_cast<std::size_t>(q.ring()->nvars()))
            return fail(UMF_E_DIMENSION_MISMATCH, "point needs one coordinate per variable");
        umf::Report rep("evaluate");
        rep.record("point", umf::point_to_string(p));
        int direction = -1;
        for (int v = 0; v < q.ring()->nvars() && direction < 0; ++v)
            if (!q.potential().partial(v).evaluate(p).is_zero()) direction = v;
        rep.record("critical", direction < 0 ? "true" : "false");
        const auto local = umf::certify_at_point(q, q, p, {umf::Morphism::identity(q)});
        rep.record("local_dim", static_cast<long long>(local.local_dim));
        if (direction >= 0) {
            umf::contract_at_noncritical(q, p, direction);
            rep.check("contraction", true, "Q(p)h + hQ(p) = Id via d/d" + q.ring()->var(direction));
            rep.check("acyclic", local.local_dim == 0, "local cohomology vanishes");
        } else {
            const auto& c = local.class_coordinates.front();
            const bool nonzero = std::any_of(c.begin(), c.end(), [](auto x) { return x != 0; });
            rep.check("id-nonexact", nonzero, "Id has a nonzero local class");
        }
        return emit(std::move(rep), out);
    });
}

umf_status umf_search(const umf_poly* potential, size_t size, const char* support, int budget_bits,
                      umf_report** out) {
    UMF_REQUIRE(potential, support, out);
    return guarded([&] {
        const auto& ring = potential->poly.ring();
        std::vector<umf::Monomial> mons;
        for (const auto& s : split_csv(support)) {
            const auto m = umf::Poly::parse(s, ring);
            if (m.size() != 1 || m.leading().coeff != 1)
                return fail(UMF_E_INVALID_ARGUMENT, "support entries must be monomials: '" + s + "'");
            mons.push_back(m.leading().mono);
        }
        umf::SearchOptions opt;
        opt.budget_bits = budget_bits;
        const auto found = umf::search_factorizations(potential->poly, size, mons, opt);
        umf::Report rep("search");
        bool all = true;
        for (std::size_t i = 0; i < found.size(); ++i) {
            all = all && umf::verify_mf(found[i], potential->poly).ok;
            auto text = found[i].to_string();
            while (!text.empty() && text.back() == '\n') text.pop_back();
            std::string row;
            for (char ch : text) row += ch == '\n' ? std::string("; ") : std::string(1, ch);
            text = row;
            rep.record("match[" + std::to_string(i) + "]", text);
        }
        rep.check("verified", all, std::to_string(found.size()) + " factorizations, all verified");
        rep.record("count", static_cast<long long>(found.size()));
        return emit(std::move(rep), out);
    });
}

umf_status umf_suite(uint64_t seed, const char* field, umf_report** out) {
    UMF_REQUIRE(out);
    return guarded([&] {
        const auto spec = field ? umf::FieldSpec::parse(field) : umf::FieldSpec::gf2();
        return emit(umf::run_suite(seed, spec), out);
    });
}

umf_status umf_report_ok(const umf_report* report, int* out) {
    UMF_REQUIRE(report, out);
    *out = report->report.ok() ? 1 : 0;
    return UMF_OK;
}

umf_status umf_report_counts(const umf_report* report, size_t* passed, size_t* failed) {
    UMF_REQUIRE(report, passed, failed);
    *passed = report->report.passed();
    *failed = report->report.failed();
    return UMF_OK;
}

umf_status umf_report_get(const umf_report* report, const char* key, char** out) {
    UMF_REQUIRE(report, key, out);
    return guarded([&] {
        for (const auto& [k, v] : report->report.records())
            if (k == key) {
                *out = dup(v);
                return UMF_OK;
            }
        return fail(UMF_E_INVALID_ARGUMENT, std::string("no record '") + key + "'");
    });
}

umf_status umf_report_render(const umf_report* report, umf_format format, char** out) {
    UMF_REQUIRE(report, out);
    return guarded([&] {
        *out = dup(report->report.render(format == UMF_FORMAT_RECORDS ? umf::Format::Records : umf::Format::Text));
        return UMF_OK;
    });
}

void umf_report_free(umf_report* report) { delete report; }

}  // extern "C"
