#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "umf/umf.h"

static int failures = 0;

#define EXPECT(cond)                                                         \
    do {                                                                     \
        if (!(cond)) {                                                       \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                      \
        }                                                                    \
    } while (0)

static const char* kRp2 =
    "field: 2^1\n"
    "ring: x,y laurent:1,1\n"
    "potential: x + y + x^-1*y^-1\n"
    "size: 4\n"
    "0, 1, 1, x^-1*y^-1\n"
    "y, 0, x^-1, 1\n"
    "x, y^-1, 0, 1\n"
    "1, x, y, 0\n";

static void test_ring_and_poly(void) {
    umf_ring* ring = NULL;
    umf_poly* p = NULL;
    char* s = NULL;
    EXPECT(umf_ring_new("2^2", "x,y", "1,0", &ring) == UMF_OK);
    EXPECT(umf_poly_parse(ring, "y + x^-1 + x^-1", &p) == UMF_OK);
    EXPECT(umf_poly_to_string(p, &s) == UMF_OK);
    EXPECT(s && strcmp(s, "y") == 0);
    umf_string_free(s);
    umf_poly_free(p);

    p = NULL;
    EXPECT(umf_poly_parse(ring, "y^-1", &p) == UMF_E_PARSE || p == NULL);
    EXPECT(strlen(umf_last_error()) > 0);
    umf_poly_free(p);
    umf_ring_free(ring);

    EXPECT(umf_ring_new("2^1", "x,y", "1", &ring) == UMF_E_INVALID_ARGUMENT);
    EXPECT(umf_ring_new(NULL, "x", NULL, &ring) == UMF_E_NULL_ARGUMENT);
}

static void test_documents(void) {
    umf_doc* doc = NULL;
    umf_report* rep = NULL;
    umf_mf* mf = NULL;
    char* text = NULL;
    int ok = 0;
    EXPECT(umf_doc_parse(kRp2, &doc) == UMF_OK);
    EXPECT(umf_doc_verify(doc, &rep) == UMF_OK);
    EXPECT(umf_report_ok(rep, &ok) == UMF_OK && ok == 1);
    EXPECT(umf_report_get(rep, "residual_terms", &text) == UMF_OK && strcmp(text, "0") == 0);
    umf_string_free(text);
    umf_report_free(rep);

    EXPECT(umf_doc_format(doc, &text) == UMF_OK);
    umf_doc* again = NULL;
    EXPECT(umf_doc_parse(text, &again) == UMF_OK);
    char* text2 = NULL;
    EXPECT(umf_doc_format(again, &text2) == UMF_OK);
    EXPECT(strcmp(text, text2) == 0);
    umf_string_free(text);
    umf_string_free(text2);
    umf_doc_free(again);

    EXPECT(umf_mf_from_doc(doc, &mf) == UMF_OK);
    size_t n = 0;
    EXPECT(umf_mf_size(mf, &n) == UMF_OK && n == 4);

    umf_mf* doubled = NULL;
    EXPECT(umf_mf_double(mf, &doubled, &rep) == UMF_OK);
    EXPECT(umf_mf_size(doubled, &n) == UMF_OK && n == 8);
    EXPECT(umf_report_ok(rep, &ok) == UMF_OK && ok == 1);
    umf_report_free(rep);
    umf_mf_free(doubled);

    EXPECT(umf_cohomology(mf, mf, 3, &rep) == UMF_OK);
    EXPECT(umf_report_get(rep, "h[3]", &text) == UMF_OK && strcmp(text, "3") == 0);
    umf_string_free(text);
    EXPECT(umf_report_get(rep, "h[9]", &text) == UMF_E_INVALID_ARGUMENT);
    umf_report_free(rep);

    EXPECT(umf_evaluate(mf, "2^2", "1,1", &rep) == UMF_OK);
    EXPECT(umf_report_get(rep, "critical", &text) == UMF_OK && strcmp(text, "true") == 0);
    umf_string_free(text);
    umf_report_free(rep);
    EXPECT(umf_evaluate(mf, "2^2", "1,9", &rep) == UMF_E_PARSE);
    EXPECT(umf_evaluate(mf, "2^2", "0,1", &rep) == UMF_E_POLE);
    umf_mf_free(mf);
    umf_doc_free(doc);

    /* Perturbed entry: parses, fails verification, refuses to become an MF. */
    const char* bad = "field: 2^1\nring: x laurent:0\npotential: x^2\nsize: 1\nx + 1\n";
    EXPECT(umf_doc_parse(bad, &doc) == UMF_OK);
    EXPECT(umf_doc_verify(doc, &rep) == UMF_OK);
    EXPECT(umf_report_ok(rep, &ok) == UMF_OK && ok == 0);
    umf_report_free(rep);
    EXPECT(umf_mf_from_doc(doc, &mf) == UMF_E_NOT_FACTORIZATION);
    umf_doc_free(doc);

    EXPECT(umf_doc_parse("field: 2^1\nring: x\n", &doc) == UMF_E_PARSE);
    EXPECT(strstr(umf_last_error(), "line") != NULL);
    EXPECT(umf_doc_load("/nonexistent/file.mf", &doc) == UMF_E_IO);
}

static void test_commands(void) {
    umf_ring* ring = NULL;
    umf_poly* w = NULL;
    umf_report* rep = NULL;
    char* text = NULL;
    EXPECT(umf_ring_new("2^1", "x,y", "1,1", &ring) == UMF_OK);
    EXPECT(umf_poly_parse(ring, "x + y + x^-1*y^-1", &w) == UMF_OK);
    EXPECT(umf_jacobian(w, &rep) == UMF_OK);
    EXPECT(umf_report_get(rep, "minpoly[x]", &text) == UMF_OK && strcmp(text, "x^3 + 1") == 0);
    umf_string_free(text);
    umf_report_free(rep);
    umf_poly_free(w);
    umf_ring_free(ring);

    EXPECT(umf_ring_new("2^1", "x,y", "0,0", &ring) == UMF_OK);
    EXPECT(umf_poly_parse(ring, "x^2 + y^2", &w) == UMF_OK);
    EXPECT(umf_search(w, 1, "x,y", 24, &rep) == UMF_OK);
    EXPECT(umf_report_get(rep, "count", &text) == UMF_OK && strcmp(text, "1") == 0);
    umf_string_free(text);
    EXPECT(umf_report_get(rep, "match[0]", &text) == UMF_OK && strcmp(text, "x + y") == 0);
    umf_string_free(text);
    umf_report_free(rep);
    EXPECT(umf_search(w, 3, "1,x,y", 24, &rep) == UMF_E_BUDGET_EXCEEDED);
    EXPECT(umf_search(w, 1, "x+y", 24, &rep) == UMF_E_INVALID_ARGUMENT);
    umf_poly_free(w);
    umf_ring_free(ring);

    umf_doc* f = NULL;
    const char* falpha =
        "field: 2^1\nring: x,y laurent:1,1\npotential: x + y + x^-1*y^-1\nsize: 4\n"
        "0, 0, 0, x^-1*y^-1\n0, 0, x^-1, 0\n0, y^-1, 0, 0\n1, 0, 0, 0\n";
    EXPECT(umf_doc_parse(falpha, &f) == UMF_OK);
    EXPECT(umf_reduce(f, &rep) == UMF_OK);
    EXPECT(umf_report_get(rep, "alpha", &text) == UMF_OK && strcmp(text, "x^2") == 0);
    umf_string_free(text);
    umf_report_free(rep);
    umf_doc_free(f);

    const char* open =
        "field: 2^1\nring: x,y laurent:1,1\npotential: x + y + x^-1*y^-1\nsize: 4\n"
        "1, 0, 0, 0\n0, 0, 0, 0\n0, 0, 0, 0\n0, 0, 0, 0\n";
    EXPECT(umf_doc_parse(open, &f) == UMF_OK);
    EXPECT(umf_reduce(f, &rep) == UMF_E_NOT_CLOSED);
    umf_doc_free(f);

    size_t passed = 0, failed = 0;
    EXPECT(umf_suite(7, "2^2", &rep) == UMF_OK);
    EXPECT(umf_report_counts(rep, &passed, &failed) == UMF_OK && failed == 0 && passed > 40);
    EXPECT(umf_report_render(rep, UMF_FORMAT_RECORDS, &text) == UMF_OK && strstr(text, "seed=7\n") != NULL);
    umf_string_free(text);
    umf_report_free(rep);

    EXPECT(strcmp(umf_status_name(UMF_E_NOT_CLOSED), "not closed") == 0);
    umf_report_free(NULL);
    umf_mf_free(NULL);
}

int main(void) {
    test_ring_and_poly();
    test_documents();
    test_commands();
    if (failures) {
        fprintf(stderr, "%d failure(s)\n", failures);
        return 1;
    }
    printf("C API: all checks passed\n");
    return 0;
}
