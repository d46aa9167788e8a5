#ifndef UMF_UMF_H
#define UMF_UMF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define UMF_API __declspec(dllexport)
#else
#define UMF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum umf_status {
    UMF_OK = 0,
    UMF_E_NULL_ARGUMENT,
    UMF_E_FIELD_MISMATCH,
    UMF_E_DIVISION_BY_ZERO,
    UMF_E_RING_MISMATCH,
    UMF_E_PARSE,
    UMF_E_DIMENSION_MISMATCH,
    UMF_E_POLE,
    UMF_E_NOT_CLOSED,
    UMF_E_BUDGET_EXCEEDED,
    UMF_E_WINDOW_OVERFLOW,
    UMF_E_CRITICAL_DIRECTION,
    UMF_E_OVERFLOW,
    UMF_E_INVALID_ARGUMENT,
    UMF_E_INVARIANT,
    UMF_E_IO,
    UMF_E_NOT_FACTORIZATION,
    UMF_E_INTERNAL
} umf_status;

typedef enum umf_format { UMF_FORMAT_TEXT = 0, UMF_FORMAT_RECORDS = 1 } umf_format;

/* Opaque handles. Each *_free accepts NULL. */
typedef struct umf_ring umf_ring;
typedef struct umf_poly umf_poly;
typedef struct umf_doc umf_doc; /* parsed MF file, not yet verified */
typedef struct umf_mf umf_mf;   /* verified factorization */
typedef struct umf_report umf_report;

/* Message for the last failing call on this thread; never NULL. */
UMF_API const char* umf_last_error(void);
UMF_API const char* umf_status_name(umf_status status);
/* Strings returned through char** out-parameters are released here. */
UMF_API void umf_string_free(char* s);

/* field: "2^k" or "2^k:bits"; vars: "x,y"; laurent: "1,1" or NULL for none. */
UMF_API umf_status umf_ring_new(const char* field, const char* vars, const char* laurent, umf_ring** out);
UMF_API void umf_ring_free(umf_ring* ring);

UMF_API umf_status umf_poly_parse(const umf_ring* ring, const char* text, umf_poly** out);
UMF_API umf_status umf_poly_to_string(const umf_poly* poly, char** out);
UMF_API void umf_poly_free(umf_poly* poly);

UMF_API umf_status umf_doc_parse(const char* text, umf_doc** out);
UMF_API umf_status umf_doc_load(const char* path, umf_doc** out);
/* Canonical text; parsing it again reproduces the document. */
UMF_API umf_status umf_doc_format(const umf_doc* doc, char** out);
UMF_API void umf_doc_free(umf_doc* doc);

/* Q^2 = W*Id check; fills ok and residual_terms records. */
UMF_API umf_status umf_doc_verify(const umf_doc* doc, umf_report** out);
/* Fails with UMF_E_NOT_FACTORIZATION when Q^2 != W*Id. */
UMF_API umf_status umf_mf_from_doc(const umf_doc* doc, umf_mf** out);
UMF_API umf_status umf_mf_rp2(const char* field, umf_mf** out);
UMF_API umf_status umf_mf_size(const umf_mf* mf, size_t* out);
UMF_API umf_status umf_mf_format(const umf_mf* mf, char** out);
UMF_API void umf_mf_free(umf_mf* mf);

/* forget(double(Q)) together with a report of the doubling invariants. */
UMF_API umf_status umf_mf_double(const umf_mf* mf, umf_mf** doubled, umf_report** out);

/* Window dimensions h[1..dmax] of Hom(q, r). */
UMF_API umf_status umf_cohomology(const umf_mf* q, const umf_mf* r, int dmax, umf_report** out);
UMF_API umf_status umf_jacobian(const umf_poly* potential, umf_report** out);
/* f is a 4x4 endomorphism of the RP^2 factorization over the document's field. */
UMF_API umf_status umf_reduce(const umf_doc* f, umf_report** out);
/* point: comma-separated elements of `field`, each "n" or "{n}". */
UMF_API umf_status umf_evaluate(const umf_mf* mf, const char* field, const char* point, umf_report** out);
/* support: comma-separated monomials, e.g. "x,y". */
UMF_API umf_status umf_search(const umf_poly* potential, size_t size, const char* support, int budget_bits,
                              umf_report** out);
UMF_API umf_status umf_suite(uint64_t seed, const char* field, umf_report** out);

UMF_API umf_status umf_report_ok(const umf_report* report, int* out);
UMF_API umf_status umf_report_counts(const umf_report* report, size_t* passed, size_t* failed);
/* Value of the first record with this key, or UMF_E_INVALID_ARGUMENT. */
UMF_API umf_status umf_report_get(const umf_report* report, const char* key, char** out);
UMF_API umf_status umf_report_render(const umf_report* report, umf_format format, char** out);
UMF_API void umf_report_free(umf_report* report);

#ifdef __cplusplus
}
#endif

#endif
