#ifndef FLATDECK_H
#define FLATDECK_H

/* flatdeck: exact translation surfaces, cylinder decompositions of H(4).
 *
 * Every function returns an fd_status.  On anything but FD_OK (and the
 * negative-but-complete results documented per call) fd_last_error() holds a
 * message for the calling thread.  Strings handed out by the library are
 * freed with fd_string_free, surfaces with fd_surface_free.
 *
 * Scalars cross the boundary as text: "p/q" for rationals.  Budgets are
 * trace lengths in the same format; NULL selects the default.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(FLATDECK_BUILDING)
#define FLATDECK_API __attribute__((visibility("default")))
#else
#define FLATDECK_API
#endif

typedef enum fd_status {
    FD_OK = 0,
    FD_INVALID = 1,      /* invalid surface, malformed document, precondition */
    FD_INCONCLUSIVE = 2, /* budget exhausted before a certificate */
    FD_USAGE = 3,        /* bad argument: index, direction, number text */
    FD_INTERNAL = 4
} fd_status;

typedef struct fd_surface fd_surface;

FLATDECK_API const char* fd_version(void);
FLATDECK_API const char* fd_last_error(void);
FLATDECK_API void fd_string_free(char* s);
FLATDECK_API void fd_surface_free(fd_surface* s);

/* Loading does not validate; see fd_validate. */
FLATDECK_API fd_status fd_surface_from_json(const char* text, fd_surface** out);
FLATDECK_API fd_status fd_surface_read(const char* path, fd_surface** out);
FLATDECK_API fd_status fd_surface_write(const fd_surface* s, const char* path);
FLATDECK_API fd_status fd_surface_to_json(const fd_surface* s, char** out);

/* Named corpus surfaces; seed is used when has_seed is nonzero. */
FLATDECK_API fd_status fd_corpus_surface(const char* name, int has_seed, uint64_t seed, fd_surface** out);
FLATDECK_API fd_status fd_corpus_names(char** json_out);

/* Reports are JSON objects.  fd_validate returns FD_INVALID (with a report)
 * for an invalid surface. */
FLATDECK_API fd_status fd_validate(const fd_surface* s, char** report);
FLATDECK_API fd_status fd_info(const fd_surface* s, char** report);
FLATDECK_API fd_status fd_homology(const fd_surface* s, char** report);

/* Direction (p, q), not both zero.  A certified non-periodic direction is a
 * complete answer (FD_OK, status "not_periodic"); budget exhaustion gives
 * FD_INCONCLUSIVE together with a report. */
FLATDECK_API fd_status fd_decompose(const fd_surface* s, long p, long q, const char* budget, char** report);
FLATDECK_API fd_status fd_classify(const fd_surface* s, long p, long q, const char* budget, char** report);

/* Primitive directions with |p|, |q| <= max_slope over `jobs` threads.
 * FD_INCONCLUSIVE when any direction stayed undecided. */
FLATDECK_API fd_status fd_scan(const fd_surface* s, int max_slope, int jobs, const char* budget, char** report);

/* Cylinder indices are 1-based in decomposition order.  shear and stretch
 * are rational text; NULL means 0 and 1. */
FLATDECK_API fd_status fd_deform(const fd_surface* s, long p, long q, const int* cylinders, size_t count,
                                 const char* shear, const char* stretch, const char* budget, fd_surface** out);

/* Area portion of cylinder `cylinder` (direction (p, q)) covered by the
 * listed cylinders of direction (p2, q2). */
FLATDECK_API fd_status fd_portion(const fd_surface* s, long p, long q, int cylinder, long p2, long q2,
                                  const int* set, size_t count, const char* budget, char** report);

FLATDECK_API fd_status fd_render_svg(const fd_surface* s, long p, long q, const char* budget, char** svg);

#ifdef __cplusplus
}
#endif

#endif
