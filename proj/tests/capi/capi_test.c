#include "flatdeck/flatdeck.h"

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define CHECK(cond)                                                        \
    do {                                                                   \
        if (!(cond)) {                                                     \
            fprintf(stderr, "%s:%d: CHECK(%s) failed; last error: %s\n",   \
                    __FILE__, __LINE__, #cond, fd_last_error());           \
            ++failures;                                                    \
        }                                                                  \
    } while (0)

static int contains(const char* hay, const char* needle) { return hay && strstr(hay, needle) != NULL; }

static void test_corpus_and_reports(void) {
    fd_surface* s = NULL;
    char* r = NULL;
    CHECK(fd_corpus_surface("S1", 0, 0, &s) == FD_OK);
    CHECK(s != NULL);

    CHECK(fd_validate(s, &r) == FD_OK);
    CHECK(contains(r, "\"valid\": true"));
    fd_string_free(r);

    CHECK(fd_info(s, &r) == FD_OK);
    CHECK(contains(r, "\"genus\": 3"));
    CHECK(contains(r, "\"period_rank\": 6"));
    fd_string_free(r);

    CHECK(fd_classify(s, 0, 1, NULL, &r) == FD_OK);
    CHECK(contains(r, "\"model\": \"ThreeCyl_I\""));
    fd_string_free(r);

    CHECK(fd_decompose(s, 1, 0, NULL, &r) == FD_OK);
    CHECK(contains(r, "\"cylinder_count\": 1"));
    CHECK(contains(r, "\"width\": \"5\""));
    fd_string_free(r);

    int cyl = 1;
    int set[] = {1};
    CHECK(fd_portion(s, 0, 1, 2, 1, 0, set, 1, NULL, &r) == FD_OK);
    CHECK(contains(r, "\"portion\": \"1\""));
    fd_string_free(r);

    fd_surface* t = NULL;
    cyl = 2;
    CHECK(fd_deform(s, 0, 1, &cyl, 1, NULL, "2", NULL, &t) == FD_OK);
    CHECK(fd_decompose(t, 1, 0, NULL, &r) == FD_OK);
    CHECK(contains(r, "\"width\": \"6\""));
    fd_string_free(r);
    fd_surface_free(t);

    CHECK(fd_render_svg(s, 0, 1, NULL, &r) == FD_OK);
    CHECK(contains(r, "<svg"));
    fd_string_free(r);

    fd_surface_free(s);
}

static void test_round_trip(void) {
    fd_surface* s = NULL;
    fd_surface* back = NULL;
    char* a = NULL;
    char* b = NULL;
    CHECK(fd_corpus_surface("12gon", 0, 0, &s) == FD_OK);
    CHECK(fd_surface_to_json(s, &a) == FD_OK);
    CHECK(fd_surface_from_json(a, &back) == FD_OK);
    CHECK(fd_surface_to_json(back, &b) == FD_OK);
    CHECK(a && b && strcmp(a, b) == 0);
    fd_string_free(a);
    fd_string_free(b);
    fd_surface_free(back);
    fd_surface_free(s);
}

static void test_errors(void) {
    fd_surface* s = NULL;
    char* r = NULL;
    CHECK(fd_surface_from_json("{not json", &s) == FD_INVALID);
    CHECK(strlen(fd_last_error()) > 0);
    CHECK(fd_corpus_surface("no-such-surface", 0, 0, &s) == FD_USAGE);
    CHECK(fd_surface_read("/nonexistent/x.surf", &s) == FD_USAGE);

    /* a square whose sides are glued to the wrong partners */
    const char* bad =
        "{\"format\":\"flatdeck-surface/1\",\"field\":{\"d\":1},"
        "\"polygons\":[[[1,0],[0,1],[-1,0],[0,-1]]],"
        "\"gluings\":[[[0,0],[0,1]],[[0,2],[0,3]]]}";
    CHECK(fd_surface_from_json(bad, &s) == FD_OK);
    CHECK(fd_validate(s, &r) == FD_INVALID);
    CHECK(contains(r, "\"valid\": false"));
    fd_string_free(r);
    r = NULL;
    CHECK(fd_info(s, &r) == FD_INVALID);
    CHECK(r == NULL);
    fd_surface_free(s);

    CHECK(fd_corpus_surface("S1", 0, 0, &s) == FD_OK);
    CHECK(fd_decompose(s, 0, 0, NULL, &r) == FD_USAGE);
    /* non-primitive directions are normalized */
    CHECK(fd_decompose(s, 2, 4, NULL, &r) == FD_OK);
    CHECK(contains(r, "\"direction\": \"1,2\""));
    fd_string_free(r);
    int cyl = 9;
    fd_surface* t = NULL;
    CHECK(fd_deform(s, 0, 1, &cyl, 1, NULL, NULL, NULL, &t) == FD_USAGE);
    cyl = 1;
    CHECK(fd_deform(s, 0, 1, &cyl, 1, NULL, "0", NULL, &t) == FD_USAGE);
    CHECK(fd_deform(s, 0, 1, &cyl, 1, "x", NULL, NULL, &t) == FD_USAGE);
    /* a tiny budget cannot close any cylinder */
    CHECK(fd_decompose(s, 1, 0, "1/100", &r) == FD_INCONCLUSIVE);
    CHECK(contains(r, "\"status\": \"inconclusive\""));
    fd_string_free(r);
    fd_surface_free(s);
}

static void test_scan_jobs(void) {
    fd_surface* s = NULL;
    char* one = NULL;
    char* four = NULL;
    CHECK(fd_corpus_surface("S1", 0, 0, &s) == FD_OK);
    CHECK(fd_scan(s, 3, 1, NULL, &one) == FD_OK);
    CHECK(fd_scan(s, 3, 4, NULL, &four) == FD_OK);
    CHECK(one && four && strcmp(one, four) == 0);
    CHECK(contains(one, "\"max_cylinders\": 3"));
    fd_string_free(one);
    fd_string_free(four);
    fd_surface_free(s);
}

static void test_corpus_names(void) {
    char* names = NULL;
    CHECK(fd_corpus_names(&names) == FD_OK);
    CHECK(contains(names, "\"case3-after\""));
    fd_string_free(names);
    CHECK(strlen(fd_version()) > 0);
}

int main(void) {
    test_corpus_and_reports();
    test_round_trip();
    test_errors();
    test_scan_jobs();
    test_corpus_names();
    if (failures) {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return 1;
    }
    printf("capi_test: all checks passed\n");
    return 0;
}
