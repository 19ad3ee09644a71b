#include <stdio.h>
#include <string.h>

#include "qylag.h"

static int fail(const char *what) {
    fprintf(stderr, "client: %s\n", what);
    return 1;
}

int main(void) {
    QylagPoly *p = NULL;
    char *text = NULL;

    if (qylag_laguerre(1, 0, false, &p) != QYLAG_STATUS_OK) return fail("laguerre");
    if (qylag_poly_to_string(p, QYLAG_FORMAT_PLAIN, &text) != QYLAG_STATUS_OK) return fail("render");
    if (strcmp(text, "x - y") != 0) return fail(text);
    qylag_string_free(text);
    qylag_poly_free(p);

    if (qylag_moment(3, 0, true, &p) != QYLAG_STATUS_OK) return fail("moment");
    if (qylag_poly_num_terms(p) != 5) return fail("moment terms");
    qylag_poly_free(p);

    if (qylag_laguerre(2, -2, false, &p) != QYLAG_STATUS_INVALID_ARGUMENT) return fail("alpha check");

    unsigned passed = 0, total = 0;
    if (qylag_verify("biane", 4, 0, &passed, &total) != QYLAG_STATUS_OK) return fail("verify");
    if (passed != total || total == 0) return fail("verify counts");
    if (qylag_verify("nope", -1, 0, NULL, NULL) != QYLAG_STATUS_UNKNOWN_IDENTITY) return fail("unknown");

    printf("%s\n", qylag_status_message(QYLAG_STATUS_OK));
    return 0;
}
