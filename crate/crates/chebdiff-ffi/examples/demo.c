/* Minimal C consumer: differentiate U_4 once, print the expansion as JSON,
 * evaluate it at 1/2, and release everything.
 *
 * Build (from the workspace root, after `cargo build -p chebdiff-ffi`):
 *   cc crates/chebdiff-ffi/examples/demo.c \
 *      -Icrates/chebdiff-ffi/include \
 *      target/debug/libchebdiff_ffi.a \
 *      -lpthread -ldl -lm -o demo
 */
#include <stdio.h>
#include <stdlib.h>

#include "chebdiff.h"

static void check(ChebdiffStatus status, const char *what) {
    if (status != CHEBDIFF_STATUS_OK) {
        fprintf(stderr, "%s failed with status %d\n", what, (int)status);
        exit(1);
    }
}

int main(void) {
    ChebdiffExpansion *deriv = NULL;
    char *json = NULL;
    char *value = NULL;

    check(chebdiff_u_derivative(4, 1, &deriv), "chebdiff_u_derivative");
    check(chebdiff_expansion_to_json(deriv, &json), "chebdiff_expansion_to_json");
    check(chebdiff_expansion_eval(deriv, "1/2", &value), "chebdiff_expansion_eval");

    printf("%s\n", json);
    printf("value at 1/2: %s\n", value);

    chebdiff_string_free(value);
    chebdiff_string_free(json);
    chebdiff_expansion_free(deriv);
    return 0;
}
