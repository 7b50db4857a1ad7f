#include <math.h>
#include <stdio.h>
#include <string.h>
#include "ifjs.h"

static int fail(const char *what) {
    fprintf(stderr, "%s: %s\n", what, ifjs_last_error());
    return 1;
}

int main(void) {
    double d;
    if (ifjs_js_norm(1.0, 0.0, 0.0, 1.0, &d) != IFJS_STATUS_OK || d != 1.0)
        return fail("js_norm");

    if (ifjs_js_norm(0.7, 0.7, 0.0, 0.0, &d) != IFJS_STATUS_INVALID_ARGUMENT)
        return fail("simplex check");
    if (strlen(ifjs_last_error()) == 0)
        return fail("empty message");

    IfjsDataset *ds = NULL;
    if (ifjs_dataset_load("tableIII", &ds) != IFJS_STATUS_OK)
        return fail("load");
    IfjsIfs *p3 = NULL, *s1 = NULL;
    if (ifjs_dataset_get(ds, "P3", &p3) != IFJS_STATUS_OK ||
        ifjs_dataset_get(ds, "S1", &s1) != IFJS_STATUS_OK)
        return fail("get");
    if (ifjs_measure("wu", NAN, NAN, p3, s1, NULL, &d) != IFJS_STATUS_OK)
        return fail("measure");
    printf("wu(P3, S1) = %.17g\n", d);

    ifjs_ifs_free(p3);
    ifjs_ifs_free(s1);
    ifjs_dataset_free(ds);

    int passed = 0;
    if (ifjs_run_scenario("ex1-crossing", &passed) != IFJS_STATUS_OK || !passed)
        return fail("scenario");
    return 0;
}
