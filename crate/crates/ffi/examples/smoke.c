#include <stdio.h>
#include <string.h>

#include "euler_medians.h"

int main(void) {
    EmConstruction *c = NULL;
    EmTriangle *t = NULL;
    EmTriangle *d = NULL;
    uint64_t v[6];
    char buf[64];

    if (em_construct(2, 1, EM_ROUTE_RATIONAL_PIPELINE, &c) != EM_STATUS_OK) return 1;
    if (em_construction_triangle(c, &t) != EM_STATUS_OK) return 2;
    for (uint32_t i = 0; i < 6; i++) {
        if (em_triangle_get_u64(t, i, &v[i]) != EM_STATUS_OK) return 3;
    }
    if (em_construction_trace(c, EM_TRACE_FIELD_Q_RATIONAL, buf, sizeof buf, NULL) != EM_STATUS_OK) return 4;
    if (strcmp(buf, "-975/256") != 0) return 5;
    if (em_triangle_dual(t, &d) != EM_STATUS_OK) return 6;

    printf("%llu %llu %llu %llu %llu %llu\n", (unsigned long long)v[0], (unsigned long long)v[1],
           (unsigned long long)v[2], (unsigned long long)v[3], (unsigned long long)v[4],
           (unsigned long long)v[5]);

    em_triangle_free(d);
    em_triangle_free(t);
    em_construction_free(c);
    return 0;
}
