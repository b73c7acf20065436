#include <stdio.h>
#include "overpartition.h"

int main(void) {
    uint64_t count = 0;
    if (op_class_count("distinct", 10, &count) != OP_STATUS_OK) {
        fprintf(stderr, "count: %s\n", op_last_error());
        return 1;
    }
    printf("distinct(10) = %llu\n", (unsigned long long)count);

    char *image = NULL;
    if (op_bijection_apply("f", "14,13,5,4,2,1", false, &image) != OP_STATUS_OK) {
        fprintf(stderr, "bijection: %s\n", op_last_error());
        return 1;
    }
    printf("f(14,13,5,4,2,1) = %s\n", image);
    op_string_free(image);

    OpReport *report = NULL;
    if (op_verify("euler", 30, false, &report) != OP_STATUS_OK) {
        fprintf(stderr, "verify: %s\n", op_last_error());
        return 1;
    }
    printf("euler verdict = %d\n", (int)op_report_verdict(report));
    op_report_free(report);
    return 0;
}
