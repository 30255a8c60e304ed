#include <stdio.h>
#include <string.h>

#include "strata_atlas.h"

int main(void) {
    SaSession *session = NULL;
    if (sa_session_new(2, "0,1", &session) != SA_STATUS_OK) {
        fprintf(stderr, "open: %s\n", sa_last_error_message());
        return 1;
    }
    SaCounts counts;
    if (sa_session_counts(session, &counts) != SA_STATUS_OK) {
        return 2;
    }
    char *summary = NULL;
    if (sa_session_render(session, "summary", NULL, &summary) != SA_STATUS_OK) {
        return 3;
    }
    printf("%zu %zu %zu %zu %llu\n%s", counts.admissible, counts.ekor, counts.kr, counts.newton,
           (unsigned long long)counts.components, summary);
    sa_string_free(summary);
    sa_session_free(session);

    if (sa_session_new(2, "9", &session) != SA_STATUS_INVALID_ARGUMENT || session != NULL) {
        return 4;
    }
    printf("error: %s\n", sa_last_error_message());
    return 0;
}
