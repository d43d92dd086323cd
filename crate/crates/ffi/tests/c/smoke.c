#include <stdio.h>
#include <string.h>
#include "strong_isotropy.h"

int main(void) {
    SiEngine *engine = si_engine_new();
    char *response = NULL;
    SiStatus s = si_run_json(engine,
        "{\"command\":\"simple\",\"payload\":{\"type\":\"A-inner\",\"m\":6,\"ind_d\":1,\"d\":2}}",
        &response);
    if (s != SI_STATUS_OK || strstr(response, "\"strongly_isotropic\":true") == NULL) {
        return 1;
    }
    si_string_free(response);

    SiQuadraticForm *q = NULL;
    bool iso = true;
    if (si_qform_parse("1,1,1", &q) != SI_STATUS_OK || si_qform_is_isotropic(q, &iso) != SI_STATUS_OK || iso) {
        return 2;
    }
    si_qform_free(q);

    int8_t symbol = 0;
    if (si_hilbert_symbol(-1, -1, "2", &symbol) != SI_STATUS_OK || symbol != -1) {
        return 3;
    }
    si_engine_free(engine);
    printf("ok %s\n", si_version());
    return 0;
}
