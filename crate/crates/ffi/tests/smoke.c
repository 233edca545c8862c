#include <stdio.h>
#include <string.h>
#include "hoopforge.h"

#define CHECK(call, want)                                                   \
    do {                                                                    \
        HfStatus s_ = (call);                                               \
        if (s_ != (want)) {                                                 \
            fprintf(stderr, "%s: status %d (%s)\n", #call, (int)s_,         \
                    hf_last_error() ? hf_last_error() : "");                \
            return 1;                                                       \
        }                                                                   \
    } while (0)

int main(void) {
    HfHoop *g3 = NULL;
    HfExtension *e = NULL;
    HfAction *act = NULL;
    HfClassification c;
    bool strong = false;
    size_t f = 0, g = 0;

    CHECK(hf_hoop_chain(3, true, &g3), HF_STATUS_OK);
    CHECK(hf_hoop_classify(g3, &c), HF_STATUS_OK);
    if (!c.godel || c.wajsberg) return 2;

    CHECK(hf_extension_decompose(g3, &e), HF_STATUS_OK);
    CHECK(hf_extension_is_strong(e, &strong), HF_STATUS_OK);
    if (!strong) return 3;
    CHECK(hf_extension_action(e, &act), HF_STATUS_OK);
    CHECK(hf_action_apply(act, 0, 0, &f, &g), HF_STATUS_OK);
    CHECK(hf_action_apply(act, 7, 0, &f, &g), HF_STATUS_OUT_OF_RANGE);

    hf_action_free(act);
    hf_extension_free(e);
    hf_hoop_free(g3);
    printf("ok %s\n", hf_version());
    return 0;
}
