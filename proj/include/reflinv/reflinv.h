/* C interface to the reflection-group invariant library.
 *
 * All functions returning rf_status produce RF_OK on success; on failure a
 * malloc'd message is stored in *err_out (when non-NULL), to be released with
 * rf_string_free.  JSON results are likewise malloc'd strings owned by the
 * caller.  Group handles are opaque and must be destroyed with
 * rf_group_destroy.
 */
#ifndef REFLINV_H
#define REFLINV_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  RF_OK = 0,
  RF_ERR_INTERNAL = 1,
  RF_ERR_SPEC = 2,
  RF_ERR_RESOURCE = 3,
  RF_ERR_INAPPLICABLE = 5
} rf_status;

typedef struct rf_group rf_group;

/* spec_json: {"family":"cyclic","h":5} | {"family":"monomial","r":4,"p":2,"ell":3}
 * | {"family":"generic","zeta_order":n,"generators":[[[{"order":n,"coeffs":[["num","den"],...]},...],...],...]}
 * with an optional "max_order" cap. */
rf_status rf_group_create(const char* spec_json, rf_group** out, char** err_out);
void rf_group_destroy(rf_group* g);

/* rank, order, N, N*, exponents, coexponents, h, duality flag, deg J, deg Q */
rf_status rf_group_summary(rf_group* g, char** json_out, char** err_out);

/* options_json: {"theorem":"auto|main|ranktwo|monomial|generation",
 *                "m": -1 for all,
 *                "mode":"auto|exact|prob", "trials":8, "seed":0,
 *                "basis":[{"I":[1,3],"k":2,"d":false},...]}   (optional) */
rf_status rf_verify(rf_group* g, const char* options_json, char** json_out, char** err_out);

/* degree sums by Molien quotient, Opdam local data, and the closed form */
rf_status rf_delta(rf_group* g, const char* rep, long trunc, char** json_out, char** err_out);

/* Hilbert series coefficients of (S (x) U)^W up to the truncation */
rf_status rf_molien(rf_group* g, const char* rep, long trunc, char** json_out, char** err_out);

/* trivariate series with both reciprocity verdicts; chi = det^k when has_chi */
rf_status rf_tau(rf_group* g, long trunc, int has_chi, long chi_det_power, char** json_out,
                 char** err_out);

void rf_string_free(char* s);
const char* rf_version(void);

#ifdef __cplusplus
}
#endif

#endif
