/* critscale — critical disturbance-scaling analysis for constrained linear
 * systems x+ = Ax + Bu + w, w in alpha*Wbar.
 *
 * C interface over the analysis core: opaque handles, integer status codes,
 * and a thread-local message for the last failure. All handles are created by
 * cs_*_compute/load functions and released with the matching cs_*_free; they
 * are immutable after creation and safe to read from multiple threads.
 */
#ifndef CRITSCALE_H
#define CRITSCALE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cs_status {
  CS_OK = 0,
  CS_ERR_INVALID_ARGUMENT = 1,
  CS_ERR_PARSE = 2,
  CS_ERR_NO_APPLICABLE_BLOCK = 3,
  CS_ERR_DIMENSION_UNSUPPORTED = 4,
  CS_ERR_NUMERICAL = 5,
  CS_ERR_UPPER_BOUND_NOT_EMPTY = 6,
  CS_ERR_STRUCTURE_REQUIRED = 7,
  CS_ERR_UNSUPPORTED = 8
} cs_status;

/* Message describing the most recent failure on this thread. */
const char *cs_last_error(void);

/* ---- configuration ---- */

typedef struct cs_config cs_config;

cs_status cs_config_load_file(const char *path, cs_config **out);
cs_status cs_config_load_string(const char *json_text, cs_config **out);
void cs_config_free(cs_config *config);

int cs_config_state_dim(const cs_config *config);
int cs_config_input_dim(const cs_config *config);
int64_t cs_config_k_max(const cs_config *config);
double cs_config_alpha_tol(const cs_config *config);
double cs_config_alpha_hi(const cs_config *config);

/* ---- spectral analysis ---- */

typedef struct cs_spectral cs_spectral;

enum { CS_BLOCK_REAL_POSITIVE = 0, CS_BLOCK_REAL_NEGATIVE = 1, CS_BLOCK_COMPLEX_PAIR = 2 };

typedef struct cs_block_info {
  int kind;        /* CS_BLOCK_* */
  double lambda;   /* real kinds */
  double rho;      /* complex kind */
  double theta;    /* complex kind, radians in (0, pi) */
  int size;        /* Jordan chain length (complex kind: the leading pair) */
  int has_rational_angle;
  int64_t angle_a, angle_b; /* theta = (a/b) pi when has_rational_angle */
  int64_t period;           /* M = 2b/gcd(a,2b); 0 when unknown */
} cs_block_info;

/* Support-table row: the values of h_X, h_{-BU}, h_Wbar at +-phi_{block,j}. */
typedef struct cs_direction_row {
  int block;
  int j;
  double hX_plus, hX_minus;
  double hBU_plus, hBU_minus;
  double hW_plus, hW_minus;
} cs_direction_row;

cs_status cs_spectral_compute(const cs_config *config, cs_spectral **out);
void cs_spectral_free(cs_spectral *spectral);
int cs_spectral_block_count(const cs_spectral *spectral);
cs_status cs_spectral_block(const cs_spectral *spectral, int index, cs_block_info *out);
/* Eigenvector phi_{block,j} (j is 1-based); buf must hold the state dimension. */
cs_status cs_spectral_eigenvector(const cs_spectral *spectral, int block, int j, double *buf,
                                  size_t buflen);
int cs_spectral_direction_count(const cs_spectral *spectral);
cs_status cs_spectral_direction(const cs_spectral *spectral, int index, cs_direction_row *out);

/* ---- closed-form bounds ---- */

typedef struct cs_bounds cs_bounds;

enum { CS_JUSTIFY_LIMIT_FORMULA = 0, CS_JUSTIFY_K1_VALUE = 1, CS_JUSTIFY_MIN_OVER_COMPUTED = 2 };

typedef struct cs_bound_row {
  int64_t k;
  int block;
  int theorem; /* 1, 3, 4 or 6 */
  double value_plus, value_minus, bar;
} cs_bound_row;

typedef struct cs_certificate {
  double alpha;
  int64_t k_star; /* -1: emptiness guaranteed only for k beyond every alpha' > alpha */
  int block;
  int theorem;
  int justification; /* CS_JUSTIFY_* */
  char direction[64];
} cs_certificate;

/* k_max <= 0 uses the config value. */
cs_status cs_bounds_compute(const cs_config *config, int64_t k_max, cs_bounds **out);
void cs_bounds_free(cs_bounds *bounds);
int64_t cs_bounds_row_count(const cs_bounds *bounds);
cs_status cs_bounds_row(const cs_bounds *bounds, int64_t index, cs_bound_row *out);
cs_status cs_bounds_certificate(const cs_bounds *bounds, cs_certificate *out);

/* ---- exact 2-D reachability oracle ---- */

typedef struct cs_oracle cs_oracle;

typedef struct cs_oracle_row {
  int64_t k;
  double alpha_star;
  /* per-theorem bounds at this k; NaN when the theorem does not apply */
  double t1, t3, t4, t6;
  char winner[4]; /* "T1".."T6" */
} cs_oracle_row;

/* Non-positive k_max / alpha_tol / alpha_hi fall back to the config values. */
cs_status cs_oracle_sweep(const cs_config *config, int64_t k_max, double alpha_tol,
                          double alpha_hi, cs_oracle **out);
void cs_oracle_free(cs_oracle *oracle);
int64_t cs_oracle_row_count(const cs_oracle *oracle);
cs_status cs_oracle_get_row(const cs_oracle *oracle, int64_t index, cs_oracle_row *out);

/* ---- adversarial disturbance synthesis ---- */

typedef struct cs_attack cs_attack;

typedef struct cs_attack_step {
  int64_t k;
  double xi, omega, upsilon;
  int in_x;
} cs_attack_step;

/* defender: "projected-worst-case", "zero" or "saturating-feedback".
 * x0 has length n (may be NULL for the origin). block selects a real-eigenvalue
 * Jordan block (0-based). max_steps <= 0 chooses the default budget. */
cs_status cs_attack_run(const cs_config *config, double alpha, const double *x0, size_t x0_len,
                        int block, const char *defender, int64_t max_steps, cs_attack **out);
void cs_attack_free(cs_attack *attack);
int64_t cs_attack_step_count(const cs_attack *attack);
/* Fills the scalar fields; x/u/w receive the state, input and disturbance when
 * non-NULL (lengths must match the system dimensions). */
cs_status cs_attack_get_step(const cs_attack *attack, int64_t index, cs_attack_step *out, double *x,
                         size_t x_len, double *u, size_t u_len, double *w, size_t w_len);
int64_t cs_attack_exit_step(const cs_attack *attack);      /* -1: no exit */
int64_t cs_attack_first_out_of_x(const cs_attack *attack); /* -1: never left X */

/* True (1) iff -BU is contained in alpha*Wbar (the input-nulling strategy
 * w = -Bu is admissible). */
cs_status cs_dos_feasible(const cs_config *config, double alpha, int *out);

#ifdef __cplusplus
}
#endif

#endif /* CRITSCALE_H */
