#include "critscale.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "analysis.hpp"

using namespace critscale;

namespace {

thread_local std::string g_last_error;

cs_status status_from(const Error& e) {
  g_last_error = std::string(error_code_name(e.code())) + ": " + e.what();
  switch (e.code()) {
    case ErrorCode::ParseError:
      return CS_ERR_PARSE;
    case ErrorCode::NoApplicableBlock:
      return CS_ERR_NO_APPLICABLE_BLOCK;
    case ErrorCode::DimensionUnsupported:
      return CS_ERR_DIMENSION_UNSUPPORTED;
    case ErrorCode::UpperBoundNotEmpty:
      return CS_ERR_UPPER_BOUND_NOT_EMPTY;
    case ErrorCode::StructureRequired:
      return CS_ERR_STRUCTURE_REQUIRED;
    case ErrorCode::NumericalFailure:
    case ErrorCode::MonotonicityViolation:
    case ErrorCode::ComplexityCap:
    case ErrorCode::ResidualTooLarge:
      return CS_ERR_NUMERICAL;
    case ErrorCode::UnsupportedSize:
    case ErrorCode::IrrationalAngle:
    case ErrorCode::ZeroEigenvalueUnsupported:
    case ErrorCode::WrongBlockKind:
      return CS_ERR_UNSUPPORTED;
    default:
      return CS_ERR_INVALID_ARGUMENT;
  }
}

template <typename F>
cs_status guarded(F&& f) {
  try {
    f();
    return CS_OK;
  } catch (const Error& e) {
    return status_from(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CS_ERR_NUMERICAL;
  }
}

}  // namespace

struct cs_config {
  AnalysisConfig cfg;
};

struct cs_spectral {
  SpectralReport report;
};

struct cs_bounds {
  BoundTable table;
};

struct cs_oracle {
  OracleReport report;
};

struct cs_attack {
  AttackTrace trace;
  int n = 0, m = 0;
};

extern "C" {

const char* cs_last_error(void) { return g_last_error.c_str(); }

cs_status cs_config_load_file(const char* path, cs_config** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return CS_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new cs_config{load_config(path)}; });
}

cs_status cs_config_load_string(const char* json_text, cs_config** out) {
  if (!json_text || !out) {
    g_last_error = "null argument";
    return CS_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new cs_config{parse_config(json_text)}; });
}

void cs_config_free(cs_config* config) { delete config; }

int cs_config_state_dim(const cs_config* c) { return c ? c->cfg.system.n() : 0; }
int cs_config_input_dim(const cs_config* c) { return c ? c->cfg.system.m() : 0; }
int64_t cs_config_k_max(const cs_config* c) { return c ? c->cfg.k_max : 0; }
double cs_config_alpha_tol(const cs_config* c) { return c ? c->cfg.alpha_tol : 0; }
double cs_config_alpha_hi(const cs_config* c) { return c ? c->cfg.alpha_hi : 0; }

cs_status cs_spectral_compute(const cs_config* config, cs_spectral** out) {
  if (!config || !out) {
    g_last_error = "null argument";
    return CS_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    *out = new cs_spectral{spectral_report(config->cfg.system, config->cfg.declared())};
  });
}

void cs_spectral_free(cs_spectral* s) { delete s; }

int cs_spectral_block_count(const cs_spectral* s) {
  return s ? static_cast<int>(s->report.eig.blocks.size()) : 0;
}

cs_status cs_spectral_block(const cs_spectral* s, int index, cs_block_info* out) {
  if (!s || !out || index < 0 || index >= cs_spectral_block_count(s)) {
    g_last_error = "bad block index";
    return CS_ERR_INVALID_ARGUMENT;
  }
  const JordanBlock& b = s->report.eig.blocks[static_cast<size_t>(index)];
  out->kind = b.kind == BlockKind::RealPositive   ? CS_BLOCK_REAL_POSITIVE
              : b.kind == BlockKind::RealNegative ? CS_BLOCK_REAL_NEGATIVE
                                                  : CS_BLOCK_COMPLEX_PAIR;
  out->lambda = b.lambda;
  out->rho = b.rho;
  out->theta = b.theta;
  out->size = b.size;
  out->has_rational_angle = b.angle_rational ? 1 : 0;
  out->angle_a = b.angle_rational ? b.angle_rational->a : 0;
  out->angle_b = b.angle_rational ? b.angle_rational->b : 0;
  out->period = b.period ? *b.period : 0;
  return CS_OK;
}

cs_status cs_spectral_eigenvector(const cs_spectral* s, int block, int j, double* buf,
                                  size_t buflen) {
  if (!s || !buf || block < 0 || block >= cs_spectral_block_count(s)) {
    g_last_error = "bad block index";
    return CS_ERR_INVALID_ARGUMENT;
  }
  const JordanBlock& b = s->report.eig.blocks[static_cast<size_t>(block)];
  if (j < 1 || j > static_cast<int>(b.phi.size())) {
    g_last_error = "bad eigenvector index";
    return CS_ERR_INVALID_ARGUMENT;
  }
  const Vec& v = b.phi[static_cast<size_t>(j - 1)];
  if (buflen < static_cast<size_t>(v.size())) {
    g_last_error = "buffer too small";
    return CS_ERR_INVALID_ARGUMENT;
  }
  for (int i = 0; i < v.size(); ++i) buf[i] = v(i);
  return CS_OK;
}

int cs_spectral_direction_count(const cs_spectral* s) {
  return s ? static_cast<int>(s->report.rows.size()) : 0;
}

cs_status cs_spectral_direction(const cs_spectral* s, int index, cs_direction_row* out) {
  if (!s || !out || index < 0 || index >= cs_spectral_direction_count(s)) {
    g_last_error = "bad direction index";
    return CS_ERR_INVALID_ARGUMENT;
  }
  const DirectionRow& r = s->report.rows[static_cast<size_t>(index)];
  out->block = r.block;
  out->j = r.j;
  out->hX_plus = r.hX_plus;
  out->hX_minus = r.hX_minus;
  out->hBU_plus = r.hBU_plus;
  out->hBU_minus = r.hBU_minus;
  out->hW_plus = r.hW_plus;
  out->hW_minus = r.hW_minus;
  return CS_OK;
}

cs_status cs_bounds_compute(const cs_config* config, int64_t k_max, cs_bounds** out) {
  if (!config || !out) {
    g_last_error = "null argument";
    return CS_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const std::int64_t k = k_max > 0 ? k_max : config->cfg.k_max;
    const SpectralDecomposition eig =
        decompose(config->cfg.system.A(), config->cfg.declared());
    *out = new cs_bounds{best_bound(config->cfg.system, eig, k)};
  });
}

void cs_bounds_free(cs_bounds* b) { delete b; }

int64_t cs_bounds_row_count(const cs_bounds* b) {
  return b ? static_cast<int64_t>(b->table.rows.size()) : 0;
}

cs_status cs_bounds_row(const cs_bounds* b, int64_t index, cs_bound_row* out) {
  if (!b || !out || index < 0 || index >= cs_bounds_row_count(b)) {
    g_last_error = "bad row index";
    return CS_ERR_INVALID_ARGUMENT;
  }
  const BoundRow& r = b->table.rows[static_cast<size_t>(index)];
  out->k = r.k;
  out->block = r.block;
  out->theorem = theorem_number(r.theorem);
  out->value_plus = r.value_plus;
  out->value_minus = r.value_minus;
  out->bar = r.bar;
  return CS_OK;
}

cs_status cs_bounds_certificate(const cs_bounds* b, cs_certificate* out) {
  if (!b || !out) {
    g_last_error = "null argument";
    return CS_ERR_INVALID_ARGUMENT;
  }
  const AlphaCertificate& c = b->table.certificate;
  out->alpha = c.alpha;
  out->k_star = c.k_star ? *c.k_star : -1;
  out->block = c.block;
  out->theorem = theorem_number(c.theorem);
  out->justification = c.justification == InfJustification::LimitFormula ? CS_JUSTIFY_LIMIT_FORMULA
                       : c.justification == InfJustification::K1Value    ? CS_JUSTIFY_K1_VALUE
                                                                         : CS_JUSTIFY_MIN_OVER_COMPUTED;
  std::snprintf(out->direction, sizeof(out->direction), "%s", c.direction.c_str());
  return CS_OK;
}

cs_status cs_oracle_sweep(const cs_config* config, int64_t k_max, double alpha_tol,
                          double alpha_hi, cs_oracle** out) {
  if (!config || !out) {
    g_last_error = "null argument";
    return CS_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const std::int64_t k = k_max > 0 ? k_max : config->cfg.k_max;
    const double tol = alpha_tol > 0 ? alpha_tol : config->cfg.alpha_tol;
    const double hi = alpha_hi > 0 ? alpha_hi : config->cfg.alpha_hi;
    const SpectralDecomposition eig =
        decompose(config->cfg.system.A(), config->cfg.declared());
    *out = new cs_oracle{oracle_report(config->cfg.system, eig, k, tol, hi)};
  });
}

void cs_oracle_free(cs_oracle* o) { delete o; }

int64_t cs_oracle_row_count(const cs_oracle* o) {
  return o ? static_cast<int64_t>(o->report.rows.size()) : 0;
}

cs_status cs_oracle_get_row(const cs_oracle* o, int64_t index, cs_oracle_row* out) {
  if (!o || !out || index < 0 || index >= cs_oracle_row_count(o)) {
    g_last_error = "bad row index";
    return CS_ERR_INVALID_ARGUMENT;
  }
  const OracleRow& r = o->report.rows[static_cast<size_t>(index)];
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out->k = r.k;
  out->alpha_star = r.alpha_star;
  out->t1 = r.t1.value_or(nan);
  out->t3 = r.t3.value_or(nan);
  out->t4 = r.t4.value_or(nan);
  out->t6 = r.t6.value_or(nan);
  std::snprintf(out->winner, sizeof(out->winner), "%s", r.winner.c_str());
  return CS_OK;
}

cs_status cs_attack_run(const cs_config* config, double alpha, const double* x0, size_t x0_len,
                        int block, const char* defender, int64_t max_steps, cs_attack** out) {
  if (!config || !out || !defender) {
    g_last_error = "null argument";
    return CS_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const LinearSystem& sys = config->cfg.system;
    Vec start = Vec::Zero(sys.n());
    if (x0) {
      if (x0_len != static_cast<size_t>(sys.n()))
        throw Error(ErrorCode::DimensionMismatch, "attack: x0 length != n");
      for (int i = 0; i < sys.n(); ++i) start(i) = x0[i];
    }
    const SpectralDecomposition eig = decompose(sys.A(), config->cfg.declared());
    const Defender d = defender_by_name(defender);
    std::int64_t steps = max_steps;
    if (steps <= 0) {
      const ProjectedSystem p = project(sys, eig, block, alpha);
      steps = default_max_steps(p, p.phi.dot(start));
    }
    *out = new cs_attack{simulate_fullstate(sys, eig, block, alpha, start, steps, d), sys.n(),
                         sys.m()};
  });
}

void cs_attack_free(cs_attack* a) { delete a; }

int64_t cs_attack_step_count(const cs_attack* a) {
  return a ? static_cast<int64_t>(a->trace.steps.size()) : 0;
}

cs_status cs_attack_get_step(const cs_attack* a, int64_t index, cs_attack_step* out, double* x,
                         size_t x_len, double* u, size_t u_len, double* w, size_t w_len) {
  if (!a || !out || index < 0 || index >= cs_attack_step_count(a)) {
    g_last_error = "bad step index";
    return CS_ERR_INVALID_ARGUMENT;
  }
  const AttackTrace::Step& s = a->trace.steps[static_cast<size_t>(index)];
  out->k = s.k;
  out->xi = s.xi;
  out->omega = s.omega;
  out->upsilon = s.upsilon;
  out->in_x = s.in_X ? 1 : 0;
  auto fill = [&](double* dst, size_t len, const Vec& src) {
    if (!dst) return true;
    if (len < static_cast<size_t>(src.size())) return false;
    for (int i = 0; i < src.size(); ++i) dst[i] = src(i);
    return true;
  };
  if (!fill(x, x_len, s.x) || !fill(u, u_len, s.u) || !fill(w, w_len, s.w)) {
    g_last_error = "buffer too small";
    return CS_ERR_INVALID_ARGUMENT;
  }
  return CS_OK;
}

int64_t cs_attack_exit_step(const cs_attack* a) {
  return a && a->trace.exit_step ? *a->trace.exit_step : -1;
}

int64_t cs_attack_first_out_of_x(const cs_attack* a) {
  return a && a->trace.first_out_of_X ? *a->trace.first_out_of_X : -1;
}

cs_status cs_dos_feasible(const cs_config* config, double alpha, int* out) {
  if (!config || !out) {
    g_last_error = "null argument";
    return CS_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = dos_feasible(config->cfg.system, alpha) ? 1 : 0; });
}

}  // extern "C"
