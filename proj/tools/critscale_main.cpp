// critscale CLI: batch front-end over the C API. Emits full-precision CSV so
// downstream plotting reproduces the curves without re-rounding.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "critscale.h"

namespace {

// exit codes: 0 ok, 2 config, 3 no applicable bound, 4 unsupported, 5 numerical
int exit_code_for(cs_status s) {
  switch (s) {
    case CS_OK: return 0;
    case CS_ERR_PARSE:
    case CS_ERR_INVALID_ARGUMENT:
    case CS_ERR_STRUCTURE_REQUIRED: return 2;
    case CS_ERR_NO_APPLICABLE_BLOCK: return 3;
    case CS_ERR_DIMENSION_UNSUPPORTED:
    case CS_ERR_UNSUPPORTED: return 4;
    default: return 5;
  }
}

int fail(cs_status s) {
  std::cerr << "error: " << cs_last_error() << "\n";
  return exit_code_for(s);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_opt(double v) { return std::isnan(v) ? std::string() : fmt(v); }

struct OutStream {
  std::ofstream file;
  bool to_file = false;
  std::ostream& get() { return to_file ? file : std::cout; }
};

bool open_out(OutStream& out, const std::string& path) {
  if (path.empty()) return true;
  out.file.open(path);
  out.to_file = true;
  if (!out.file) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return false;
  }
  return true;
}

const char* kind_name(int kind) {
  switch (kind) {
    case CS_BLOCK_REAL_POSITIVE: return "real+";
    case CS_BLOCK_REAL_NEGATIVE: return "real-";
    default: return "complex";
  }
}

const char* justification_name(int j) {
  switch (j) {
    case CS_JUSTIFY_LIMIT_FORMULA: return "LimitFormula";
    case CS_JUSTIFY_K1_VALUE: return "K1Value";
    default: return "MinOverComputed";
  }
}

int run_spectral(const cs_config* cfg, const std::string& out_path) {
  cs_spectral* sp = nullptr;
  if (cs_status s = cs_spectral_compute(cfg, &sp); s != CS_OK) return fail(s);
  OutStream out;
  if (!open_out(out, out_path)) {
    cs_spectral_free(sp);
    return 2;
  }
  std::ostream& os = out.get();
  const int n = cs_config_state_dim(cfg);
  os << "# blocks\n";
  os << "block,kind,lambda,rho,theta,size,angle_a,angle_b,period\n";
  for (int i = 0; i < cs_spectral_block_count(sp); ++i) {
    cs_block_info b{};
    cs_spectral_block(sp, i, &b);
    os << (i + 1) << ',' << kind_name(b.kind) << ',';
    os << (b.kind == CS_BLOCK_COMPLEX_PAIR ? "" : fmt(b.lambda)) << ',';
    os << (b.kind == CS_BLOCK_COMPLEX_PAIR ? fmt(b.rho) : "") << ',';
    os << (b.kind == CS_BLOCK_COMPLEX_PAIR ? fmt(b.theta) : "") << ',';
    os << b.size << ',';
    if (b.has_rational_angle) {
      os << b.angle_a << ',' << b.angle_b << ',' << b.period;
    } else {
      os << ",,";
    }
    os << '\n';
  }
  os << "# supports\n";
  os << "block,j,phi,hX_plus,hX_minus,hBU_plus,hBU_minus,hW_plus,hW_minus\n";
  std::vector<double> phi(static_cast<size_t>(n));
  for (int i = 0; i < cs_spectral_direction_count(sp); ++i) {
    cs_direction_row r{};
    cs_spectral_direction(sp, i, &r);
    cs_spectral_eigenvector(sp, r.block, r.j, phi.data(), phi.size());
    std::ostringstream pv;
    for (int c = 0; c < n; ++c) pv << (c ? ";" : "") << fmt(phi[static_cast<size_t>(c)]);
    os << (r.block + 1) << ',' << r.j << ',' << pv.str() << ',' << fmt(r.hX_plus) << ','
       << fmt(r.hX_minus) << ',' << fmt(r.hBU_plus) << ',' << fmt(r.hBU_minus) << ','
       << fmt(r.hW_plus) << ',' << fmt(r.hW_minus) << '\n';
  }
  cs_spectral_free(sp);
  return 0;
}

int run_bounds(const cs_config* cfg, long long kmax, const std::string& out_path) {
  cs_bounds* b = nullptr;
  if (cs_status s = cs_bounds_compute(cfg, kmax, &b); s != CS_OK) return fail(s);
  OutStream out;
  if (!open_out(out, out_path)) {
    cs_bounds_free(b);
    return 2;
  }
  std::ostream& os = out.get();
  os << "k,block,theorem,value_plus,value_minus,bar\n";
  for (int64_t i = 0; i < cs_bounds_row_count(b); ++i) {
    cs_bound_row r{};
    cs_bounds_row(b, i, &r);
    os << r.k << ',' << (r.block + 1) << ",T" << r.theorem << ',' << fmt(r.value_plus) << ','
       << fmt(r.value_minus) << ',' << fmt(r.bar) << '\n';
  }
  cs_certificate c{};
  cs_bounds_certificate(b, &c);
  os << "# certificate\n";
  os << "alpha,k_star,block,theorem,justification,direction\n";
  os << fmt(c.alpha) << ',' << (c.k_star < 0 ? std::string("inf") : std::to_string(c.k_star))
     << ',' << (c.block + 1) << ",T" << c.theorem << ',' << justification_name(c.justification)
     << ',' << c.direction << '\n';
  cs_bounds_free(b);
  return 0;
}

int run_oracle(const cs_config* cfg, long long kmax, double tol, double hi,
               const std::string& out_path) {
  cs_oracle* o = nullptr;
  if (cs_status s = cs_oracle_sweep(cfg, kmax, tol, hi, &o); s != CS_OK) return fail(s);
  OutStream out;
  if (!open_out(out, out_path)) {
    cs_oracle_free(o);
    return 2;
  }
  std::ostream& os = out.get();
  os << "k,alpha_star,bound_T1,bound_T3,bound_T4,bound_T6,winner\n";
  for (int64_t i = 0; i < cs_oracle_row_count(o); ++i) {
    cs_oracle_row r{};
    cs_oracle_get_row(o, i, &r);
    os << r.k << ',' << fmt(r.alpha_star) << ',' << fmt_opt(r.t1) << ',' << fmt_opt(r.t3) << ','
       << fmt_opt(r.t4) << ',' << fmt_opt(r.t6) << ',' << r.winner << '\n';
  }
  cs_oracle_free(o);
  return 0;
}

int run_attack(const cs_config* cfg, double alpha, const std::string& x0_str, int block,
               const std::string& defender, long long max_steps, const std::string& out_path) {
  const int n = cs_config_state_dim(cfg);
  const int m = cs_config_input_dim(cfg);
  std::vector<double> x0;
  if (!x0_str.empty()) {
    std::stringstream ss(x0_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        x0.push_back(std::stod(tok));
      } catch (...) {
        std::cerr << "error: bad --x0 component '" << tok << "'\n";
        return 2;
      }
    }
    if (static_cast<int>(x0.size()) != n) {
      std::cerr << "error: --x0 needs " << n << " components\n";
      return 2;
    }
  }
  cs_attack* a = nullptr;
  if (cs_status s = cs_attack_run(cfg, alpha, x0.empty() ? nullptr : x0.data(), x0.size(), block,
                                  defender.c_str(), max_steps, &a);
      s != CS_OK)
    return fail(s);
  OutStream out;
  if (!open_out(out, out_path)) {
    cs_attack_free(a);
    return 2;
  }
  std::ostream& os = out.get();
  os << "k";
  for (int i = 1; i <= n; ++i) os << ",x" << i;
  for (int i = 1; i <= m; ++i) os << ",u" << i;
  for (int i = 1; i <= n; ++i) os << ",w" << i;
  os << ",in_X\n";
  std::vector<double> x(static_cast<size_t>(n)), u(static_cast<size_t>(m)),
      w(static_cast<size_t>(n));
  for (int64_t i = 0; i < cs_attack_step_count(a); ++i) {
    cs_attack_step st{};
    cs_attack_get_step(a, i, &st, x.data(), x.size(), u.data(), u.size(), w.data(), w.size());
    os << st.k;
    for (double v : x) os << ',' << fmt(v);
    for (double v : u) os << ',' << fmt(v);
    for (double v : w) os << ',' << fmt(v);
    os << ',' << (st.in_x ? 1 : 0) << '\n';
  }
  const int64_t exit_step = cs_attack_exit_step(a);
  const int64_t out_x = cs_attack_first_out_of_x(a);
  std::ostream& sum = out.to_file ? std::cout : std::cerr;
  if (exit_step >= 0) {
    sum << "exit at k=" << exit_step;
    if (out_x >= 0 && out_x != exit_step) sum << " (state first leaves X at k=" << out_x << ")";
    sum << "\n";
  } else {
    sum << "no exit within " << (cs_attack_step_count(a) - 1) << " steps";
    if (out_x >= 0) sum << " (state first leaves X at k=" << out_x << ")";
    sum << "\n";
  }
  cs_attack_free(a);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critical disturbance-scaling analysis for constrained linear systems"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  long long kmax = 0, max_steps = 0;
  double alpha_tol = 0, alpha_hi = 0, alpha = 0.0;
  std::string x0_str, defender = "projected-worst-case";
  int block = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", config_path, "analysis config (JSON)")->required();
    sub->add_option("--out", out_path, "write CSV here instead of stdout");
  };

  CLI::App* sp = app.add_subcommand("spectral", "Jordan blocks and the support table");
  add_common(sp);

  CLI::App* bo = app.add_subcommand("bounds", "per-k closed-form bounds and the certificate");
  add_common(bo);
  bo->add_option("--kmax", kmax, "largest k (default: config k_max)");

  CLI::App* orc = app.add_subcommand("oracle", "exact critical scaling vs. bounds (2-D)");
  add_common(orc);
  orc->add_option("--kmax", kmax, "largest k (default: config k_max)");
  orc->add_option("--alpha-tol", alpha_tol, "bisection width (default: config alpha_tol)");
  orc->add_option("--alpha-hi", alpha_hi, "upper bracket (default: config alpha_hi)");

  CLI::App* at = app.add_subcommand("attack", "greedy adversarial disturbance rollout");
  add_common(at);
  at->add_option("--alpha", alpha, "disturbance scaling")->required();
  at->add_option("--x0", x0_str, "initial state, comma-separated (default: origin)");
  at->add_option("--block", block, "Jordan block index, 1-based (default: 1)")
      ->check(CLI::PositiveNumber);
  at->add_option("--defender", defender,
                 "projected-worst-case | zero | saturating-feedback");
  at->add_option("--max-steps", max_steps, "step budget (default: analytic estimate)");

  block = 1;
  CLI11_PARSE(app, argc, argv);

  cs_config* cfg = nullptr;
  if (cs_status s = cs_config_load_file(config_path.c_str(), &cfg); s != CS_OK) return fail(s);
  int rc = 0;
  if (sp->parsed()) rc = run_spectral(cfg, out_path);
  if (bo->parsed()) rc = run_bounds(cfg, kmax, out_path);
  if (orc->parsed()) rc = run_oracle(cfg, kmax, alpha_tol, alpha_hi, out_path);
  if (at->parsed()) rc = run_attack(cfg, alpha, x0_str, block - 1, defender, max_steps, out_path);
  cs_config_free(cfg);
  return rc;
}
