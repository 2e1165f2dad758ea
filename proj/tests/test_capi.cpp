// Exercises the shared-library surface: handle lifecycle, status codes and
// the values the CLI consumes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "critscale.h"

namespace {

std::string config_path(const char* name) {
  return std::string(CRITSCALE_CONFIG_DIR) + "/" + name;
}

struct ConfigHandle {
  cs_config* ptr = nullptr;
  ~ConfigHandle() { cs_config_free(ptr); }
};

}  // namespace

TEST_CASE("config: load, getters, error paths") {
  ConfigHandle cfg;
  REQUIRE(cs_config_load_file(config_path("unstable_example.json").c_str(), &cfg.ptr) == CS_OK);
  CHECK(cs_config_state_dim(cfg.ptr) == 2);
  CHECK(cs_config_input_dim(cfg.ptr) == 1);
  CHECK(cs_config_k_max(cfg.ptr) == 15);
  CHECK(cs_config_alpha_tol(cfg.ptr) == 1e-4);
  CHECK(cs_config_alpha_hi(cfg.ptr) == 10.0);

  cs_config* bad = nullptr;
  CHECK(cs_config_load_string("not json", &bad) == CS_ERR_PARSE);
  CHECK(std::strlen(cs_last_error()) > 0);
  CHECK(cs_config_load_file("/nonexistent/path.json", &bad) == CS_ERR_PARSE);
  CHECK(cs_config_load_string(nullptr, &bad) == CS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("spectral: blocks, eigenvectors and the support table") {
  ConfigHandle cfg;
  REQUIRE(cs_config_load_file(config_path("unstable_example.json").c_str(), &cfg.ptr) == CS_OK);
  cs_spectral* sp = nullptr;
  REQUIRE(cs_spectral_compute(cfg.ptr, &sp) == CS_OK);
  CHECK(cs_spectral_block_count(sp) == 2);

  cs_block_info b0{}, b1{};
  REQUIRE(cs_spectral_block(sp, 0, &b0) == CS_OK);
  REQUIRE(cs_spectral_block(sp, 1, &b1) == CS_OK);
  CHECK(b0.kind == CS_BLOCK_REAL_POSITIVE);
  CHECK(b0.lambda == doctest::Approx(1.2));
  CHECK(b1.kind == CS_BLOCK_REAL_NEGATIVE);
  CHECK(b1.lambda == doctest::Approx(-1.5));

  double phi[2];
  REQUIRE(cs_spectral_eigenvector(sp, 0, 1, phi, 2) == CS_OK);
  CHECK(phi[0] == doctest::Approx(0.938).epsilon(1e-3));
  CHECK(phi[1] == doctest::Approx(0.347).epsilon(1e-3));
  CHECK(cs_spectral_eigenvector(sp, 0, 1, phi, 1) == CS_ERR_INVALID_ARGUMENT);
  CHECK(cs_spectral_eigenvector(sp, 7, 1, phi, 2) == CS_ERR_INVALID_ARGUMENT);

  REQUIRE(cs_spectral_direction_count(sp) == 2);
  cs_direction_row r0{}, r1{};
  REQUIRE(cs_spectral_direction(sp, 0, &r0) == CS_OK);
  REQUIRE(cs_spectral_direction(sp, 1, &r1) == CS_OK);
  CHECK(r0.hX_plus == doctest::Approx(5.383).epsilon(1e-3));
  CHECK(r0.hBU_plus == doctest::Approx(0.221).epsilon(3e-3));
  CHECK(r0.hBU_minus == doctest::Approx(0.441).epsilon(1e-3));
  CHECK(r0.hW_plus == doctest::Approx(1.285).epsilon(1e-3));
  CHECK(r1.hX_plus == doctest::Approx(2.0));
  CHECK(r1.hBU_plus == doctest::Approx(0.5));
  CHECK(r1.hBU_minus == doctest::Approx(1.0));
  CHECK(r1.hW_plus == doctest::Approx(1.0));
  cs_spectral_free(sp);

  // declared structure missing for the double integrator without "jordan"
  cs_config* di = nullptr;
  REQUIRE(cs_config_load_string(R"({
    "system": {
      "A": [[1.0, 1.0], [0.0, 1.0]],
      "B": [[0.5], [1.0]],
      "X": {"type": "box", "lower": [-5, -5], "upper": [5, 5]},
      "U": {"type": "box", "lower": [-1], "upper": [1]},
      "Wbar": {"type": "vpoly", "vertices": [[-0.5, -1.0], [0.5, 1.0]]}
    }
  })", &di) == CS_OK);
  cs_spectral* sp2 = nullptr;
  CHECK(cs_spectral_compute(di, &sp2) == CS_ERR_STRUCTURE_REQUIRED);
  cs_config_free(di);
}

TEST_CASE("bounds: rows and the certificate") {
  ConfigHandle cfg;
  REQUIRE(cs_config_load_file(config_path("unstable_example.json").c_str(), &cfg.ptr) == CS_OK);
  cs_bounds* b = nullptr;
  REQUIRE(cs_bounds_compute(cfg.ptr, 15, &b) == CS_OK);
  CHECK(cs_bounds_row_count(b) == 30);  // two theorems, k = 1..15

  cs_bound_row row{};
  bool found = false;
  for (int64_t i = 0; i < cs_bounds_row_count(b); ++i) {
    REQUIRE(cs_bounds_row(b, i, &row) == CS_OK);
    CHECK(row.bar > 0);
    if (row.k == 2 && row.theorem == 4) {
      CHECK(row.bar == doctest::Approx(1.2));
      found = true;
    }
  }
  CHECK(found);

  cs_certificate cert{};
  REQUIRE(cs_bounds_certificate(b, &cert) == CS_OK);
  CHECK(cert.alpha == doctest::Approx(0.286).epsilon(1e-3));
  CHECK(cert.theorem == 1);
  CHECK(cert.justification == CS_JUSTIFY_LIMIT_FORMULA);
  CHECK(cert.k_star == -1);
  CHECK(std::string(cert.direction) == "phi[1,1]");
  cs_bounds_free(b);
}

TEST_CASE("oracle: sweep rows and unsupported dimension") {
  ConfigHandle cfg;
  REQUIRE(cs_config_load_file(config_path("unstable_example.json").c_str(), &cfg.ptr) == CS_OK);
  cs_oracle* o = nullptr;
  REQUIRE(cs_oracle_sweep(cfg.ptr, 6, 1e-4, 10.0, &o) == CS_OK);
  CHECK(cs_oracle_row_count(o) == 5);  // k = 2..6
  for (int64_t i = 0; i < cs_oracle_row_count(o); ++i) {
    cs_oracle_row r{};
    REQUIRE(cs_oracle_get_row(o, i, &r) == CS_OK);
    CHECK(r.alpha_star > 0);
    CHECK(r.alpha_star <= std::min(r.t1, r.t4) + 1e-4);
    CHECK(std::isnan(r.t3));
    CHECK(std::isnan(r.t6));
    CHECK(r.winner[0] == 'T');
  }
  cs_oracle_free(o);

  // alpha_hi far too small
  cs_oracle* o2 = nullptr;
  CHECK(cs_oracle_sweep(cfg.ptr, 6, 1e-4, 1e-6, &o2) == CS_ERR_UPPER_BOUND_NOT_EMPTY);

  // a 3-D system reaches the bounds but not the oracle
  cs_config* threed = nullptr;
  REQUIRE(cs_config_load_string(R"({
    "system": {
      "A": [[2.0,0,0],[0,0.5,0],[0,0,0.25]],
      "B": [[1,0,0],[0,1,0],[0,0,1]],
      "X": {"type": "box", "lower": [-3,-3,-3], "upper": [3,3,3]},
      "U": {"type": "box", "lower": [-1,-1,-1], "upper": [1,1,1]},
      "Wbar": {"type": "box", "lower": [-1,-1,-1], "upper": [1,1,1]}
    }
  })", &threed) == CS_OK);
  cs_bounds* b3 = nullptr;
  CHECK(cs_bounds_compute(threed, 5, &b3) == CS_OK);
  cs_bounds_free(b3);
  cs_oracle* o3 = nullptr;
  CHECK(cs_oracle_sweep(threed, 5, 1e-4, 10.0, &o3) == CS_ERR_DIMENSION_UNSUPPORTED);
  cs_config_free(threed);
}

TEST_CASE("attack: trace handle") {
  ConfigHandle cfg;
  REQUIRE(cs_config_load_file(config_path("unstable_example.json").c_str(), &cfg.ptr) == CS_OK);
  const double x0[2] = {0.0, 0.0};
  cs_attack* a = nullptr;
  REQUIRE(cs_attack_run(cfg.ptr, 0.30, x0, 2, 0, "projected-worst-case", 0, &a) == CS_OK);
  CHECK(cs_attack_exit_step(a) == 12);
  CHECK(cs_attack_first_out_of_x(a) == 9);
  REQUIRE(cs_attack_step_count(a) == 13);  // steps 0..12
  double x[2], u[1], w[2];
  cs_attack_step st{};
  REQUIRE(cs_attack_get_step(a, 12, &st, x, 2, u, 1, w, 2) == CS_OK);
  CHECK(st.k == 12);
  CHECK(std::abs(st.xi) > 5.383);
  CHECK(st.in_x == 0);
  cs_attack_free(a);

  // complex-pair block is rejected for projection
  cs_config* rot = nullptr;
  REQUIRE(cs_config_load_string(R"({
    "system": {
      "A": [[0.0, -1.1], [1.1, 0.0]],
      "B": [[1,0],[0,1]],
      "X": {"type": "box", "lower": [-5,-5], "upper": [5,5]},
      "U": {"type": "box", "lower": [-1,-1], "upper": [1,1]},
      "Wbar": {"type": "box", "lower": [-1,-1], "upper": [1,1]}
    }
  })", &rot) == CS_OK);
  cs_attack* a2 = nullptr;
  CHECK(cs_attack_run(rot, 0.5, nullptr, 0, 0, "projected-worst-case", 0, &a2) ==
        CS_ERR_UNSUPPORTED);
  cs_config_free(rot);

  cs_attack* a3 = nullptr;
  CHECK(cs_attack_run(cfg.ptr, 0.3, x0, 2, 0, "nonsense-defender", 0, &a3) ==
        CS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("dos feasibility through the C surface") {
  ConfigHandle cfg;
  REQUIRE(cs_config_load_file(config_path("double_integrator.json").c_str(), &cfg.ptr) == CS_OK);
  int yes = -1;
  REQUIRE(cs_dos_feasible(cfg.ptr, 1.0, &yes) == CS_OK);
  CHECK(yes == 1);
  REQUIRE(cs_dos_feasible(cfg.ptr, 0.0, &yes) == CS_OK);
  CHECK(yes == 0);
}
