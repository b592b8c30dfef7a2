#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "scherk/surface.hpp"

namespace scherk {

enum class TolProfile { Strict, Default };

TolProfile parse_tol_profile(const std::string& name);
const char* to_string(TolProfile profile);

struct Check {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool passed = false;
};

struct VerifyOptions {
  TolProfile profile = TolProfile::Default;
  std::uint64_t seed = 20240601;
  int disk_points = 40;
  int jacobian_grid = 48;  // grid is jacobian_grid x jacobian_grid polar samples
};

/// Runs every invariant check on one surface.
std::vector<Check> verify_surface(const ScherkSurface& surface, const VerifyOptions& opt = {});

/// Random (m, s, t) with m in [0.05, 1.5], s, t in [-3, 3], |s - t| > 0.05.
struct ParamSample {
  double m, s, t;
};
ParamSample random_params(std::mt19937_64& rng);

/// Worst residual per check name over n_cases random surfaces drawn from opt.seed.
std::vector<Check> verify_sweep(int n_cases, const VerifyOptions& opt = {});

bool all_passed(const std::vector<Check>& checks);
std::string format_checks(const std::vector<Check>& checks);

}  // namespace scherk
