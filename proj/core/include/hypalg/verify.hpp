#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypalg {

/// One verification check: a reproducible statement about the algebra with an
/// exact (or tolerance-pinned, for lorentz) pass condition.
struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20250612;

// Verification batteries. Deterministic for a fixed seed; every expected
// value is either exact algebra or pinned in the battery itself.
std::vector<CheckResult> verify_structure(std::uint64_t seed, int random_triples = 1000);
std::vector<CheckResult> verify_appendix();
std::vector<CheckResult> verify_rank64();
std::vector<CheckResult> verify_counting();
std::vector<CheckResult> verify_antihermiticity(std::uint64_t seed, int random_quaternions = 100);
std::vector<CheckResult> verify_generator_tables();
std::vector<CheckResult> verify_dimension_table(int n_max = 3);
std::vector<CheckResult> verify_closure(int n_max = 2);
std::vector<CheckResult> verify_metric_signatures();
std::vector<CheckResult> verify_commutant();
std::vector<CheckResult> verify_transpose_laws(std::uint64_t seed, int samples = 100);
std::vector<CheckResult> verify_lorentz(std::uint64_t seed, int compositions = 100,
                                        int rotation_cases = 100);

const std::vector<std::string>& verify_suite_names();

/// Runs one named suite ("structure", "appendix", "rank64", "counting",
/// "antihermiticity", "generators", "dims", "closure", "metrics",
/// "commutant", "transpose", "lorentz"). Throws std::invalid_argument for
/// unknown names.
std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed);

/// Runs all suites (independent suites in parallel), results merged in the
/// fixed suite order.
std::vector<CheckResult> run_all_suites(std::uint64_t seed);

}  // namespace hypalg
