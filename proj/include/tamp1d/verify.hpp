#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tamp1d {

struct PropertyResult {
  std::string suite;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when failures == 0
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<PropertyResult> results;

  bool ok() const;
  std::string format() const;
};

/// Suite names accepted by run_verify.
const std::vector<std::string>& verify_suites();  // intervals, stepfn, tamping, norms, all

/// Runs every property of the suite on `cases` random instances. Case k of a
/// property draws from a generator seeded by (seed, property, k) only, so the
/// report does not depend on evaluation order.
VerifyReport run_verify(std::string_view suite, std::size_t cases, std::uint64_t seed);

}  // namespace tamp1d
