#pragma once

// Whole-library verification sweep behind `verify-all`: the identity suite plus
// exponential, logarithm, derivative, singularity, basis and field checks.

#include "lorcal/identities.hpp"
#include "lorcal/skew.hpp"
#include "lorcal/sweep.hpp"

#include <cstdint>
#include <vector>

namespace lorcal {

/// Random F with |(E, B)| <= 3, rescaled if needed so that |Im lambda_cF| <= 0.9 pi.
SkewOp gen_principal(std::uint64_t seed);

/// 2 pi n times a random unit rotation (lambda_cF = 2 pi n i).
SkewOp gen_singular_rotation(std::uint64_t seed, int n);

/// Entries beyond the identity suite, in report order.
std::vector<SuiteEntry> run_library_checks(std::int64_t samples, std::uint64_t seed, Exec exec, double tol_scale = 1.0);

/// Identity suite followed by run_library_checks.
std::vector<SuiteEntry> run_verify_all(std::int64_t samples, std::uint64_t seed, Exec exec, double tol_scale = 1.0);

}  // namespace lorcal
