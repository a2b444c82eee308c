#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "serialize.hpp"
#include "tropical.hpp"

namespace polytrope {

struct VerifyReport {
  bool pass = true;
  Json details;
};

// Seeded random matrix with entries p/q, |p| <= 20, 1 <= q <= 4.
TropMatrix random_matrix(int n, std::mt19937_64& rng);

// suite is one of eigen, star, linearity, lp, codim.
VerifyReport run_verify(const std::string& suite, int n, int trials, std::uint64_t seed, int threads = 1);

// codim_formula against codim_rank on every lattice element; mismatches are findings.
Json codim_discrepancy_report(const FaceLattice& lattice);

}  // namespace polytrope
