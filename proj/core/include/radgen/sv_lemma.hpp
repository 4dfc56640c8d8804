#pragma once

#include <cstddef>
#include <vector>

#include "radgen/groebner.hpp"

namespace radgen {

// Ordered parts P_1..P_r of polynomials with an exponent e(p) >= 1 per
// element. Parts are sets: a repeated polynomial inside one part is rejected.
class PartitionSystem {
 public:
  // All exponents default to 1.
  PartitionSystem(Ring ring, std::vector<std::vector<Polynomial>> parts);
  PartitionSystem(Ring ring, std::vector<std::vector<Polynomial>> parts, std::vector<std::vector<unsigned>> exponents);

  const Ring& ring() const { return ring_; }
  const std::vector<std::vector<Polynomial>>& parts() const { return parts_; }
  const std::vector<std::vector<unsigned>>& exponents() const { return exponents_; }
  std::size_t size() const { return parts_.size(); }
  // Union of all parts, in part order.
  IdealGens all_elements() const;

 private:
  Ring ring_;
  std::vector<std::vector<Polynomial>> parts_;
  std::vector<std::vector<unsigned>> exponents_;
};

struct PairViolation {
  std::size_t part;    // 0-based
  std::size_t first;   // 0-based element indices within the part
  std::size_t second;
};

struct ValidationReport {
  bool ok = false;
  bool single_first_part = false;
  std::vector<PairViolation> violations;
};

// Checks |P_1| = 1, and for every part i >= 2 and distinct p, p' in it that
// p*p' lies in the radical of the union of the earlier parts.
ValidationReport validate_partition(const PartitionSystem& system, const GbOptions& opts = {});

// q_i = sum of p^e(p) over P_i. Validates first; throws InvalidInput if the
// system fails validation.
std::vector<Polynomial> combine(const PartitionSystem& system, const GbOptions& opts = {});

// q_i without validating; for callers that already hold a passing report.
std::vector<Polynomial> combine_unchecked(const PartitionSystem& system);

}  // namespace radgen
