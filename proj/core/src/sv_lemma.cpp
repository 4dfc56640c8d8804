#include "radgen/sv_lemma.hpp"

namespace radgen {

PartitionSystem::PartitionSystem(Ring ring, std::vector<std::vector<Polynomial>> parts)
    : PartitionSystem(ring, parts, [&] {
        std::vector<std::vector<unsigned>> ones;
        for (const auto& part : parts) ones.emplace_back(part.size(), 1u);
        return ones;
      }()) {}

PartitionSystem::PartitionSystem(Ring ring, std::vector<std::vector<Polynomial>> parts,
                                 std::vector<std::vector<unsigned>> exponents)
    : ring_(std::move(ring)), parts_(std::move(parts)), exponents_(std::move(exponents)) {
  if (parts_.empty()) throw InvalidInput("partition system has no parts");
  if (exponents_.size() != parts_.size()) throw InvalidInput("exponent map does not match the parts");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const auto& part = parts_[i];
    if (part.empty()) throw InvalidInput("part " + std::to_string(i + 1) + " is empty");
    if (exponents_[i].size() != part.size()) throw InvalidInput("exponent map does not match part " + std::to_string(i + 1));
    for (std::size_t j = 0; j < part.size(); ++j) {
      require_same_ring(ring_, part[j].ring(), "partition system");
      if (part[j].is_zero()) throw InvalidInput("part " + std::to_string(i + 1) + " contains the zero polynomial");
      if (exponents_[i][j] < 1) throw InvalidInput("exponents must be at least 1");
      for (std::size_t k = 0; k < j; ++k) {
        if (part[k] == part[j]) {
          throw InvalidInput("part " + std::to_string(i + 1) + " repeats " + print_poly(part[j]));
        }
      }
    }
  }
}

IdealGens PartitionSystem::all_elements() const {
  std::vector<Polynomial> all;
  for (const auto& part : parts_) all.insert(all.end(), part.begin(), part.end());
  return IdealGens(ring_, std::move(all));
}

ValidationReport validate_partition(const PartitionSystem& system, const GbOptions& opts) {
  ValidationReport report;
  report.single_first_part = system.parts().front().size() == 1;
  std::vector<Polynomial> earlier(system.parts().front());
  for (std::size_t i = 1; i < system.size(); ++i) {
    const auto& part = system.parts()[i];
    const IdealGens before(system.ring(), earlier);
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        if (!radical_member(part[a] * part[b], before, opts)) report.violations.push_back({i, a, b});
      }
    }
    earlier.insert(earlier.end(), part.begin(), part.end());
  }
  report.ok = report.single_first_part && report.violations.empty();
  return report;
}

std::vector<Polynomial> combine_unchecked(const PartitionSystem& system) {
  std::vector<Polynomial> out;
  out.reserve(system.size());
  for (std::size_t i = 0; i < system.size(); ++i) {
    Polynomial q(system.ring());
    for (std::size_t j = 0; j < system.parts()[i].size(); ++j) {
      q += system.parts()[i][j].pow(system.exponents()[i][j]);
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<Polynomial> combine(const PartitionSystem& system, const GbOptions& opts) {
  const ValidationReport report = validate_partition(system, opts);
  if (!report.single_first_part) throw InvalidInput("first part must have exactly one element");
  if (!report.violations.empty()) {
    const auto& v = report.violations.front();
    throw InvalidInput("part " + std::to_string(v.part + 1) + ": product of elements " + std::to_string(v.first + 1) +
                       " and " + std::to_string(v.second + 1) + " is not in the radical of the earlier parts");
  }
  return combine_unchecked(system);
}

}  // namespace radgen
