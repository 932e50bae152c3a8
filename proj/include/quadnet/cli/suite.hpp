#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "quadnet/algebra/local_algebra.hpp"
#include "quadnet/nets/quadric_nets.hpp"

namespace quadnet {

struct SuiteOptions {
  std::uint64_t seed = 0;
  int trials = 20;
  int cap = kDefaultLocalCap;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
  double seconds = 0;
};

/// Seven random rational points with a finite, reduced base locus of eight
/// points; returns the net and the seven points.
struct SevenPointNet {
  QuadricNet net;
  std::vector<std::array<Rational, 4>> points;
};
SevenPointNet random_seven_point_net(std::mt19937_64& rng);

CriterionResult check_discriminants(const SuiteOptions& opt);
CriterionResult check_singularities(const SuiteOptions& opt);
CriterionResult check_base_loci(const SuiteOptions& opt);
CriterionResult check_verdicts(const SuiteOptions& opt);
CriterionResult check_atlas(const SuiteOptions& opt);
CriterionResult check_hm_anchor(const SuiteOptions& opt);
CriterionResult check_segre_anchors(const SuiteOptions& opt);
CriterionResult check_gale_suite(const SuiteOptions& opt);
CriterionResult check_properties(const SuiteOptions& opt);

/// All criteria in order.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opt);

}  // namespace quadnet
