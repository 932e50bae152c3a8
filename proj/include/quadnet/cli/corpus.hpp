#pragma once

#include <string>
#include <vector>

#include "quadnet/nets/quadric_nets.hpp"

namespace quadnet {

/// One of the built-in example nets, with its generators as text in the
/// variables x, y, z, w and the reference data the suite checks against.
struct ExampleNet {
  std::string name;
  std::string q1, q2, q3;
  /// Discriminant in l, m, n.
  std::string discriminant;
  std::vector<std::string> singularities;  // sorted type names
  std::vector<std::pair<std::string, long>> base_points;  // "(a:b:c:d)" text
  Verdict verdict;

  QuadricNet net() const;
  /// Input document text accepted by the CLI.
  std::string document() const;
};

/// A4, A5 (a1 = 0), A5 (a1 = -4), A6, E7.
const std::vector<ExampleNet>& example_nets();
const ExampleNet& example_net(const std::string& name);

}  // namespace quadnet
