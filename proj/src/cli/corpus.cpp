#include "quadnet/cli/corpus.hpp"

#include "quadnet/cli/parse.hpp"
#include "quadnet/error.hpp"

namespace quadnet {

QuadricNet ExampleNet::net() const {
  Ambient amb = Ambient::projective3();
  return QuadricNet::from_forms(parse_form(q1, amb, 2), parse_form(q2, amb, 2), parse_form(q3, amb, 2));
}

std::string ExampleNet::document() const {
  return "# " + name + "\nQ1 = " + q1 + "\nQ2 = " + q2 + "\nQ3 = " + q3 + "\n";
}

const std::vector<ExampleNet>& example_nets() {
  static const std::vector<ExampleNet> nets{
      {"A4", "x^2 - 2*x*y", "1/4*x^2 - x*y + 2*x*z + y^2 + 2*y*w", "2*z*w",
       "l^2*n^2 + 2*l*m^2*n + m^4 + m^3*n",
       {"A2", "A4"},
       {{"(0:0:1:0)", 3}, {"(0:0:0:1)", 2}, {"(0:-2:0:1)", 1}, {"(2:1:0:0)", 2}},
       Verdict::StrictlySemistable},
      {"A5-a0", "x^2 - 2*x*y", "2*x*z + 2*y*w", "1/4*x^2 - x*y + y^2 + 2*z*w",
       "l^2*n^2 + 2*l*m^2*n + m^4 + m^2*n^2",
       {"A1", "A5"},
       {{"(0:0:1:0)", 4}, {"(0:0:0:1)", 2}, {"(2:1:0:0)", 2}},
       Verdict::StrictlySemistable},
      {"A5-a-4", "x^2 - 2*x*y", "2*x*z + 2*y*w", "17/4*x^2 - x*y + y^2 + 2*z*w",
       "l^2*n^2 + 2*l*m^2*n + m^4 + m^2*n^2 - 4*n^4",
       {"A5"},
       {{"(0:0:1:0)", 4}, {"(0:0:0:1)", 2}, {"(2:1:2:-4)", 1}, {"(2:1:-2:4)", 1}},
       Verdict::StrictlySemistable},
      {"A6", "-2*x*y", "-x^2 + 2*x*z + 2*y*w", "y^2 + 2*z*w",
       "l^2*n^2 + 2*l*m^2*n + m^4 + m*n^3",
       {"A6"},
       {{"(0:0:1:0)", 4}, {"(0:0:0:1)", 3}, {"(2:0:1:0)", 1}},
       Verdict::StrictlySemistable},
      {"E7", "z^2", "w*(y + x) + x*y", "z*w + (x + y)^2",
       "1/16*m*(4*l*m^2 + n^2*(m + 4*n))",
       {"E7"},
       {{"(0:0:0:1)", 8}},
       Verdict::Unstable},
  };
  return nets;
}

const ExampleNet& example_net(const std::string& name) {
  for (const auto& e : example_nets())
    if (e.name == name) return e;
  throw MathError(ErrorKind::InvalidArgument, "unknown example " + name);
}

}  // namespace quadnet
