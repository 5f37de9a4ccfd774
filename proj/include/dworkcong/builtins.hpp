#pragma once

// Named inputs shipped with the tool so verification runs need no
// hand-authored files:
//   example-1d     g = x + 1/x
//   dwork-quartic  g = (1/4)(x + 1/x)(y + 1/y)
//   legendre       f = y^2 - x(x-1)(x-z), parameter z
//   section6       f = v1 y^2 + v2 x + v3 x^3 + v4 x^2 + v5 x y
//                  (section6-specialized sets v = (1,1,1,1,1))

#include <string>

#include "dworkcong/cone.hpp"
#include "dworkcong/hwdwork.hpp"

namespace dwork {

enum class Builtin { kExample1d, kDworkQuartic, kLegendre, kSection6 };

Builtin parse_builtin(const std::string& name);
std::string builtin_name(Builtin b);

// Constant-term generators (example-1d, dwork-quartic only).
LaurentPoly<Rat> builtin_ct_generator(Builtin b);

// One-parameter families: 1 - t g for the ct builtins, the Legendre family
// for "legendre", and the section-6 polynomial with every v_i = 1 plus a
// dummy parameter for "section6".
struct ParamFamily {
  hw::ParamPoly f;
  std::vector<std::string> core_vars;
  std::string param_var;
};
ParamFamily builtin_family(Builtin b);

AConfig section6_config();

}  // namespace dwork
