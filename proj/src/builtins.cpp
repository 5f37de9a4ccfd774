#include "dworkcong/builtins.hpp"

namespace dwork {

Builtin parse_builtin(const std::string& name) {
  if (name == "example-1d") return Builtin::kExample1d;
  if (name == "dwork-quartic") return Builtin::kDworkQuartic;
  if (name == "legendre") return Builtin::kLegendre;
  if (name == "section6") return Builtin::kSection6;
  throw std::invalid_argument("unknown builtin: " + name);
}

std::string builtin_name(Builtin b) {
  switch (b) {
    case Builtin::kExample1d:
      return "example-1d";
    case Builtin::kDworkQuartic:
      return "dwork-quartic";
    case Builtin::kLegendre:
      return "legendre";
    default:
      return "section6";
  }
}

LaurentPoly<Rat> builtin_ct_generator(Builtin b) {
  if (b == Builtin::kExample1d) {
    LaurentPoly<Rat> g(1, Rat(0));
    g.add_term(ExponentVec{1}, 1);
    g.add_term(ExponentVec{-1}, 1);
    return g;
  }
  if (b == Builtin::kDworkQuartic) {
    LaurentPoly<Rat> g(2, Rat(0));
    for (int32_t ex : {1, -1})
      for (int32_t ey : {1, -1}) g.add_term(ExponentVec{ex, ey}, Rat(1, 4));
    return g;
  }
  throw std::invalid_argument(
      "builtin " + builtin_name(b) + " is not a constant-term generator");
}

ParamFamily builtin_family(Builtin b) {
  switch (b) {
    case Builtin::kExample1d:
      return {hw::one_minus_t_g(builtin_ct_generator(b)), {"x"}, "t"};
    case Builtin::kDworkQuartic:
      return {hw::one_minus_t_g(builtin_ct_generator(b)), {"x", "y"}, "t"};
    case Builtin::kLegendre: {
      // y^2 - x^3 + (1+z) x^2 - z x
      LaurentPoly<Rat> pzero(1, Rat(0));
      hw::ParamPoly f(2, pzero);
      auto zpoly = [](std::initializer_list<Rat> cs) {
        LaurentPoly<Rat> c(1, Rat(0));
        int32_t e = 0;
        for (const Rat& v : cs) c.add_term(ExponentVec{e++}, v);
        return c;
      };
      f.add_term(ExponentVec{0, 2}, zpoly({1}));
      f.add_term(ExponentVec{3, 0}, zpoly({-1}));
      f.add_term(ExponentVec{2, 0}, zpoly({1, 1}));
      f.add_term(ExponentVec{1, 0}, zpoly({0, -1}));
      return {f, {"x", "y"}, "z"};
    }
    default: {
      // section 6 exponents with every coefficient specialized to 1; the
      // parameter variable is unused (degree-0 coefficients)
      LaurentPoly<Rat> pzero(1, Rat(0));
      hw::ParamPoly f(2, pzero);
      for (const auto& a : section6_config().exponents)
        f.add_term(a, LaurentPoly<Rat>::constant(1, 1));
      return {f, {"x", "y"}, "t"};
    }
  }
}

AConfig section6_config() {
  AConfig cfg;
  cfg.exponents = {ExponentVec{0, 2}, ExponentVec{1, 0}, ExponentVec{3, 0},
                   ExponentVec{2, 0}, ExponentVec{1, 1}};
  return cfg;
}

}  // namespace dwork
