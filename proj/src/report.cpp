#include "dworkcong/report.hpp"

#include <sstream>

namespace dwork {

std::string CongruenceReport::summary() const {
  std::ostringstream os;
  os << claim << " [";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) os << ", ";
    os << k << "=" << v;
    first = false;
  }
  os << "]: " << (holds ? "holds" : "FAILS");
  if (!holds && failure) {
    os << " at " << failure->where << " (lhs " << failure->expected << ", rhs "
       << failure->actual << ")";
  }
  os << "  (" << millis << " ms)";
  return os.str();
}

std::string UnitRootResult::summary() const {
  std::ostringstream os;
  os << "unit root, p=" << p << ", s=" << s << ", point=" << point;
  if (a_p) os << ", a_p=" << a_p->str();
  if (lambda_trunc) os << ", lambda_trunc=" << lambda_trunc->value().str();
  if (lambda_hensel) os << ", lambda_hensel=" << lambda_hensel->value().str();
  if (lambda_trunc && lambda_hensel)
    os << ", agreement: " << (agree ? "yes" : "NO");
  return os.str();
}

}  // namespace dwork
