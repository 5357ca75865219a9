#include "v6.hpp"

#include <vector>

namespace guspin {

bool is_rational_v6(const V6<EElem>& v) {
  return v.alpha.is_rational() && v.delta.is_rational() && is_hermitian(v.h);
}

bool is_integral_v6(const V6<EElem>& v) {
  return v.alpha.is_integral() && v.delta.is_integral() && is_integral(v.h);
}

std::string v6_str(const V6<EElem>& v) {
  return v.alpha.str() + ";" + v.h(0, 0).str() + ";" + v.h(0, 1).str() + ";" + v.h(1, 0).str() +
         ";" + v.h(1, 1).str() + ";" + v.delta.str();
}

V6<EElem> v6_parse(const QuadAlgebra& alg, const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 6) throw domain_error("v6_parse: expected 6 ';'-separated coordinates");
  V6<EElem> v;
  v.alpha = EElem::parse(alg, parts[0]);
  v.h = mat2<EElem>(EElem::parse(alg, parts[1]), EElem::parse(alg, parts[2]),
                    EElem::parse(alg, parts[3]), EElem::parse(alg, parts[4]));
  v.delta = EElem::parse(alg, parts[5]);
  return v;
}

}  // namespace guspin
