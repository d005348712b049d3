#include "tropigeo/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace tropigeo {

TropScalar parse_trop_scalar(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::string lowered(s);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lowered == "-inf") return TropScalar::neg_infinity();
  return TropScalar(parse_rational(s));
}

}  // namespace tropigeo
