#include "tropigeo/parse.hpp"

#include "tropigeo/error.hpp"

#include <cctype>

namespace tropigeo {

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(trimmed(s.substr(start)));
      break;
    }
    parts.push_back(trimmed(s.substr(start, pos - start)));
    start = pos + 1;
  }
  return parts;
}

std::string_view strip_delimiters(std::string_view s, char open, char close,
                                  const char* what) {
  s = trimmed(s);
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(s) + "'");
  }
  return s.substr(1, s.size() - 2);
}

}  // namespace

Chart parse_chart(std::string_view text) {
  const std::string_view s = trimmed(text);
  if (s.size() == 1) {
    switch (std::tolower(static_cast<unsigned char>(s[0]))) {
      case 'x':
        return Chart::X;
      case 'y':
        return Chart::Y;
      case 'z':
        return Chart::Z;
      default:
        break;
    }
  }
  throw ParseError("chart must be one of x, y, z");
}

ProjPoint parse_proj_point(std::string_view text) {
  const auto inner = strip_delimiters(text, '[', ']', "a projective point [x,y,z]");
  const auto parts = split(inner, ',');
  if (parts.size() != 3) throw ParseError("projective point needs three coordinates");
  return ProjPoint(parse_trop_scalar(parts[0]), parse_trop_scalar(parts[1]),
                   parse_trop_scalar(parts[2]));
}

AffinePoint parse_affine_point(std::string_view text) {
  const auto inner = strip_delimiters(text, '(', ')', "an affine point (x,y)");
  const auto parts = split(inner, ',');
  if (parts.size() != 2) throw ParseError("affine point needs two coordinates");
  return {parse_trop_scalar(parts[0]), parse_trop_scalar(parts[1])};
}

ProjPoint parse_point(std::string_view text, Chart chart) {
  const std::string_view s = trimmed(text);
  if (!s.empty() && s.front() == '(') {
    return chart_embed(chart, parse_affine_point(s));
  }
  return parse_proj_point(s);
}

Vec2 parse_vec2(std::string_view text) {
  const AffinePoint p = parse_affine_point(text);
  if (!p.is_interior()) throw ParseError("finite coordinates required");
  return {p.x.rational(), p.y.rational()};
}

TropMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<TropScalar>> rows;
  for (std::string_view row : split(trimmed(text), ';')) {
    std::vector<TropScalar> entries;
    for (std::string_view cell : split(row, ',')) entries.push_back(parse_trop_scalar(cell));
    rows.push_back(std::move(entries));
  }
  try {
    return TropMatrix::from_rows(rows);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::vector<Rat> parse_rational_list(std::string_view text) {
  std::vector<Rat> out;
  for (std::string_view part : split(trimmed(text), ',')) out.push_back(parse_rational(part));
  return out;
}

Region parse_region(std::string_view text) {
  const auto parts = parse_rational_list(text);
  if (parts.size() != 4) throw ParseError("region needs x_min,x_max,y_min,y_max");
  // An inverted region is a domain error, not a syntax error.
  return Region(parts[0], parts[1], parts[2], parts[3]);
}

}  // namespace tropigeo
