#include "conlat/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace conlat {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string intervals_text(const std::vector<Interval>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out += " | ";
    out += "[" + format_real(members[i].lo) + "," + format_real(members[i].hi) + "]";
  }
  return out + "}";
}

}  // namespace

double round_real(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format_real(double x) {
  const double rounded = round_real(x);
  if (!std::isfinite(rounded)) return std::isnan(rounded) ? "nan" : (rounded > 0 ? "inf" : "-inf");
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, rounded);
  return std::string(buf, result.ptr);
}

std::string to_string(const Property& p) {
  return std::visit(
      overloaded{
          [](const Symbol& s) { return s.value; },
          [](const SymbolSet& s) {
            std::string out = "{";
            for (std::size_t i = 0; i < s.values.size(); ++i) {
              if (i > 0) out += "|";
              out += s.values[i];
            }
            return out + "}";
          },
          [](const Point& x) { return format_real(x.value); },
          [](const Interval& iv) {
            return "[" + format_real(iv.lo) + "," + format_real(iv.hi) + "]";
          },
          [](const PointSet& s) {
            std::string out = "{";
            for (std::size_t i = 0; i < s.values.size(); ++i) {
              if (i > 0) out += ",";
              out += format_real(s.values[i]);
            }
            return out + "}";
          },
          [](const IntervalSet& s) { return intervals_text(s.members); },
          [](const NegatedRegion& n) { return "not " + intervals_text(n.excluded); },
          [](const Bucket& b) { return "#" + std::to_string(b.index); },
      },
      p);
}

std::string to_string(const Concept& c) {
  std::string out = "{";
  bool first = true;
  for (const auto& [feature, p] : c.entries()) {
    if (!first) out += ", ";
    first = false;
    out += c.schema().feature(feature).name + ":" + to_string(p);
  }
  return out + "}";
}

}  // namespace conlat
