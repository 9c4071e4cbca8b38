#include "ergo/interval_set.hpp"

#include <algorithm>
#include <sstream>

#include "ergo/errors.hpp"

namespace ergo {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw InvalidRange("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      if (den == 0) throw InvalidRange("zero denominator in '" + s + "'");
      return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      BigInt num(digits);
      BigInt den = 1;
      for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
      return Rational(num, den);
    }
    return Rational(BigInt(s));
  } catch (const std::runtime_error&) {
    throw InvalidRange("cannot parse rational '" + s + "'");
  }
}

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

static void canonicalize(std::vector<Interval>& parts) {
  std::erase_if(parts, [](const Interval& p) { return p.lo >= p.hi; });
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (auto& p : parts) {
    if (!merged.empty() && p.lo <= merged.back().hi) {
      if (p.hi > merged.back().hi) merged.back().hi = p.hi;
    } else {
      merged.push_back(p);
    }
  }
  parts = std::move(merged);
}

IntervalSet IntervalSet::from_raw(const std::vector<std::pair<Rational, Rational>>& raw) {
  std::vector<Interval> parts;
  parts.reserve(raw.size());
  for (const auto& [a, b] : raw) {
    if (a >= b)
      throw MalformedInterval("interval [" + format_rational(a) + "," + format_rational(b) +
                              ") has a >= b");
    if (a < 0 || b > 1)
      throw MalformedInterval("interval [" + format_rational(a) + "," + format_rational(b) +
                              ") leaves [0,1]");
    parts.push_back({a, b});
  }
  canonicalize(parts);
  IntervalSet s;
  s.parts_ = std::move(parts);
  return s;
}

IntervalSet IntervalSet::from_intervals(std::vector<Interval> parts) {
  canonicalize(parts);
  IntervalSet s;
  s.parts_ = std::move(parts);
  return s;
}

Rational IntervalSet::measure() const {
  Rational m = 0;
  for (const auto& p : parts_) m += p.length();
  return m;
}

IntervalSet IntervalSet::complement() const {
  std::vector<Interval> out;
  Rational cursor = 0;
  for (const auto& p : parts_) {
    if (cursor < p.lo) out.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (cursor < 1) out.push_back({cursor, Rational(1)});
  return from_intervals(std::move(out));
}

bool IntervalSet::contains_point(const Rational& x) const {
  for (const auto& p : parts_) {
    if (x < p.lo) return false;
    if (x < p.hi) return true;
  }
  return false;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return IntervalSet::from_intervals(std::move(parts));
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  size_t i = 0, j = 0;
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  while (i < pa.size() && j < pb.size()) {
    Rational lo = std::max(pa[i].lo, pb[j].lo);
    Rational hi = std::min(pa[i].hi, pb[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (pa[i].hi < pb[j].hi)
      ++i;
    else
      ++j;
  }
  return IntervalSet::from_intervals(std::move(out));
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
  return set_intersect(a, b.complement());
}

IntervalSet set_symdiff(const IntervalSet& a, const IntervalSet& b) {
  return set_union(set_difference(a, b), set_difference(b, a));
}

}  // namespace ergo
