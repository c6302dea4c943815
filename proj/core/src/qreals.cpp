// Copyright 2026 The qworlds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qworlds/qreals.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qworlds/algebra.hpp"
#include "qworlds/error.hpp"

namespace qworlds {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::size_t count_below(const std::vector<Rational>& breakpoints, const Rational& r) {
  return static_cast<std::size_t>(
      std::lower_bound(breakpoints.begin(), breakpoints.end(), r) - breakpoints.begin());
}

// Join of all values strictly below each point, in order: intervals and
// points interleave as I0 < p1 < I1 < p2 < ... .
template <typename V, typename Join>
void left_joins(const StepFunction<V>& u, const V& bottom, Join join, std::vector<V>& at_points,
                std::vector<V>& in_intervals) {
  const std::size_t k = u.breakpoints.size();
  at_points.clear();
  in_intervals.clear();
  V acc = bottom;
  for (std::size_t i = 0; i <= k; ++i) {
    // A rational inside interval i sees every earlier piece and part of
    // interval i itself.
    in_intervals.push_back(join(acc, u.intervals[i]));
    acc = join(acc, u.intervals[i]);
    if (i < k) {
      at_points.push_back(acc);
      acc = join(acc, u.points[i]);
    }
  }
}

template <typename V>
void check_shape(const StepFunction<V>& u) {
  const std::size_t k = u.breakpoints.size();
  if (u.intervals.size() != k + 1 || u.points.size() != k) {
    throw Error(ErrorCode::kInvalidArgument, "step function has mismatched value counts");
  }
  for (std::size_t i = 1; i < k; ++i) {
    if (!(u.breakpoints[i - 1] < u.breakpoints[i])) {
      throw Error(ErrorCode::kInvalidArgument, "breakpoints must increase strictly");
    }
  }
}

std::string where(const std::vector<Rational>& bps, std::size_t i, bool point) {
  if (point) return "at " + format_rational(bps[i]);
  if (bps.empty()) return "everywhere";
  if (i == 0) return "below " + format_rational(bps[0]);
  if (i == bps.size()) return "above " + format_rational(bps.back());
  return "between " + format_rational(bps[i - 1]) + " and " + format_rational(bps[i]);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string t = trim(text);
  auto digits = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
  };
  const auto slash = t.find('/');
  const std::string num = t.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) {
    throw Error(ErrorCode::kSyntaxError, "not a rational number: '" + t + "'");
  }
  const std::string n = num[0] == '+' ? num.substr(1) : num;
  boost::multiprecision::cpp_int d(den);
  if (d == 0) throw Error(ErrorCode::kSyntaxError, "zero denominator in '" + t + "'");
  return Rational(boost::multiprecision::cpp_int(n), d);
}

std::string format_rational(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

template <typename V>
StepFamily<V>::StepFamily(std::vector<Rational> breakpoints, std::vector<V> plateaus) {
  if (plateaus.size() != breakpoints.size() + 1) {
    throw Error(ErrorCode::kInvalidArgument, "a step family needs one more plateau than jumps");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i - 1] < breakpoints[i])) {
      throw Error(ErrorCode::kInvalidArgument, "breakpoints must increase strictly");
    }
  }
  plateaus_.push_back(std::move(plateaus[0]));
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (plateaus[i + 1] == plateaus_.back()) continue;
    breakpoints_.push_back(std::move(breakpoints[i]));
    plateaus_.push_back(std::move(plateaus[i + 1]));
  }
}

template <typename V>
const V& StepFamily<V>::value(const Rational& r) const {
  return plateaus_[count_below(breakpoints_, r)];
}

template <typename V>
const V& StepFunction<V>::value(const Rational& r) const {
  const std::size_t i = count_below(breakpoints, r);
  if (i < breakpoints.size() && breakpoints[i] == r) return points[i];
  return intervals[i];
}

template <typename V>
StepFunction<V> StepFunction<V>::from(const StepFamily<V>& family) {
  StepFunction<V> out;
  out.breakpoints = family.breakpoints();
  out.intervals = family.plateaus();
  for (std::size_t i = 0; i < family.jumps(); ++i) out.points.push_back(family.plateaus()[i]);
  return out;
}

template class StepFamily<Elem>;
template class StepFamily<ClopenSubobject>;
template struct StepFunction<Elem>;
template struct StepFunction<ClopenSubobject>;

RealCheck check_real(const Oml& l, const StepFunction<Elem>& u) {
  check_shape(u);
  RealCheck report;
  Elem all_join = l.bottom();
  Elem all_meet = l.top();
  for (Elem v : u.intervals) {
    all_join = l.join(all_join, v);
    all_meet = l.meet(all_meet, v);
  }
  for (Elem v : u.points) {
    all_join = l.join(all_join, v);
    all_meet = l.meet(all_meet, v);
  }
  if (all_join != l.top()) {
    report.joins_to_top = false;
    report.witnesses.push_back("values join to " + l.name(all_join) + ", not top");
  }
  if (all_meet != l.bottom()) {
    report.bounded_below = false;
    report.witnesses.push_back("values meet to " + l.name(all_meet) + ", not bottom");
  }
  std::vector<Elem> at_points;
  std::vector<Elem> in_intervals;
  left_joins(u, l.bottom(), [&](Elem a, Elem b) { return l.join(a, b); }, at_points,
             in_intervals);
  for (std::size_t i = 0; i < u.intervals.size(); ++i) {
    if (in_intervals[i] != u.intervals[i]) {
      report.left_limits = false;
      report.witnesses.push_back("join of earlier values " + where(u.breakpoints, i, false) +
                                 " is " + l.name(in_intervals[i]) + ", value is " +
                                 l.name(u.intervals[i]));
    }
  }
  for (std::size_t i = 0; i < u.points.size(); ++i) {
    if (at_points[i] != u.points[i]) {
      report.left_limits = false;
      report.witnesses.push_back("join of earlier values " + where(u.breakpoints, i, true) +
                                 " is " + l.name(at_points[i]) + ", value is " +
                                 l.name(u.points[i]));
    }
  }
  return report;
}

RealCheck check_real(const Oml& l, const LatticeReal& u) {
  return check_real(l, StepFunction<Elem>::from(u));
}

RealCheck check_real(const SpectralPresheaf& p, const StepFunction<ClopenSubobject>& u) {
  check_shape(u);
  RealCheck report;
  ClopenSubobject all_join = p.bottom();
  ClopenSubobject star_join = p.bottom();
  for (const auto* values : {&u.intervals, &u.points}) {
    for (const auto& v : *values) {
      all_join = p.join(all_join, v);
      star_join = p.join(star_join, p.star(v));
    }
  }
  if (!(all_join == p.top())) {
    report.joins_to_top = false;
    report.witnesses.push_back("values join to " + p.format(all_join) + ", not top");
  }
  if (!(star_join == p.top())) {
    report.bounded_below = false;
    report.witnesses.push_back("stars of the values join to " + p.format(star_join) +
                               ", not top");
  }
  std::vector<ClopenSubobject> at_points;
  std::vector<ClopenSubobject> in_intervals;
  left_joins(
      u, p.bottom(), [&](const ClopenSubobject& a, const ClopenSubobject& b) { return p.join(a, b); },
      at_points, in_intervals);
  auto compare = [&](const ClopenSubobject& below, const ClopenSubobject& value,
                     const std::string& place) {
    if (p.double_star(below) == p.double_star(value)) return;
    report.left_limits = false;
    report.witnesses.push_back("double star of the join of earlier values " + place + " is " +
                               p.format(p.double_star(below)) + ", of the value " +
                               p.format(p.double_star(value)));
  };
  for (std::size_t i = 0; i < u.intervals.size(); ++i) {
    compare(in_intervals[i], u.intervals[i], where(u.breakpoints, i, false));
  }
  for (std::size_t i = 0; i < u.points.size(); ++i) {
    compare(at_points[i], u.points[i], where(u.breakpoints, i, true));
  }
  return report;
}

RealCheck check_real(const SpectralPresheaf& p, const SubclReal& u) {
  return check_real(p, StepFunction<ClopenSubobject>::from(u));
}

bool is_regular(const SpectralPresheaf& p, const SubclReal& u) {
  return std::all_of(u.plateaus().begin(), u.plateaus().end(),
                     [&](const ClopenSubobject& s) { return p.is_regular(s); });
}

LatticeReal classical_real(const Oml& l, const Rational& q) {
  return LatticeReal({q}, {l.bottom(), l.top()});
}

SubclReal classical_real(const SpectralPresheaf& p, const Rational& q) {
  return SubclReal({q}, {p.bottom(), p.top()});
}

SubclReal embed_real(const SpectralPresheaf& p, const LatticeReal& x) {
  const RealCheck check = check_real(p.lattice(), x);
  if (!check.pass()) {
    throw Error(ErrorCode::kNotASpectralFamily, check.witnesses.front());
  }
  std::vector<ClopenSubobject> plateaus;
  for (Elem a : x.plateaus()) plateaus.push_back(p.daseinise(a));
  return SubclReal(x.breakpoints(), std::move(plateaus));
}

Elem projection_at(const SpectralPresheaf& p, const SubclReal& u, const Rational& r) {
  return p.to_element(u.value(r));
}

LatticeReal extract_real(const SpectralPresheaf& p, const SubclReal& u) {
  const RealCheck check = check_real(p, u);
  if (!check.pass()) throw Error(ErrorCode::kNotASpectralFamily, check.witnesses.front());
  for (std::size_t i = 0; i < u.plateaus().size(); ++i) {
    if (!p.is_regular(u.plateaus()[i])) {
      throw Error(ErrorCode::kNotRegular, "value " + p.format(u.plateaus()[i]) +
                                              " differs from its double star");
    }
  }
  std::vector<Elem> plateaus;
  for (const auto& s : u.plateaus()) plateaus.push_back(p.to_element(s));
  return LatticeReal(u.breakpoints(), std::move(plateaus));
}

SubclReal regularise(const SpectralPresheaf& p, const SubclReal& u) {
  std::vector<ClopenSubobject> plateaus;
  for (const auto& s : u.plateaus()) plateaus.push_back(p.double_star(s));
  return SubclReal(u.breakpoints(), std::move(plateaus));
}

SubclReal complement_real(const SpectralPresheaf& p, const SubclReal& u) {
  std::vector<ClopenSubobject> plateaus;
  for (const auto& s : u.plateaus()) plateaus.push_back(p.star(s));
  return SubclReal(u.breakpoints(), std::move(plateaus));
}

template <typename V>
std::vector<Rational> representative_points(const StepFamily<V>& u, const StepFamily<V>& v) {
  std::vector<Rational> cuts = u.breakpoints();
  cuts.insert(cuts.end(), v.breakpoints().begin(), v.breakpoints().end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts.empty()) return {Rational(0)};
  std::vector<Rational> out = {cuts.front() - 1};
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    out.push_back(cuts[i]);
    out.push_back(i + 1 < cuts.size() ? (cuts[i] + cuts[i + 1]) / 2 : cuts[i] + 1);
  }
  return out;
}

template std::vector<Rational> representative_points(const StepFamily<Elem>&,
                                                     const StepFamily<Elem>&);
template std::vector<Rational> representative_points(const StepFamily<ClopenSubobject>&,
                                                     const StepFamily<ClopenSubobject>&);

ClopenSubobject real_truth_eq(const SpectralPresheaf& p, const SubclReal& u, const SubclReal& v,
                              Arrow arrow) {
  ClopenSubobject acc = p.top();
  for (const auto& r : representative_points(u, v)) {
    acc = p.meet(acc, p.iff(arrow, u.value(r), v.value(r)));
  }
  return acc;
}

Elem real_truth_eq(const Oml& l, const LatticeReal& u, const LatticeReal& v, Arrow arrow) {
  Elem acc = l.top();
  for (const auto& r : representative_points(u, v)) {
    const Elem a = u.value(r);
    const Elem b = v.value(r);
    acc = l.meet(acc, l.meet(implies(l, arrow, a, b), implies(l, arrow, b, a)));
  }
  return acc;
}

std::vector<RealLiteral> parse_reals(std::string_view text) {
  std::vector<RealLiteral> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto fail = [&](const std::string& what) {
      throw Error(ErrorCode::kSyntaxError,
                  "reals line " + std::to_string(number) + ": " + what);
    };
    if (t.rfind("real", 0) != 0 || t.size() < 5 || !std::isspace(static_cast<unsigned char>(t[4]))) {
      fail("expected 'real <name> = [...]'");
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) fail("missing '='");
    RealLiteral lit;
    lit.name = trim(std::string_view(t).substr(4, eq - 4));
    if (lit.name.empty()) fail("missing name");
    const std::string body = trim(std::string_view(t).substr(eq + 1));
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
      fail("expected a bracketed list of jumps");
    }
    std::size_t pos = 1;
    const std::size_t end = body.size() - 1;
    auto skip = [&] {
      while (pos < end && (std::isspace(static_cast<unsigned char>(body[pos])) || body[pos] == ',')) {
        ++pos;
      }
    };
    skip();
    while (pos < end) {
      if (body[pos] != '(') fail("expected '('");
      const auto comma = body.find(',', pos);
      const auto close = body.find(')', pos);
      if (comma == std::string::npos || close == std::string::npos || comma > close) {
        fail("expected '(rational, value)'");
      }
      Rational q = parse_rational(std::string_view(body).substr(pos + 1, comma - pos - 1));
      std::string value = trim(std::string_view(body).substr(comma + 1, close - comma - 1));
      if (value.empty()) fail("missing value");
      if (!lit.jumps.empty() && !(lit.jumps.back().first < q)) {
        fail("jump points must increase strictly");
      }
      lit.jumps.emplace_back(std::move(q), std::move(value));
      pos = close + 1;
      skip();
    }
    if (lit.jumps.empty()) fail("a real needs at least one jump");
    out.push_back(std::move(lit));
  }
  return out;
}

namespace {

template <typename Algebra>
StepFamily<typename Algebra::Value> literal_to_family(const Algebra& alg,
                                                      const RealLiteral& literal) {
  std::vector<Rational> breakpoints;
  std::vector<typename Algebra::Value> plateaus = {alg.bottom()};
  for (const auto& [q, value] : literal.jumps) {
    breakpoints.push_back(q);
    plateaus.push_back(alg.parse_value(value));
  }
  if (!(plateaus.back() == alg.top())) {
    throw Error(ErrorCode::kNotASpectralFamily,
                "real '" + literal.name + "' must end with the top value");
  }
  return StepFamily<typename Algebra::Value>(std::move(breakpoints), std::move(plateaus));
}

}  // namespace

LatticeReal to_lattice_real(const Oml& lattice, const RealLiteral& literal) {
  return literal_to_family(LatticeAlgebra(lattice), literal);
}

SubclReal to_subcl_real(const SpectralPresheaf& presheaf, const RealLiteral& literal) {
  return literal_to_family(SubclAlgebra(presheaf), literal);
}

std::string format_real(const Oml& l, const LatticeReal& u) {
  std::string out = "[";
  for (std::size_t i = 0; i < u.jumps(); ++i) {
    out += (i ? ", (" : "(") + format_rational(u.breakpoints()[i]) + ", " +
           l.name(u.plateaus()[i + 1]) + ")";
  }
  out += "]";
  if (!(u.plateaus()[0] == l.bottom())) out += " from " + l.name(u.plateaus()[0]);
  return out;
}

std::string format_real(const SpectralPresheaf& p, const SubclReal& u) {
  std::string out = "[";
  for (std::size_t i = 0; i < u.jumps(); ++i) {
    out += (i ? ", (" : "(") + format_rational(u.breakpoints()[i]) + ", " +
           p.format(u.plateaus()[i + 1]) + ")";
  }
  out += "]";
  if (!(u.plateaus()[0] == p.bottom())) out += " from " + p.format(u.plateaus()[0]);
  return out;
}

}  // namespace qworlds
