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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qworlds/oml.hpp"
#include "qworlds/presheaf.hpp"

namespace qworlds {

// Exact rationals; expression templates are disabled so arithmetic yields
// plain values.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

// Accepts integers and fractions such as "-3" or "7/2". Throws kSyntaxError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

// A left-continuous step family: the value at r is plateaus[i] where i is
// the number of breakpoints strictly below r. Equal neighbouring plateaus
// are merged, so equality of families is equality of their canonical form.
template <typename V>
class StepFamily {
 public:
  // Needs plateaus.size() == breakpoints.size() + 1 and strictly increasing
  // breakpoints; throws kInvalidArgument otherwise.
  StepFamily(std::vector<Rational> breakpoints, std::vector<V> plateaus);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<V>& plateaus() const { return plateaus_; }
  std::size_t jumps() const { return breakpoints_.size(); }
  const V& value(const Rational& r) const;

  friend bool operator==(const StepFamily& a, const StepFamily& b) {
    return a.breakpoints_ == b.breakpoints_ && a.plateaus_ == b.plateaus_;
  }

 private:
  std::vector<Rational> breakpoints_;
  std::vector<V> plateaus_;
};

// A step function with independent values at the breakpoints, for families
// that need not be left-continuous. intervals[i] holds on the open interval
// after the i-th breakpoint (intervals[0] below the first); points[i] is the
// value at breakpoint i.
template <typename V>
struct StepFunction {
  std::vector<Rational> breakpoints;
  std::vector<V> intervals;
  std::vector<V> points;

  const V& value(const Rational& r) const;
  static StepFunction from(const StepFamily<V>& family);
};

extern template class StepFamily<Elem>;
extern template class StepFamily<ClopenSubobject>;
extern template struct StepFunction<Elem>;
extern template struct StepFunction<ClopenSubobject>;

using LatticeReal = StepFamily<Elem>;
using SubclReal = StepFamily<ClopenSubobject>;

// Outcome of checking the Dedekind-real conditions on a step function.
struct RealCheck {
  bool joins_to_top = true;   // the values join to top
  bool bounded_below = true;  // lattice: values meet to bottom; subobjects: stars join to top
  bool left_limits = true;    // each value is determined by the values strictly below
  std::vector<std::string> witnesses;

  bool pass() const { return joins_to_top && bounded_below && left_limits; }
};

// Spectral-family conditions on the lattice side: the join below every r is
// the value at r, without double stars.
RealCheck check_real(const Oml& lattice, const StepFunction<Elem>& u);
RealCheck check_real(const Oml& lattice, const LatticeReal& u);
// Real-number conditions in the subobject universe; the left-limit condition
// compares double stars.
RealCheck check_real(const SpectralPresheaf& presheaf, const StepFunction<ClopenSubobject>& u);
RealCheck check_real(const SpectralPresheaf& presheaf, const SubclReal& u);

bool is_regular(const SpectralPresheaf& presheaf, const SubclReal& u);

LatticeReal classical_real(const Oml& lattice, const Rational& q);
SubclReal classical_real(const SpectralPresheaf& presheaf, const Rational& q);

// Pointwise daseinisation of a spectral family. Throws kNotASpectralFamily.
SubclReal embed_real(const SpectralPresheaf& presheaf, const LatticeReal& x);
// The element approximated by the value at r.
Elem projection_at(const SpectralPresheaf& presheaf, const SubclReal& u, const Rational& r);
// Pointwise adjoint of a regular real. Throws kNotASpectralFamily if u is not
// a real and kNotRegular if some value differs from its double star.
LatticeReal extract_real(const SpectralPresheaf& presheaf, const SubclReal& u);
// Pointwise double star.
SubclReal regularise(const SpectralPresheaf& presheaf, const SubclReal& u);
// Pointwise star. The result decreases and is not itself a real.
SubclReal complement_real(const SpectralPresheaf& presheaf, const SubclReal& u);

// Same maps under the names used when relating reals of the two universes.
inline SubclReal bridge_to_subcl(const SpectralPresheaf& p, const LatticeReal& v) {
  return embed_real(p, v);
}
inline LatticeReal bridge_to_lattice(const SpectralPresheaf& p, const SubclReal& u) {
  return extract_real(p, u);
}

// Truth value of r being a member of u: the value at r.
template <typename V>
const V& member_truth(const StepFamily<V>& u, const Rational& r) {
  return u.value(r);
}

// Merged breakpoints plus one point inside every open interval they cut
// out, enough to see every value of both families.
template <typename V>
std::vector<Rational> representative_points(const StepFamily<V>& u, const StepFamily<V>& v);

// Meet over all rationals r of (u(r) <=> v(r)), computed on representative
// points.
ClopenSubobject real_truth_eq(const SpectralPresheaf& presheaf, const SubclReal& u,
                              const SubclReal& v, Arrow arrow);
Elem real_truth_eq(const Oml& lattice, const LatticeReal& u, const LatticeReal& v, Arrow arrow);

// `real name = [ (q1, value1), (q2, value2) ]`: jumps to value_i at q_i,
// starting from bottom. Lines starting with '#' are comments.
struct RealLiteral {
  std::string name;
  std::vector<std::pair<Rational, std::string>> jumps;
};

std::vector<RealLiteral> parse_reals(std::string_view text);
// Values are element names. The final value must be top
// (kNotASpectralFamily).
LatticeReal to_lattice_real(const Oml& lattice, const RealLiteral& literal);
// Values are element names (daseinised) or subobject literals.
SubclReal to_subcl_real(const SpectralPresheaf& presheaf, const RealLiteral& literal);

std::string format_real(const Oml& lattice, const LatticeReal& u);
std::string format_real(const SpectralPresheaf& presheaf, const SubclReal& u);

}  // namespace qworlds
