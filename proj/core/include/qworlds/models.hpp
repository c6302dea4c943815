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

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "qworlds/evaluator.hpp"
#include "qworlds/formula.hpp"
#include "qworlds/lset.hpp"
#include "qworlds/random.hpp"

namespace qworlds {

// Every value occurring anywhere in the hereditary structure of u.
ElementSubset support(const LatticeUniverse& universe, LSetId u);
ElementSubset support(const LatticeUniverse& universe, const std::vector<LSetId>& us);
// Amalgam of the joint support: how far the sets are from living in a
// single Boolean context.
Elem commutator(const LatticeUniverse& universe, const std::vector<LSetId>& us);

// Rebuilds sets of one universe in the other, mapping values by
// daseinisation (lattice to subobjects) or by the adjoint (back). The two
// universes must share the lattice, otherwise kAlgebraMismatch.
class UniverseBridge {
 public:
  UniverseBridge(LatticeUniverse& lattice_side, SubclUniverse& subcl_side);

  LSetId lift(LSetId u);
  LSetId project(LSetId u);
  std::vector<LSetId> lift(const std::vector<LSetId>& us);

  const LatticeUniverse& lattice_side() const { return lattice_; }
  const SubclUniverse& subcl_side() const { return subcl_; }

 private:
  LatticeUniverse& lattice_;
  SubclUniverse& subcl_;
  std::unordered_map<LSetId, LSetId> lifted_;
  std::unordered_map<LSetId, LSetId> projected_;
};

struct RandomSetOptions {
  std::size_t max_rank = 3;
  std::size_t max_width = 3;
};

// Random set of rank at most options.max_rank whose values are drawn from
// the lattice (bottom excluded half of the time so members tend to matter).
LSetId random_lset(LatticeUniverse& universe, Rng& rng, const RandomSetOptions& options = {});
// Same, with subobject values from SpectralPresheaf::sample.
LSetId random_lset(SubclUniverse& universe, Rng& rng, const RandomSetOptions& options = {});

struct RandomFormulaOptions {
  std::size_t max_depth = 3;
  bool negation_free = false;
};

// Random Delta0 formula whose free variables are among `vars` (which must
// be non-empty). Bound variables are fresh names x0, x1, ...
FormulaPtr random_delta0(Rng& rng, const std::vector<std::string>& vars,
                         const RandomFormulaOptions& options = {});

// Free variables of f in sorted order; arguments bind to them positionally.
std::vector<std::string> argument_order(const Formula& f);

struct TransferCase {
  bool holds = false;
  std::string bound;   // the smaller side, printed
  std::string value;   // the formula's truth value, printed
};

// daseinise([f(us)]) <= [f(lift(us))] under the given arrow. The inequality
// is guaranteed for the Sasaki arrow; the others are accepted so that
// counterexamples can be searched for. Requires a negation-free Delta0
// formula (kFormulaNotDelta0, kFormulaNotNegationFree).
TransferCase check_transfer_negfree(const Formula& f, UniverseBridge& bridge,
                                    const std::vector<LSetId>& us, Arrow arrow = Arrow::kSasaki);
// commutator(us) <= [f(us)]_arrow for a ZFC-provable Delta0 formula.
TransferCase check_transfer_zfc(const Formula& f, const LatticeUniverse& universe,
                                const std::vector<LSetId>& us, Arrow arrow);
// daseinise(commutator(us)) <= [f(lift(us))]_S for a ZFC-provable
// negation-free Delta0 formula.
TransferCase check_transfer_zfc_delta(const Formula& f, UniverseBridge& bridge,
                                      const std::vector<LSetId>& us);

struct ProvableFormula {
  std::string id;
  FormulaPtr formula;
  std::string justification;
};

// Curated Delta0 theorems of ZFC shipped with the library.
const std::vector<ProvableFormula>& provable_delta0();
// Parses the `id | formula | justification` format, ignoring blank lines
// and lines starting with '#'.
std::vector<ProvableFormula> parse_provable_list(std::string_view text);

}  // namespace qworlds
