// Copyright 2026 The nearviz Authors
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

// Fans, alternating paths and single-edge augmentation along a truncated
// Vizing chain.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "nearviz/coloring.hpp"
#include "nearviz/rng.hpp"

namespace nearviz {

/// Pivot x with leaves y_0..y_{k-1}. `edges[i]` is the edge x y_i.
/// Valid under a coloring when x y_0 is blank and color(x y_i) is missing at
/// y_{i-1} for 1 <= i < k.
struct Fan {
  Vertex pivot = kNoVertex;
  std::vector<Vertex> leaves;
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return leaves.size(); }
  bool operator==(const Fan&) const = default;
};

/// Path x_0..x_s whose edges are colored alpha, beta, alpha, ... starting at
/// x_0. `edges[i]` joins vertices[i] and vertices[i+1].
struct AlternatingPath {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  Color alpha = kBlank;
  Color beta = kBlank;

  std::size_t length() const noexcept { return edges.size(); }
  Vertex start() const { return vertices.front(); }
  Vertex end() const { return vertices.back(); }
  bool operator==(const AlternatingPath&) const = default;
};

/// Fan construction output: alpha is missing at y_{k-1} and y_{j-1}, 1 <= j <= k.
struct FanResult {
  Fan fan;
  Color alpha = kBlank;
  std::size_t j = 0;

  bool operator==(const FanResult&) const = default;
};

struct VizingChain {
  Fan fan;
  AlternatingPath path;
  Color alpha = kBlank;
  std::size_t j = 0;
  /// Coloring and version the chain was built against.
  const PartialColoring* source = nullptr;
  std::uint64_t stamp = 0;

  /// Structural equality; ignores the stamp.
  bool same_shape(const VizingChain& o) const {
    return fan == o.fan && path == o.path && alpha == o.alpha && j == o.j;
  }
};

enum class ChainFailure {
  kFanExhausted,    // some leaf has no sampled color missing
  kPivotExhausted,  // no sampled color missing at the pivot
};

using ChainOutcome = std::variant<VizingChain, ChainFailure>;

/// Raised when a chain is applied to a coloring mutated after the chain was
/// built.
class StaleChainError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Vertex -> fan position marks, sized to the graph. Reused across calls so
/// fan membership is O(1) without an O(n) clear; every mark set by a call is
/// cleared before it returns.
struct FanScratch {
  static constexpr std::uint32_t kUnset = UINT32_MAX;

  explicit FanScratch(std::size_t n) : position(n, kUnset) {}

  std::vector<std::uint32_t> position;
};

/// Builds a fan around pivot x starting at blank edge e, choosing each next
/// color as the smallest color of C missing at the current leaf. Returns
/// nullopt (FAIL) when a leaf misses no color of C. C must be sorted ascending
/// without duplicates and lie in [1, q]. O(|C|^2).
std::optional<FanResult> make_fan(const PartialColoring& c, EdgeId e, Vertex x,
                                  std::span<const Color> palette,
                                  FanScratch& scratch);
std::optional<FanResult> make_fan(const PartialColoring& c, EdgeId e, Vertex x,
                                  std::span<const Color> palette);

/// Fan plus the alpha/beta path from the pivot, truncated to `max_path` edges.
/// beta is the smallest color of C missing at the pivot. When the fan is
/// already happy (j == k) the path is the single vertex x. O(|C|^2 + max_path).
ChainOutcome vizing_chain(const PartialColoring& c, EdgeId e, Vertex x,
                          std::span<const Color> palette, std::size_t max_path,
                          FanScratch& scratch);
ChainOutcome vizing_chain(const PartialColoring& c, EdgeId e, Vertex x,
                          std::span<const Color> palette,
                          std::size_t max_path);

/// x y_i takes the old color of x y_{i+1}; x y_{k-1} becomes blank.
/// Throws std::invalid_argument if `f` is not a valid fan under `c`.
void shift_fan(PartialColoring& c, const Fan& f);

/// Swaps alpha and beta along `p`. Throws std::invalid_argument unless `p` is
/// a maximal alternating path under `c`. A zero-length path is a no-op.
void flip_path(PartialColoring& c, const AlternatingPath& p);

enum class AugmentCase {
  kHappy,      // empty path: shift the whole fan
  kShort,      // path shorter than the cap, flipped in full
  kLongPrefix, // capped path, flag an edge, shift the prefix fan
  kLongWhole,  // capped path, flag an edge, shift the whole fan
};

std::string_view to_string(AugmentCase kase);

struct AugmentOutcome {
  /// The chain's initial blank edge, now colored.
  EdgeId colored = kNoEdge;
  /// Edge uncolored at the truncation point, if the path hit the cap.
  std::optional<EdgeId> flagged;
  AugmentCase kase = AugmentCase::kHappy;
  /// True when the whole fan was shifted, false for the prefix y_0..y_{j-1}.
  bool shifted_whole_fan = true;
};

/// Applies a chain built by vizing_chain against the current state of `c`.
///
/// Empty path: shift the fan and color x y_{k-1} with alpha. Path of exactly
/// `max_path` edges: draw l' uniform in [1, max_path], uncolor the l'-th path
/// edge and keep the prefix x_0..x_{l'-1}. Otherwise keep the whole path. The
/// kept path is flipped; if it ends at y_{j-1} the whole fan is shifted and
/// x y_{k-1} colored alpha, else the prefix fan y_0..y_{j-1} is shifted and
/// x y_{j-1} colored alpha.
///
/// Throws StaleChainError if `c` changed since the chain was built.
AugmentOutcome augment(PartialColoring& c, const VizingChain& chain,
                       std::size_t max_path, Rng& rng);

}  // namespace nearviz
