// Copyright 2026 The sepbasis Authors
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

#ifndef SEPBASIS_LINEAR_MAP_HPP
#define SEPBASIS_LINEAR_MAP_HPP

#include <vector>

#include "sepbasis/basis.hpp"

namespace sepbasis {

// Linear map between two framed polynomial spaces. Column j of the matrix
// holds the target-frame coordinates of the image of source member j.
class LinearMap {
 public:
  LinearMap(FamilyRef source, FamilyRef target, RatMatrix m);

  // Column j = coordinates of images[j] in the target frame.
  static LinearMap from_action(FamilyRef source, FamilyRef target,
                               const std::vector<Polynomial>& images);
  static LinearMap identity(FamilyRef frame);
  // Rank-one-ish coordinate projector: member i maps to itself, the rest to 0.
  static LinearMap coordinate_projector(FamilyRef frame, int i);

  const FamilyRef& source() const { return source_; }
  const FamilyRef& target() const { return target_; }
  const RatMatrix& matrix() const { return m_; }
  bool is_square() const { return m_.rows() == m_.cols(); }

  Polynomial apply(const Polynomial& p) const;
  LinearMap inverse() const;  // exact; frames swap

  // Diagonal of an upper-triangular matrix, in frame order. Errors on a
  // non-triangular input instructing the caller to supply eigenvalues
  // explicitly.
  std::vector<Rational> eigenvalues_triangular() const;

  friend bool operator==(const LinearMap& a, const LinearMap& b);
  friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

 private:
  FamilyRef source_, target_;
  RatMatrix m_;
};

// f after g; the inner frames must agree (same label and members).
LinearMap compose(const LinearMap& f, const LinearMap& g);

}  // namespace sepbasis

#endif
