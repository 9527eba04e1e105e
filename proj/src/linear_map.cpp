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

#include "sepbasis/linear_map.hpp"

namespace sepbasis {

LinearMap::LinearMap(FamilyRef source, FamilyRef target, RatMatrix m)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(m)) {
  if (!source_ || !target_) fail(ErrorKind::Domain, "linear map with null frame");
  if (m_.rows() != target_->dim() || m_.cols() != source_->dim())
    fail(ErrorKind::Domain, "matrix shape does not match frames: " + std::to_string(m_.rows()) +
                                "x" + std::to_string(m_.cols()) + " vs target dim " +
                                std::to_string(target_->dim()) + ", source dim " +
                                std::to_string(source_->dim()));
}

LinearMap LinearMap::from_action(FamilyRef source, FamilyRef target,
                                 const std::vector<Polynomial>& images) {
  if (!source || !target) fail(ErrorKind::Domain, "linear map with null frame");
  if (static_cast<int>(images.size()) != source->dim())
    fail(ErrorKind::Domain, "image count " + std::to_string(images.size()) +
                                " does not match source dimension " +
                                std::to_string(source->dim()));
  RatMatrix m(target->dim(), source->dim());
  for (int j = 0; j < source->dim(); ++j) {
    std::vector<Rational> c;
    try {
      c = target->coordinates(images[static_cast<std::size_t>(j)]);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotInSpan) throw;
      fail(ErrorKind::NotInSpan, "image " + std::to_string(j) + " is outside the target frame: " +
                                     std::string(e.what()));
    }
    for (int i = 0; i < target->dim(); ++i) m.at(i, j) = c[static_cast<std::size_t>(i)];
  }
  return LinearMap(std::move(source), std::move(target), std::move(m));
}

LinearMap LinearMap::identity(FamilyRef frame) {
  RatMatrix m = RatMatrix::identity(frame->dim());
  FamilyRef f = frame;
  return LinearMap(std::move(f), std::move(frame), std::move(m));
}

LinearMap LinearMap::coordinate_projector(FamilyRef frame, int i) {
  if (i < 0 || i >= frame->dim())
    fail(ErrorKind::Domain, "projector index " + std::to_string(i) +
                                " out of range for dimension " + std::to_string(frame->dim()));
  RatMatrix m(frame->dim(), frame->dim());
  m.at(i, i) = Rational(1);
  FamilyRef f = frame;
  return LinearMap(std::move(f), std::move(frame), std::move(m));
}

Polynomial LinearMap::apply(const Polynomial& p) const {
  return target_->combine(m_.apply(source_->coordinates(p)));
}

LinearMap LinearMap::inverse() const {
  if (!is_square()) fail(ErrorKind::Domain, "inverse of a non-square map");
  return LinearMap(target_, source_, m_.inverse());
}

std::vector<Rational> LinearMap::eigenvalues_triangular() const {
  if (!is_square()) fail(ErrorKind::Domain, "eigenvalues of a non-square map");
  if (!m_.is_upper_triangular())
    fail(ErrorKind::Domain,
         "map is not upper triangular in its frame; supply eigenvalues explicitly");
  return m_.diagonal();
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.m_ == b.m_;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (*f.source() != *g.target())
    fail(ErrorKind::FrameMismatch, "cannot compose: inner frames differ ('" +
                                       f.source()->label() + "' dim " +
                                       std::to_string(f.source()->dim()) + " vs '" +
                                       g.target()->label() + "' dim " +
                                       std::to_string(g.target()->dim()) + ")");
  return LinearMap(g.source(), f.target(), f.matrix() * g.matrix());
}

}  // namespace sepbasis
