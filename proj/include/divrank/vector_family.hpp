// Copyright 2026 The Authors.
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

#ifndef DIVRANK_VECTOR_FAMILY_HPP
#define DIVRANK_VECTOR_FAMILY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "divrank/ground_set.hpp"
#include "divrank/rank_value.hpp"

namespace divrank {

/// One rational vector per label, all of one dimension. The rank of a subset
/// is the dimension of the span of its vectors, by exact Gaussian elimination.
class VectorFamily {
 public:
  /// `vectors` aligned with labels.names().
  VectorFamily(GroundSet labels, std::vector<std::vector<Rational>> vectors)
      : labels_(std::move(labels)), vectors_(std::move(vectors)) {
    if ((int)vectors_.size() != labels_.size())
      throw std::invalid_argument("one vector per label required");
    dim_ = vectors_.empty() ? 0 : vectors_[0].size();
    for (const auto& v : vectors_)
      if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  }

  const GroundSet& labels() const { return labels_; }
  const std::vector<std::vector<Rational>>& vectors() const { return vectors_; }
  std::size_t dimension() const { return dim_; }
  const std::vector<Rational>& vector_of(int i) const { return vectors_[i]; }

  int rank_int(Mask x) const {
    if ((x & ~labels_.full_mask()) != 0) throw DomainError("subset outside labels");
    std::vector<std::vector<Rational>> rows;  // eliminate on the vectors as rows
    for (int i = 0; i < labels_.size(); ++i)
      if (x & (Mask(1) << i)) rows.push_back(vectors_[i]);
    int rank = 0;
    std::size_t col = 0;
    while (rank < (int)rows.size() && col < dim_) {
      int pivot = -1;
      for (int r = rank; r < (int)rows.size(); ++r)
        if (rows[r][col] != Rational(0)) { pivot = r; break; }
      if (pivot < 0) { ++col; continue; }
      std::swap(rows[rank], rows[pivot]);
      for (int r = rank + 1; r < (int)rows.size(); ++r) {
        if (rows[r][col] == Rational(0)) continue;
        Rational factor = rows[r][col] / rows[rank][col];
        for (std::size_t c = col; c < dim_; ++c)
          rows[r][c] -= factor * rows[rank][c];
      }
      ++rank;
      ++col;
    }
    return rank;
  }

  RankValue rank(Mask x) const { return RankValue::exact(Rational(rank_int(x))); }

 private:
  GroundSet labels_;
  std::vector<std::vector<Rational>> vectors_;
  std::size_t dim_ = 0;
};

}  // namespace divrank

#endif  // DIVRANK_VECTOR_FAMILY_HPP
