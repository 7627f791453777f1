// Copyright 2026 The qassert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QASSERT_KRAUS_HPP_
#define QASSERT_KRAUS_HPP_

#include <vector>

#include "qassert/linalg.hpp"

namespace qassert {

// Channel as a Kraus operator set {K_i}; construction checks trace
// preservation, ||sum K_i^dag K_i - I||_F < 1e-9.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<CMatrix> operators);

  const std::vector<CMatrix>& operators() const noexcept { return ops_; }
  Eigen::Index dim() const noexcept { return ops_.front().cols(); }

  CMatrix apply(const CMatrix& rho) const;

 private:
  std::vector<CMatrix> ops_;
};

}  // namespace qassert

#endif  // QASSERT_KRAUS_HPP_
