/*
 * Copyright 2026 The semdecomp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstddef>

namespace semdecomp {

// Variances below this are clamped before entering the ratio terms.
inline constexpr double kVarianceFloor = 1e-12;

struct GaussianSummary {
  double mean = 0;
  double variance = 1;
  std::size_t count = 0;
};

struct BhattacharyyaResult {
  double distance = 0;
  int sign = +1;         // sign of (mean_p - mean_q); zero maps to +1
  bool clamped = false;  // a variance was raised to kVarianceFloor
};

// Bhattacharyya distance between two univariate normals:
//   1/4 ln(1/4 (vp/vq + vq/vp + 2)) + 1/4 (mp - mq)^2 / (vp + vq)
// The log term is evaluated as 1/4 log1p((vp - vq)^2 / (4 vp vq)), which is
// the same quantity without cancellation near vp == vq, and is exactly
// symmetric in its arguments.
inline BhattacharyyaResult bhattacharyya_distance(const GaussianSummary& p,
                                                  const GaussianSummary& q) noexcept {
  BhattacharyyaResult r;
  double vp = p.variance;
  double vq = q.variance;
  if (!(vp >= kVarianceFloor)) {
    vp = kVarianceFloor;
    r.clamped = true;
  }
  if (!(vq >= kVarianceFloor)) {
    vq = kVarianceFloor;
    r.clamped = true;
  }
  const double dv = vp - vq;
  const double dm = p.mean - q.mean;
  r.distance = 0.25 * std::log1p((dv * dv) / (4.0 * (vp * vq))) + 0.25 * (dm * dm) / (vp + vq);
  r.sign = dm < 0 ? -1 : +1;
  return r;
}

}  // namespace semdecomp
