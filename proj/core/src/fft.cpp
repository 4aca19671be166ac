// Copyright 2026 The afdm-isac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "afdm/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace afdm::fft {

namespace {

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};
using Plan = std::unique_ptr<fftw_plan_s, PlanDeleter>;

// (n, count, stride, dist, sign)
using PlanKey = std::tuple<int, int, int, int, int>;

class PlanCache {
 public:
  // FFTW_ESTIMATE keeps plan selection deterministic across runs, so results
  // are bit-reproducible; FFTW_UNALIGNED lets one plan serve any buffer.
  fftw_plan get(const PlanKey& key) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second.get();
    const auto [n, count, stride, dist, sign] = key;
    const std::size_t span = static_cast<std::size_t>(count - 1) * dist + static_cast<std::size_t>(n - 1) * stride + 1;
    auto* scratch = fftw_alloc_complex(span);
    int dims[1] = {n};
    fftw_plan p = fftw_plan_many_dft(1, dims, count, scratch, nullptr, stride, dist, scratch, nullptr, stride, dist,
                                     sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    return plans_.emplace(key, Plan(p)).first->second.get();
  }

 private:
  std::mutex mutex_;
  std::map<PlanKey, Plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void run(std::span<cplx> data, int n, int count, int stride, int dist, int sign) {
  if (n <= 0 || count <= 0) return;
  const std::size_t needed = static_cast<std::size_t>(count - 1) * dist + static_cast<std::size_t>(n - 1) * stride + 1;
  if (data.size() < needed) throw ConfigError("fft: buffer too small for requested layout");
  fftw_plan plan = cache().get({n, count, stride, dist, sign});
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, ptr, ptr);
}

}  // namespace

void forward(std::span<cplx> data) {
  run(data, static_cast<int>(data.size()), 1, 1, static_cast<int>(data.size()), FFTW_FORWARD);
}

void backward(std::span<cplx> data) {
  run(data, static_cast<int>(data.size()), 1, 1, static_cast<int>(data.size()), FFTW_BACKWARD);
}

void forward_many(std::span<cplx> data, int n, int count, int stride, int dist) {
  run(data, n, count, stride, dist, FFTW_FORWARD);
}

void backward_many(std::span<cplx> data, int n, int count, int stride, int dist) {
  run(data, n, count, stride, dist, FFTW_BACKWARD);
}

}  // namespace afdm::fft
