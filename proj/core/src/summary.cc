// Copyright 2026 The multisum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "multisum/summary.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "multisum/error.h"

namespace multisum {
namespace {

constexpr double kTieTolerance = 1e-12;

// True if segment a ranks before segment b.
bool RanksBefore(const RankedSegment& a, const RankedSegment& b,
                 const std::vector<int>& lengths) {
  if (std::abs(a.score - b.score) > kTieTolerance) return a.score > b.score;
  const int la = lengths[static_cast<std::size_t>(a.segment)];
  const int lb = lengths[static_cast<std::size_t>(b.segment)];
  if (la != lb) return la < lb;
  return a.segment < b.segment;
}

std::vector<std::size_t> VideosByInformativeness(const RankedList& ranked) {
  std::vector<std::size_t> order(ranked.num_videos());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ranked.informative_score[a] > ranked.informative_score[b];
  });
  return order;
}

}  // namespace

int RankedList::total_segments() const {
  int total = 0;
  for (const auto& segments : per_video) {
    total += static_cast<int>(segments.size());
  }
  return total;
}

Budget ParseBudget(const std::string& text) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (text.find_first_not_of("0123456789") == std::string::npos &&
      !text.empty()) {
    int count = 0;
    auto [ptr, ec] = std::from_chars(begin, end, count);
    if (ec != std::errc() || ptr != end || count < 1) {
      throw InputError("budget must be a positive count or a fraction in "
                       "(0, 1], got '" + text + "'");
    }
    return Budget::Count(count);
  }
  double fraction = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, fraction);
  if (ec != std::errc() || ptr != end || !(fraction > 0.0) ||
      fraction > 1.0) {
    throw InputError("budget must be a positive count or a fraction in "
                     "(0, 1], got '" + text + "'");
  }
  return Budget::Fraction(fraction);
}

int ResolveBudget(const Budget& budget, int total_segments) {
  if (!(budget.value > 0.0)) throw InputError("budget must be positive");
  if (budget.kind == Budget::Kind::kCount) {
    return static_cast<int>(budget.value);
  }
  // Half-up rounding; the epsilon keeps products like 0.15 * 10 at 2.
  const double exact = budget.value * total_segments;
  return std::max(1, static_cast<int>(std::floor(exact + 0.5 + 1e-9)));
}

RankedList Rank(const std::vector<std::string>& video_ids,
                const std::vector<Vector>& row_norms,
                const std::vector<std::vector<int>>& segment_lengths,
                double nonzero_row_tol) {
  if (video_ids.size() != row_norms.size() ||
      segment_lengths.size() != row_norms.size()) {
    throw InputError("rank: video, norm and length lists differ in size");
  }
  RankedList ranked;
  ranked.video_ids = video_ids;
  for (std::size_t v = 0; v < row_norms.size(); ++v) {
    const Vector& norms = row_norms[v];
    const std::vector<int>& lengths = segment_lengths[v];
    if (static_cast<Eigen::Index>(lengths.size()) != norms.size()) {
      throw InputError("rank: video '" + video_ids[v] +
                       "' has mismatched segment lengths");
    }
    // Insertion sort: stable, and well defined even though the tolerance
    // makes the comparison intransitive in pathological cases.
    std::vector<RankedSegment> segments;
    segments.reserve(static_cast<std::size_t>(norms.size()));
    for (Eigen::Index i = 0; i < norms.size(); ++i) {
      RankedSegment s{static_cast<int>(i), norms[i]};
      auto pos = segments.end();
      while (pos != segments.begin() && RanksBefore(s, *(pos - 1), lengths)) {
        --pos;
      }
      segments.insert(pos, s);
    }
    ranked.per_video.push_back(std::move(segments));
    ranked.informative_score.push_back(CountNonzeroRows(norms, nonzero_row_tol));
  }
  return ranked;
}

RankedList Rank(const std::vector<CoefficientMatrix>& zs,
                const std::vector<std::vector<int>>& segment_lengths,
                double nonzero_row_tol) {
  std::vector<std::string> ids;
  std::vector<Vector> norms;
  for (const CoefficientMatrix& z : zs) {
    ids.push_back(z.owner);
    norms.push_back(RowNorms(z.data));
  }
  return Rank(ids, norms, segment_lengths, nonzero_row_tol);
}

Allocation Allocate(const RankedList& ranked, int budget) {
  if (budget < 1) throw InputError("budget must be at least 1");
  const std::size_t m = ranked.num_videos();
  Allocation allocation;
  allocation.quotas.assign(m, 0);
  std::vector<int> capacity(m);
  for (std::size_t v = 0; v < m; ++v) {
    capacity[v] = static_cast<int>(ranked.per_video[v].size());
  }
  const int total = std::accumulate(capacity.begin(), capacity.end(), 0);
  if (budget > total) {
    allocation.warnings.push_back(
        "budget " + std::to_string(budget) + " exceeds the " +
        std::to_string(total) + " available segments; using all of them");
    allocation.quotas = capacity;
    return allocation;
  }

  std::vector<double> weight(m);
  const bool any_informative =
      std::any_of(ranked.informative_score.begin(),
                  ranked.informative_score.end(), [](int s) { return s > 0; });
  if (!any_informative) {
    allocation.warnings.push_back(
        "no video has nonzero coefficient rows; allocating by segment count");
  }
  for (std::size_t v = 0; v < m; ++v) {
    weight[v] = any_informative ? ranked.informative_score[v] : capacity[v];
  }

  // Videos whose proportional share exceeds their size are pinned at
  // capacity and the rest is re-apportioned among the others.
  std::vector<bool> capped(m, false);
  std::vector<double> ideal(m, 0.0);
  while (true) {
    int seats = budget;
    double active_weight = 0.0;
    for (std::size_t v = 0; v < m; ++v) {
      if (capped[v]) {
        seats -= capacity[v];
      } else {
        active_weight += weight[v];
      }
    }
    if (active_weight == 0.0) {
      // Only zero-weight videos remain; share the rest by capacity.
      for (std::size_t v = 0; v < m; ++v) {
        if (!capped[v]) {
          weight[v] = capacity[v];
          active_weight += weight[v];
        }
      }
    }
    bool changed = false;
    for (std::size_t v = 0; v < m; ++v) {
      if (capped[v]) {
        ideal[v] = capacity[v];
        continue;
      }
      ideal[v] = seats * weight[v] / active_weight;
      if (ideal[v] > capacity[v]) {
        capped[v] = true;
        changed = true;
      }
    }
    if (!changed) break;
  }

  int assigned = 0;
  for (std::size_t v = 0; v < m; ++v) {
    allocation.quotas[v] =
        std::min(capacity[v], static_cast<int>(std::floor(ideal[v] + 1e-9)));
    assigned += allocation.quotas[v];
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ra = ideal[a] - allocation.quotas[a];
    const double rb = ideal[b] - allocation.quotas[b];
    if (std::abs(ra - rb) > kTieTolerance) return ra > rb;
    return ranked.informative_score[a] > ranked.informative_score[b];
  });
  for (std::size_t k = 0; assigned < budget; k = (k + 1) % m) {
    const std::size_t v = order[k];
    if (allocation.quotas[v] < capacity[v]) {
      ++allocation.quotas[v];
      ++assigned;
    }
  }
  return allocation;
}

Summary Assemble(const RankedList& ranked, const std::vector<int>& quotas,
                 const Budget& budget) {
  if (quotas.size() != ranked.num_videos()) {
    throw InputError("one quota per video is required");
  }
  Summary summary;
  summary.budget = budget;
  for (const std::size_t v : VideosByInformativeness(ranked)) {
    const auto& segments = ranked.per_video[v];
    const auto take = std::min<std::size_t>(
        segments.size(), static_cast<std::size_t>(std::max(0, quotas[v])));
    for (std::size_t k = 0; k < take; ++k) {
      summary.items.push_back({ranked.video_ids[v], v, segments[k].segment,
                               segments[k].score});
    }
  }
  summary.resolved_budget = static_cast<int>(summary.items.size());
  return summary;
}

Summary Summarize(const RankedList& ranked, const Budget& budget) {
  const int resolved = ResolveBudget(budget, ranked.total_segments());
  Allocation allocation = Allocate(ranked, resolved);
  Summary summary = Assemble(ranked, allocation.quotas, budget);
  summary.resolved_budget = resolved;
  summary.warnings = std::move(allocation.warnings);
  return summary;
}

}  // namespace multisum
