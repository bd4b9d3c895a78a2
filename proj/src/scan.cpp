// Copyright 2026-present the chm6 authors
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

#include "chm/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "chm/census.hpp"
#include "chm/families.hpp"

namespace chm {

double grid_coordinate(int k, int gridN) {
    return -kHalfPi + static_cast<double>(k) * kPi / static_cast<double>(gridN);
}

CensusRecord census_record(double x1, double x2, Tolerance tol) {
    const FamilyPoint p(x1, x2);
    const Matrix h = family_h_closure(p);
    CensusRecord rec;
    rec.x1 = x1;
    rec.x2 = x2;
    rec.limit = family_singular_at(p);
    rec.N = census_2x2(h, tol).count;
    rec.gramResidual = gram_residual(h);
    rec.h2Found = h2_block_structure(h, tol).has_value();
    rec.forbidden = !forbidden_count_check(rec.N);
    return rec;
}

std::vector<CensusRecord> run_scan(const ScanConfig& config) {
    if (config.gridN < 2) throw Error(ErrorKind::InvalidArgument, "grid size must be at least 2");
    const std::size_t n = static_cast<std::size_t>(config.gridN);
    const std::size_t total = n * n;
    std::vector<CensusRecord> records(total);

    unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto work = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            try {
                const int k1 = static_cast<int>(i / n) + 1;
                const int k2 = static_cast<int>(i % n) + 1;
                records[i] = census_record(grid_coordinate(k1, config.gridN), grid_coordinate(k2, config.gridN),
                                           config.tol);
            } catch (...) {
                std::lock_guard<std::mutex> guard(failure_lock);
                if (!failure) failure = std::current_exception();
                next = total;
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return records;
}

ScanSummary summarize(const std::vector<CensusRecord>& records) {
    ScanSummary s;
    s.rows = records.size();
    if (records.empty()) return s;
    s.minN = records.front().N;
    s.maxN = records.front().N;
    for (const auto& r : records) {
        s.minN = std::min(s.minN, r.N);
        s.maxN = std::max(s.maxN, r.N);
        s.forbiddenCount += r.forbidden ? 1 : 0;
    }
    return s;
}

}  // namespace chm
