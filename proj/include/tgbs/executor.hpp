// Copyright 2026 The tgbs Authors
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

#pragma once

#include <cstddef>
#include <functional>
#include <memory>

namespace tgbs {

/// Fixed-granularity parallel loop over contiguous chunks.
///
/// Work is split into ceil(n / chunk_size) chunks whose boundaries depend only
/// on `chunk_size`. Callers write per-chunk partial results into slots indexed
/// by chunk and reduce them in chunk order, which makes results independent of
/// the worker count.
class Executor {
  public:
    /// `workers == 0` means all available cores.
    explicit Executor(std::size_t workers = 0, std::size_t chunk_size = 64);
    ~Executor();
    Executor(Executor &&) noexcept;
    Executor &operator=(Executor &&) noexcept;

    std::size_t workers() const noexcept { return workers_; }
    std::size_t chunk_size() const noexcept { return chunk_size_; }

    std::size_t chunk_count(std::size_t n_items) const noexcept {
        return (n_items + chunk_size_ - 1) / chunk_size_;
    }

    /// Calls body(chunk, begin, end) for every chunk, possibly concurrently.
    void for_each_chunk(std::size_t n_items,
                        const std::function<void(std::size_t, std::size_t, std::size_t)> &body) const;

    /// Calls body(i) for i in [0, n) with per-item granularity. Items must be
    /// independent; results go to per-index slots.
    void for_each_index(std::size_t n, const std::function<void(std::size_t)> &body) const;

    /// Shared serial executor (one worker).
    static const Executor &serial();

  private:
    struct Impl;
    std::size_t workers_;
    std::size_t chunk_size_;
    std::unique_ptr<Impl> impl_;
};

std::size_t hardware_workers();

}  // namespace tgbs
