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

#include "tgbs/executor.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

namespace tgbs {

struct Executor::Impl {
    explicit Impl(int threads) : arena(threads) {}
    tbb::task_arena arena;
};

std::size_t hardware_workers() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

Executor::Executor(std::size_t workers, std::size_t chunk_size)
    : workers_(workers == 0 ? hardware_workers() : workers), chunk_size_(chunk_size) {
    if (chunk_size_ == 0) {
        throw std::invalid_argument("chunk size must be positive");
    }
    if (workers_ > 1) {
        impl_ = std::make_unique<Impl>(static_cast<int>(workers_));
    }
}

Executor::~Executor() = default;
Executor::Executor(Executor &&) noexcept = default;
Executor &Executor::operator=(Executor &&) noexcept = default;

void Executor::for_each_chunk(std::size_t n_items,
                              const std::function<void(std::size_t, std::size_t, std::size_t)> &body) const {
    const std::size_t chunks = chunk_count(n_items);
    auto run = [&](std::size_t c) { body(c, c * chunk_size_, std::min(n_items, (c + 1) * chunk_size_)); };
    if (!impl_ || chunks <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            run(c);
        }
        return;
    }
    impl_->arena.execute([&] {
        tbb::parallel_for(
            tbb::blocked_range<std::size_t>(0, chunks, 1),
            [&](const tbb::blocked_range<std::size_t> &r) {
                for (std::size_t c = r.begin(); c != r.end(); ++c) {
                    run(c);
                }
            },
            tbb::simple_partitioner());
    });
}

void Executor::for_each_index(std::size_t n, const std::function<void(std::size_t)> &body) const {
    if (!impl_ || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    impl_->arena.execute([&] {
        tbb::parallel_for(std::size_t{0}, n, [&](std::size_t i) { body(i); });
    });
}

const Executor &Executor::serial() {
    static const Executor instance(1, 64);
    return instance;
}

}  // namespace tgbs
