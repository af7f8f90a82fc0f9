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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tgbs {

/// Threshold-detector outcome: bits[i] == 1 means mode i clicked.
struct ClickPattern {
    std::vector<std::uint8_t> bits;
    /// Measurement order that produced (or will evaluate) the pattern; may be empty.
    std::vector<std::size_t> order;

    std::size_t size() const noexcept { return bits.size(); }
    std::size_t clicks() const noexcept;

    /// Bitstring with mode 1 leftmost, e.g. "0011".
    std::string to_string() const;
    static ClickPattern parse(std::string_view text);

    /// Integer whose bit i is the outcome of mode i.
    std::uint64_t to_index() const;
    static ClickPattern from_index(std::uint64_t index, std::size_t n_modes);

    /// Modes that clicked, ascending.
    std::vector<std::size_t> click_modes() const;

    bool operator==(const ClickPattern &other) const { return bits == other.bits; }
};

/// n-1, n-2, ..., 0: measurement starts at the last mode.
std::vector<std::size_t> descending_order(std::size_t n);

bool is_permutation_of(std::span<const std::size_t> order, std::size_t n);

}  // namespace tgbs
