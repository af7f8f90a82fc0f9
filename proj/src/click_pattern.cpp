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

#include "tgbs/click_pattern.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tgbs {

std::size_t ClickPattern::clicks() const noexcept {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

std::string ClickPattern::to_string() const {
    std::string s(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i) {
        s[i] = bits[i] ? '1' : '0';
    }
    return s;
}

ClickPattern ClickPattern::parse(std::string_view text) {
    ClickPattern p;
    p.bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("click pattern must contain only '0' and '1'");
        }
        p.bits.push_back(c == '1' ? 1 : 0);
    }
    if (p.bits.empty()) {
        throw std::invalid_argument("click pattern is empty");
    }
    return p;
}

std::uint64_t ClickPattern::to_index() const {
    if (bits.size() > 63) {
        throw std::out_of_range("pattern too long for an integer index");
    }
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        idx |= static_cast<std::uint64_t>(bits[i] & 1u) << i;
    }
    return idx;
}

ClickPattern ClickPattern::from_index(std::uint64_t index, std::size_t n_modes) {
    ClickPattern p;
    p.bits.resize(n_modes);
    for (std::size_t i = 0; i < n_modes; ++i) {
        p.bits[i] = static_cast<std::uint8_t>((index >> i) & 1u);
    }
    return p;
}

std::vector<std::size_t> ClickPattern::click_modes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> descending_order(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.rbegin(), order.rend(), std::size_t{0});
    return order;
}

bool is_permutation_of(std::span<const std::size_t> order, std::size_t n) {
    if (order.size() != n) {
        return false;
    }
    std::vector<bool> seen(n, false);
    for (std::size_t m : order) {
        if (m >= n || seen[m]) {
            return false;
        }
        seen[m] = true;
    }
    return true;
}

}  // namespace tgbs
