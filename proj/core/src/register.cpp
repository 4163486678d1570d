// Copyright 2026 The teleport-sim Authors
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

#include "teleport/register.hpp"

#include <algorithm>

#include "teleport/common.hpp"

namespace teleport {

Register::Register(std::initializer_list<std::string> labels) : Register(std::vector<std::string>(labels)) {
}

Register::Register(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > kMaxQubits) {
        throw DomainError("register holds " + std::to_string(labels_.size()) + " qubits; at most " +
                          std::to_string(kMaxQubits) + " are supported");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) {
            throw DomainError("qubit labels must be non-empty");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (labels_[i] == labels_[j]) {
                throw DomainError("duplicate qubit label '" + labels_[i] + "'");
            }
        }
    }
}

bool Register::contains(std::string_view label) const noexcept {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t Register::position(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw DomainError("unknown qubit label '" + std::string(label) + "' in register " + to_string());
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> Register::positions(std::span<const std::string> labels) const {
    std::vector<std::size_t> out;
    out.reserve(labels.size());
    for (const auto &l : labels) {
        auto p = position(l);
        if (std::find(out.begin(), out.end(), p) != out.end()) {
            throw DomainError("qubit label '" + l + "' listed twice");
        }
        out.push_back(p);
    }
    return out;
}

Register Register::concat(const Register &other) const {
    std::vector<std::string> joined = labels_;
    for (const auto &l : other.labels_) {
        if (contains(l)) {
            throw DomainError("registers overlap on label '" + l + "'");
        }
        joined.push_back(l);
    }
    return Register(std::move(joined));
}

Register Register::without(std::span<const std::string> removed) const {
    std::vector<std::string> kept;
    for (const auto &l : labels_) {
        if (std::find(removed.begin(), removed.end(), l) == removed.end()) {
            kept.push_back(l);
        }
    }
    return Register(std::move(kept));
}

std::string Register::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i) {
            out += ",";
        }
        out += labels_[i];
    }
    return out + ")";
}

IndexSplit::IndexSplit(std::size_t num_qubits, std::vector<std::size_t> selected)
    : n_(num_qubits), selected_(std::move(selected)) {
    for (std::size_t q = 0; q < n_; ++q) {
        if (std::find(selected_.begin(), selected_.end(), q) == selected_.end()) {
            rest_.push_back(q);
        }
    }
    const std::size_t dim = std::size_t{1} << n_;
    sel_of_.resize(dim);
    rest_of_.resize(dim);
    auto bit = [this](std::size_t full, std::size_t pos) { return (full >> (n_ - 1 - pos)) & 1U; };
    for (std::size_t full = 0; full < dim; ++full) {
        std::size_t s = 0;
        for (auto pos : selected_) {
            s = (s << 1) | bit(full, pos);
        }
        std::size_t r = 0;
        for (auto pos : rest_) {
            r = (r << 1) | bit(full, pos);
        }
        sel_of_[full] = s;
        rest_of_[full] = r;
    }
}

std::size_t IndexSplit::compose(std::size_t rest, std::size_t selected) const noexcept {
    std::size_t full = 0;
    for (std::size_t k = 0; k < selected_.size(); ++k) {
        std::size_t b = (selected >> (selected_.size() - 1 - k)) & 1U;
        full |= b << (n_ - 1 - selected_[k]);
    }
    for (std::size_t k = 0; k < rest_.size(); ++k) {
        std::size_t b = (rest >> (rest_.size() - 1 - k)) & 1U;
        full |= b << (n_ - 1 - rest_[k]);
    }
    return full;
}

}  // namespace teleport
