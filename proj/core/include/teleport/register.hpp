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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace teleport {

/// Ordered list of unique qubit labels.
///
/// The label order fixes the tensor ordering: in a basis index the first label
/// is the most significant bit. With register (a, A, B) the index 0b100 is
/// |1>_a |0>_A |0>_B.
class Register {
  public:
    Register() = default;
    Register(std::initializer_list<std::string> labels);
    explicit Register(std::vector<std::string> labels);

    std::size_t size() const noexcept {
        return labels_.size();
    }
    std::size_t dimension() const noexcept {
        return std::size_t{1} << labels_.size();
    }
    const std::vector<std::string> &labels() const noexcept {
        return labels_;
    }
    const std::string &operator[](std::size_t i) const {
        return labels_[i];
    }

    bool contains(std::string_view label) const noexcept;
    std::size_t position(std::string_view label) const;
    std::vector<std::size_t> positions(std::span<const std::string> labels) const;

    /// Labels of `this` followed by labels of `other`; they must be disjoint.
    Register concat(const Register &other) const;
    /// Remaining labels, in order, after dropping `removed`.
    Register without(std::span<const std::string> removed) const;

    bool operator==(const Register &other) const = default;

    std::string to_string() const;

  private:
    std::vector<std::string> labels_;
};

/// Splits basis indices of a register into (selected, rest) sub-indices.
///
/// The selected sub-index uses the order of the selected positions (first
/// position most significant); the rest sub-index keeps register order.
class IndexSplit {
  public:
    IndexSplit(std::size_t num_qubits, std::vector<std::size_t> selected);

    std::size_t selected_dimension() const noexcept {
        return std::size_t{1} << selected_.size();
    }
    std::size_t rest_dimension() const noexcept {
        return std::size_t{1} << rest_.size();
    }
    std::size_t selected_index(std::size_t full) const noexcept {
        return sel_of_[full];
    }
    std::size_t rest_index(std::size_t full) const noexcept {
        return rest_of_[full];
    }
    std::size_t compose(std::size_t rest, std::size_t selected) const noexcept;

  private:
    std::size_t n_;
    std::vector<std::size_t> selected_;
    std::vector<std::size_t> rest_;
    std::vector<std::size_t> sel_of_;
    std::vector<std::size_t> rest_of_;
};

}  // namespace teleport
