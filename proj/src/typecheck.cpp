// Copyright 2026 The realtypes Authors
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


#include "realtypes/typecheck.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "realtypes/error.hpp"

namespace realtypes {

DegreeWitness min_realizing_degree(const RealType& type) {
  const int m = static_cast<int>(type.roots());
  int changes = 0;
  for (std::size_t k = 2; k < type.size(); k += 2) {
    if (type[k] != type[k - 2]) ++changes;
  }
  return {2 * m - changes, changes % 2 == 0 ? Parity::kEven : Parity::kOdd,
          changes};
}

bool is_real_type(const RealType& type, int degree) {
  if (degree < 0) {
    throw Error(ErrorCode::kDomainError,
                "degree must be >= 0, got " + std::to_string(degree));
  }
  const DegreeWitness w = min_realizing_degree(type);
  return degree >= w.min_degree && degree % 2 == w.sign_changes % 2;
}

std::vector<RealType> enumerate_real_types(int degree, int roots) {
  if (degree < 0 || roots < 0) {
    throw Error(ErrorCode::kDomainError, "degree and root count must be >= 0");
  }
  std::vector<RealType> out;
  if (roots > degree) return out;
  const std::size_t slots = static_cast<std::size_t>(roots) + 1;
  std::vector<Sign> entries(2 * slots - 1, Sign::kZero);
  for (unsigned long long code = 0; code < (1ULL << slots); ++code) {
    for (std::size_t k = 0; k < slots; ++k) {
      const bool positive = (code >> (slots - 1 - k)) & 1ULL;
      entries[2 * k] = positive ? Sign::kPositive : Sign::kNegative;
    }
    RealType candidate = RealType::validate(entries);
    if (is_real_type(candidate, degree)) out.push_back(std::move(candidate));
  }
  return out;
}

bool is_family_type(const SignMatrix& matrix, std::span<const int> degrees) {
  if (degrees.size() != matrix.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(degrees.size()) + " degrees for " +
                    std::to_string(matrix.rows()) + " rows");
  }
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    if (!is_real_type(condense_row(matrix, i), degrees[i])) return false;
  }
  return true;
}

namespace {

void check_budget(std::size_t family_size, int roots, const SearchOptions& options) {
  const std::size_t cells = family_size * (2 * static_cast<std::size_t>(roots) + 1);
  if (cells > options.cell_budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(cells) + " cells exceed the budget of " +
                    std::to_string(options.cell_budget));
  }
}

// Rows of width 2m+1 with nonzero odd entries, no sign change between two
// zeros, and a condensation realizable at `degree`; lexicographic order.
class RowCandidates {
 public:
  RowCandidates(int degree, int roots)
      : degree_(degree), row_(2 * static_cast<std::size_t>(roots) + 1) {
    extend(0, Sign::kZero);
  }

  std::vector<std::vector<Sign>> take() { return std::move(rows_); }

 private:
  void extend(std::size_t position, Sign run) {
    if (position == row_.size()) {
      if (accept()) rows_.push_back(row_);
      return;
    }
    const bool odd_column = position % 2 == 0;
    for (Sign s : {Sign::kNegative, Sign::kZero, Sign::kPositive}) {
      if (s == Sign::kZero) {
        if (odd_column) continue;
        row_[position] = s;
        extend(position + 1, Sign::kZero);
      } else {
        if (run != Sign::kZero && s != run) continue;
        row_[position] = s;
        extend(position + 1, s);
      }
    }
  }

  bool accept() const {
    std::vector<Sign> condensed;
    for (Sign s : row_) {
      if (s == Sign::kZero || condensed.empty() || condensed.back() == Sign::kZero) {
        condensed.push_back(s);
      }
    }
    return is_real_type(RealType::validate(condensed), degree_);
  }

  int degree_;
  std::vector<Sign> row_;
  std::vector<std::vector<Sign>> rows_;
};

class FamilySearch {
 public:
  FamilySearch(std::span<const int> degrees, int roots)
      : columns_(2 * static_cast<std::size_t>(roots) + 1) {
    for (int d : degrees) candidates_.push_back(RowCandidates(d, roots).take());
  }

  const std::vector<std::vector<Sign>>& first_rows() const { return candidates_.front(); }

  // Completes every matrix whose first row is candidates_[0][first].
  void run_from(std::size_t first, const std::function<void(SignMatrix)>& emit) const {
    std::vector<std::vector<Sign>> rows;
    std::vector<int> zeros(columns_, 0);
    push(rows, zeros, candidates_.front()[first]);
    descend(1, rows, zeros, emit);
  }

 private:
  static void push(std::vector<std::vector<Sign>>& rows, std::vector<int>& zeros,
                   const std::vector<Sign>& row) {
    for (std::size_t j = 0; j < row.size(); ++j) zeros[j] += row[j] == Sign::kZero;
    rows.push_back(row);
  }

  static void pop(std::vector<std::vector<Sign>>& rows, std::vector<int>& zeros) {
    const auto& row = rows.back();
    for (std::size_t j = 0; j < row.size(); ++j) zeros[j] -= row[j] == Sign::kZero;
    rows.pop_back();
  }

  void descend(std::size_t depth, std::vector<std::vector<Sign>>& rows,
               std::vector<int>& zeros,
               const std::function<void(SignMatrix)>& emit) const {
    if (depth == candidates_.size()) {
      for (std::size_t j = 1; j < columns_; j += 2) {
        if (zeros[j] == 0) return;
      }
      emit(SignMatrix::validate(rows));
      return;
    }
    for (const auto& row : candidates_[depth]) {
      push(rows, zeros, row);
      descend(depth + 1, rows, zeros, emit);
      pop(rows, zeros);
    }
  }

  std::size_t columns_;
  std::vector<std::vector<std::vector<Sign>>> candidates_;
};

}  // namespace

void for_each_family_type(std::span<const int> degrees, int roots,
                          const std::function<void(const SignMatrix&)>& visit,
                          const SearchOptions& options) {
  if (degrees.empty()) throw Error(ErrorCode::kEmptyFamily, "degree list is empty");
  if (roots < 0) throw Error(ErrorCode::kDomainError, "root count must be >= 0");
  for (int d : degrees) {
    if (d < 0) throw Error(ErrorCode::kDomainError, "degrees must be >= 0");
  }
  check_budget(degrees.size(), roots, options);

  const FamilySearch search(degrees, roots);
  const std::size_t firsts = search.first_rows().size();
  const std::size_t workers =
      std::min<std::size_t>(std::max(1U, options.jobs), std::max<std::size_t>(firsts, 1));
  if (workers <= 1) {
    for (std::size_t f = 0; f < firsts; ++f) {
      search.run_from(f, [&](SignMatrix m) { visit(m); });
    }
    return;
  }
  // Each worker fills the slots of its own first rows; slots are replayed in
  // order afterwards.
  std::vector<std::vector<SignMatrix>> slots(firsts);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t f = w; f < firsts; f += workers) {
        search.run_from(f, [&](SignMatrix m) { slots[f].push_back(std::move(m)); });
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& slot : slots) {
    for (const auto& m : slot) visit(m);
  }
}

std::vector<SignMatrix> enumerate_family_types(std::span<const int> degrees, int roots,
                                               const SearchOptions& options) {
  std::vector<SignMatrix> out;
  for_each_family_type(
      degrees, roots, [&](const SignMatrix& m) { out.push_back(m); }, options);
  return out;
}

mpz_class oracle_count_any_degree(int family_size, int roots,
                                  const SearchOptions& options) {
  if (family_size < 1) throw Error(ErrorCode::kEmptyFamily, "family size must be >= 1");
  if (roots < 0) throw Error(ErrorCode::kDomainError, "root count must be >= 0");
  const auto n = static_cast<std::size_t>(family_size);
  check_budget(n, roots, options);
  const std::size_t width = 2 * static_cast<std::size_t>(roots) + 1;

  std::vector<std::vector<Sign>> rows(n, std::vector<Sign>(width, Sign::kNegative));
  mpz_class count = 0;
  while (true) {
    if (!find_sign_matrix_violation(rows)) {
      const SignMatrix matrix = SignMatrix::validate(rows);
      bool realizable = true;
      for (std::size_t i = 0; i < n && realizable; ++i) {
        const RealType row = condense_row(matrix, i);
        realizable = is_real_type(row, min_realizing_degree(row).min_degree);
      }
      if (realizable) ++count;
    }
    // Ternary odometer over all cells, last cell fastest.
    std::size_t cell = n * width;
    while (cell > 0) {
      --cell;
      Sign& s = rows[cell / width][cell % width];
      if (s != Sign::kPositive) {
        s = static_cast<Sign>(to_int(s) + 1);
        break;
      }
      s = Sign::kNegative;
      if (cell == 0) return count;
    }
  }
}

}  // namespace realtypes
