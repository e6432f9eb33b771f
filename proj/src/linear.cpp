#include "evoder/linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace evoder {

namespace {

// a - factor * b, both sorted.
SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t ia = 0;
  std::size_t ib = 0;
  while (ia < a.size() || ib < b.size()) {
    if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) {
      out.push_back(a[ia++]);
    } else if (ia == a.size() || b[ib].first < a[ia].first) {
      out.emplace_back(b[ib].first, -(factor * b[ib].second));
      ++ib;
    } else {
      Rational v = a[ia].second - factor * b[ib].second;
      if (!v.is_zero()) out.emplace_back(a[ia].first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

const Rational* find_entry(const SparseVector& v, int column) {
  auto it = std::lower_bound(v.begin(), v.end(), column,
                             [](const auto& entry, int c) { return entry.first < c; });
  if (it == v.end() || it->first != column) return nullptr;
  return &it->second;
}

}  // namespace

SparseVector to_sparse(const std::vector<Rational>& dense) {
  SparseVector out;
  for (std::size_t c = 0; c < dense.size(); ++c) {
    if (!dense[c].is_zero()) out.emplace_back(static_cast<int>(c), dense[c]);
  }
  return out;
}

std::vector<Rational> to_dense(const SparseVector& v, int columns) {
  std::vector<Rational> out(static_cast<std::size_t>(columns));
  for (const auto& [c, x] : v) out[static_cast<std::size_t>(c)] = x;
  return out;
}

ReducedEchelon::ReducedEchelon(int columns) : columns_(columns), row_of_pivot_(static_cast<std::size_t>(columns), -1) {}

SparseVector ReducedEchelon::reduce(const SparseVector& v) const {
  // Stored rows vanish on every other pivot column, so only the pivot entries
  // already present in v need eliminating.
  std::vector<std::pair<int, Rational>> pivots;
  for (const auto& [c, x] : v) {
    if (c < 0 || c >= columns_) throw std::out_of_range("column outside the system");
    if (row_of_pivot_[static_cast<std::size_t>(c)] >= 0) pivots.emplace_back(c, x);
  }
  SparseVector out = v;
  for (const auto& [c, x] : pivots) {
    out = axpy(out, x, rows_[static_cast<std::size_t>(row_of_pivot_[static_cast<std::size_t>(c)])]);
  }
  return out;
}

bool ReducedEchelon::insert(const SparseVector& row) {
  SparseVector r = reduce(row);
  if (r.empty()) return false;
  const int pivot = r.back().first;
  const Rational lead = r.back().second;
  for (auto& [c, x] : r) x /= lead;
  for (auto& existing : rows_) {
    if (const Rational* x = find_entry(existing, pivot)) {
      const Rational factor = *x;
      existing = axpy(existing, factor, r);
    }
  }
  row_of_pivot_[static_cast<std::size_t>(pivot)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<int> ReducedEchelon::pivot_columns() const {
  std::vector<int> out;
  for (int c = 0; c < columns_; ++c) {
    if (row_of_pivot_[static_cast<std::size_t>(c)] >= 0) out.push_back(c);
  }
  return out;
}

std::vector<int> ReducedEchelon::free_columns() const {
  std::vector<int> out;
  for (int c = 0; c < columns_; ++c) {
    if (row_of_pivot_[static_cast<std::size_t>(c)] < 0) out.push_back(c);
  }
  return out;
}

std::vector<SparseVector> ReducedEchelon::kernel_basis() const {
  std::vector<SparseVector> basis;
  for (int f : free_columns()) {
    SparseVector x;
    for (const auto& row : rows_) {
      if (const Rational* coeff = find_entry(row, f)) x.emplace_back(row.back().first, -*coeff);
    }
    x.emplace_back(f, Rational(1));
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace evoder
