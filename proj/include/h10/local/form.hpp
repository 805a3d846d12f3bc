#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace h10 {

/// Diagonal quadratic form <d1, ..., dk> over a coefficient domain C
/// (BigRational or RationalFunction). Entries are nonzero; the empty form
/// exists only through `empty()` as the unit of orthogonal sums.
template <class C>
class DiagonalForm {
public:
  explicit DiagonalForm(std::vector<C> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("diagonal form needs at least one entry");
    for (const auto& e : entries_)
      if (e == C()) throw std::invalid_argument("diagonal form entries must be nonzero");
  }
  explicit DiagonalForm(std::initializer_list<C> entries) : DiagonalForm(std::vector<C>(entries)) {}

  static DiagonalForm empty() { return DiagonalForm(); }

  const std::vector<C>& entries() const { return entries_; }
  std::size_t dim() const { return entries_.size(); }
  const C& operator[](std::size_t i) const { return entries_[i]; }

  DiagonalForm scaled(const C& c) const {
    if (c == C()) throw std::invalid_argument("scaling by zero");
    DiagonalForm r = *this;
    for (auto& e : r.entries_) e = e * c;
    return r;
  }

  /// Orthogonal sum.
  friend DiagonalForm operator+(const DiagonalForm& a, const DiagonalForm& b) {
    DiagonalForm r = a;
    r.entries_.insert(r.entries_.end(), b.entries_.begin(), b.entries_.end());
    return r;
  }

  /// Tensor product; <1,a> (x) <1,b> = <1, b, a, ab>.
  friend DiagonalForm tensor(const DiagonalForm& a, const DiagonalForm& b) {
    DiagonalForm r;
    for (const auto& x : a.entries_)
      for (const auto& y : b.entries_) r.entries_.push_back(x * y);
    return r;
  }

  friend bool operator==(const DiagonalForm&, const DiagonalForm&) = default;

private:
  DiagonalForm() = default;
  std::vector<C> entries_;
};

} // namespace h10
