// Dense linear algebra over GF(q): echelon forms, kernels, rank, and minimal
// polynomials via Krylov relations.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "msalg/common.hpp"
#include "msalg/fq.hpp"
#include "msalg/poly.hpp"

namespace msalg {

template <class Code>
struct MatFq {
  const FqField<Code>* F = nullptr;
  std::size_t rows = 0, cols = 0;
  std::vector<Code> a;  // row-major

  static MatFq zero(const FqField<Code>& F, std::size_t r, std::size_t c) {
    return {&F, r, c, std::vector<Code>(r * c, 0)};
  }
  static MatFq identity(const FqField<Code>& F, std::size_t n) {
    MatFq m = zero(F, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  Code& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  Code at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  std::vector<Code> mul_vec(const std::vector<Code>& v) const {
    std::vector<Code> out(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      Code acc = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        if (a[r * cols + c] != 0 && v[c] != 0) acc = F->add(acc, F->mul(a[r * cols + c], v[c]));
      }
      out[r] = acc;
    }
    return out;
  }
};

// In-place reduced row echelon form; returns pivot column per pivot row
// (strictly increasing).
template <class Code>
inline std::vector<std::size_t> mat_rref(MatFq<Code>& m) {
  const auto& F = *m.F;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    Code inv = F.inv(m.at(row, col));
    for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) = F.mul(m.at(row, c), inv);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Code f = m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c) m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Code>
inline std::size_t mat_rank(MatFq<Code> m) {
  return mat_rref(m).size();
}

// Echelonized basis of the right null space; M * v = 0 for each basis vector.
template <class Code>
inline std::vector<std::vector<Code>> mat_kernel(const MatFq<Code>& m_in) {
  const auto& F = *m_in.F;
  MatFq<Code> m = m_in;
  std::vector<std::size_t> pivots = mat_rref(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (std::size_t p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<Code>> basis;
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Code> v(m.cols, 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(m.at(i, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incremental rank tracker over row vectors; reduces each offered vector
// against the rows accepted so far.
template <class Code>
class SpanBuilder {
 public:
  explicit SpanBuilder(const FqField<Code>& F, std::size_t width) : F_(&F), width_(width) {}

  // returns true iff the vector enlarged the span
  bool offer(std::vector<Code> v) {
    reduce(v);
    for (std::size_t c = 0; c < width_; ++c) {
      if (v[c] != 0) {
        Code inv = F_->inv(v[c]);
        for (auto& x : v) x = F_->mul(x, inv);
        pivot_col_.push_back(c);
        rows_.push_back(std::move(v));
        return true;
      }
    }
    return false;
  }

  bool contains(std::vector<Code> v) const {
    reduce(v);
    for (Code x : v)
      if (x != 0) return false;
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(std::vector<Code>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Code f = v[pivot_col_[i]];
      if (f == 0) continue;
      const auto& row = rows_[i];
      for (std::size_t c = 0; c < width_; ++c) {
        if (row[c] != 0) v[c] = F_->sub(v[c], F_->mul(f, row[c]));
      }
    }
  }

  const FqField<Code>* F_;
  std::size_t width_;
  std::vector<std::vector<Code>> rows_;
  std::vector<std::size_t> pivot_col_;
};

// Feeds a sequence v_0, v_1, ... and reports the first linear dependence as a
// monic relation sum_i c_i v_i = 0 (c_last = 1). Used for minimal polynomials:
// offer the Krylov powers in order.
template <class Code>
class RelationFinder {
 public:
  explicit RelationFinder(const FqField<Code>& F, std::size_t width) : F_(&F), width_(width) {}

  // nullopt while independent; otherwise the monic relation over all offered
  // vectors (length = #offers so far including this one)
  std::optional<std::vector<Code>> offer(std::vector<Code> v) {
    std::vector<Code> combo(count_ + 1, 0);
    combo[count_] = 1;
    ++count_;
    // reduce against accepted rows, tracking the combination
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Code f = v[pivot_col_[i]];
      if (f == 0) continue;
      const auto& row = rows_[i];
      for (std::size_t c = 0; c < width_; ++c)
        if (row[c] != 0) v[c] = F_->sub(v[c], F_->mul(f, row[c]));
      const auto& rc = combos_[i];
      for (std::size_t c = 0; c < rc.size(); ++c)
        if (rc[c] != 0) combo[c] = F_->sub(combo[c], F_->mul(f, rc[c]));
    }
    for (std::size_t c = 0; c < width_; ++c) {
      if (v[c] != 0) {
        Code inv = F_->inv(v[c]);
        for (auto& x : v) x = F_->mul(x, inv);
        for (auto& x : combo) x = F_->mul(x, inv);
        pivot_col_.push_back(c);
        rows_.push_back(std::move(v));
        combos_.push_back(std::move(combo));
        return std::nullopt;
      }
    }
    return combo;
  }

  std::size_t offered() const { return count_; }

 private:
  const FqField<Code>* F_;
  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<std::vector<Code>> rows_, combos_;
  std::vector<std::size_t> pivot_col_;
};

// Minimal polynomial of a square matrix: least common multiple of the local
// Krylov relations seeded from the standard basis vectors.
template <class Code>
inline Poly<Code> min_poly_matrix(const MatFq<Code>& m) {
  require(m.rows == m.cols, Err::ParameterOutOfRange, "matrix must be square");
  const auto& F = *m.F;
  const std::size_t n = m.rows;
  if (n == 0) return poly_from(F, {0, 1});  // conventionally x for the empty matrix
  Poly<Code> acc = poly_const(F, F.one());
  for (std::size_t seed = 0; seed < n; ++seed) {
    RelationFinder<Code> rf(F, n);
    std::vector<Code> v(n, 0);
    v[seed] = 1;
    std::optional<std::vector<Code>> rel;
    while (!(rel = rf.offer(v))) v = m.mul_vec(v);
    Poly<Code> local = poly_from(F, std::move(*rel));
    acc = poly_div_exact(poly_mul(acc, local), poly_gcd(acc, local));  // lcm
    if (acc.deg() == static_cast<int>(n)) break;
  }
  return poly_make_monic(acc);
}

}  // namespace msalg
