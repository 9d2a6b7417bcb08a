// Copyright 2026 The geomech Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <bit>
#include <unordered_map>

#include "geomech/geomcalc.hpp"

namespace geomech::calc {
namespace {

/// Laplace expansion along rows, memoized on the set of used columns.
class Determinant {
 public:
  explicit Determinant(const Matrix& m) : m_(m), n_(m.size()) {}

  Expr run() { return minor(0); }

 private:
  const Matrix& m_;
  std::size_t n_;
  std::unordered_map<std::uint32_t, Expr> memo_;

  Expr minor(std::uint32_t used) {
    std::size_t row = static_cast<std::size_t>(std::popcount(used));
    if (row == n_) return Expr(1);
    if (auto it = memo_.find(used); it != memo_.end()) return it->second;
    std::vector<Expr> terms;
    int sign = 1;
    for (std::size_t c = 0; c < n_; ++c) {
      if (used & (1u << c)) continue;
      if (!m_[row][c].is_zero()) {
        Expr sub = minor(used | (1u << c));
        if (!sub.is_zero()) terms.push_back(Expr(sign) * m_[row][c] * sub);
      }
      sign = -sign;
    }
    Expr out = sym::add(std::move(terms));
    memo_[used] = out;
    return out;
  }
};

Matrix without(const Matrix& m, std::size_t row, std::size_t col) {
  Matrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<Expr> r;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != col) r.push_back(m[i][j]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool certified_nonzero(const Expr& e, const Sampling& s) {
  if (e.is_zero()) return false;
  if (e.is_constant()) return true;
  return sym::equal(e, Expr(0), s).verdict == sym::Verdict::NotEqual;
}

}  // namespace

Matrix jacobian(const std::vector<Expr>& f, const std::vector<std::string>& vars) {
  Matrix j(f.size(), std::vector<Expr>(vars.size()));
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t i = 0; i < vars.size(); ++i) j[a][i] = sym::differentiate(f[a], vars[i]);
  }
  return j;
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return m;
  Matrix t(m[0].size(), std::vector<Expr>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  Matrix out(a.size(), std::vector<Expr>(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw DimensionMismatch("matrix product shape");
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Expr> terms;
      for (std::size_t k = 0; k < inner; ++k) {
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) terms.push_back(a[i][k] * b[k][j]);
      }
      out[i][j] = sym::add(std::move(terms));
    }
  }
  return out;
}

Expr determinant(const Matrix& m) {
  if (m.size() > 24) throw DimensionMismatch("determinant of an oversized matrix");
  for (const auto& row : m) {
    if (row.size() != m.size()) throw DimensionMismatch("determinant of a non-square matrix");
  }
  return Determinant(m).run();
}

Matrix adjugate(const Matrix& m) {
  std::size_t n = m.size();
  Matrix adj(n, std::vector<Expr>(n));
  if (n == 1) {
    adj[0][0] = Expr(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Expr minor = determinant(without(m, i, j));
      adj[j][i] = (i + j) % 2 == 0 ? minor : -minor;
    }
  }
  return adj;
}

bool solve_linear(Matrix a, std::vector<Expr> b, std::vector<Expr>& x, const Sampling& s) {
  std::size_t n = a.size();
  if (b.size() != n) throw DimensionMismatch("linear system shape");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (certified_nonzero(a[r][col], s)) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    Expr inv = sym::pow(a[col][col], -1);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      Expr factor = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - factor * a[col][c];
      a[r][col] = Expr(0);
      b[r] = b[r] - factor * b[col];
    }
  }
  x.assign(n, Expr(0));
  for (std::size_t i = n; i-- > 0;) {
    std::vector<Expr> terms{b[i]};
    for (std::size_t c = i + 1; c < n; ++c) {
      if (!a[i][c].is_zero()) terms.push_back(-(a[i][c] * x[c]));
    }
    x[i] = sym::add(std::move(terms)) / a[i][i];
  }
  return true;
}

Eigen::MatrixXd evaluate(const Matrix& m, const sym::EvalPoint& p) {
  Eigen::MatrixXd out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = sym::eval(m[i][j], p);
  }
  return out;
}

int numeric_rank(const Matrix& m, const sym::EvalPoint& p, double tol) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(evaluate(m, p));
  lu.setThreshold(tol);
  return static_cast<int>(lu.rank());
}

}  // namespace geomech::calc
