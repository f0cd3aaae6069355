// Copyright 2026 The focalqi Authors
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

#include "focal/matexact.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

namespace focal {

namespace {

using Grid = std::vector<std::vector<Rat>>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> RowReduce(Grid& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Basis of {v : m v = 0}.
std::vector<std::vector<Rat>> Nullspace(Grid m, std::size_t cols) {
  const std::vector<std::size_t> pivots = RowReduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Grid ToGrid(const MatQ& a) { return a.Rows(); }

// Sign changes along a Sturm chain at x, zeros skipped.
int Variations(const std::vector<PolyQ>& chain, const Rat& x) {
  int changes = 0;
  int last = 0;
  for (const PolyQ& p : chain) {
    const int s = sgn(p.Evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Positive rational roots of a polynomial (without multiplicity). A root of
// the primitive integer form with leading coefficient L lies in (1/L)Z, so
// Sturm bisection down to width 1/L isolates every candidate, which is then
// checked exactly. No integer factorization is involved.
std::vector<Rat> PositiveRationalRoots(const PolyQ& f) {
  std::vector<Rat> roots;
  if (f.Degree() < 1) return roots;
  PolyQ g = DivMod(f, Gcd(f, f.Derivative())).quotient;
  if (g.coefficients.front() == 0) g = DivMod(g, PolyQ({Rat(0), Rat(1)})).quotient;
  if (g.Degree() < 1) return roots;

  Int lcm = 1;
  for (const Rat& c : g.coefficients) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  Int content = 0;
  for (const Rat& c : g.coefficients) {
    const Int n(c * lcm);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
  }
  const Int lead = abs(Int(g.Leading() * lcm / content));

  // Cauchy bound: every root has |x| < 1 + max |c_i / c_d|.
  Rat bound = 0;
  for (const Rat& c : g.coefficients) bound = std::max(bound, Rat(abs(c / g.Leading())));
  bound += 1;

  std::vector<PolyQ> chain = {g, g.Derivative()};
  while (chain.back().Degree() > 0) {
    const PolyQ r = DivMod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.IsZero()) break;
    chain.push_back(PolyQ() - r);
  }

  struct Interval {
    Rat lo, hi;
    int vlo, vhi;
  };
  std::vector<Interval> stack = {{Rat(0), bound, Variations(chain, Rat(0)), Variations(chain, bound)}};
  while (!stack.empty()) {
    const Interval iv = stack.back();
    stack.pop_back();
    if (iv.vlo - iv.vhi == 0) continue;
    if ((iv.hi - iv.lo) * lead < 1) {
      // At most one point of (1/L)Z in (lo, hi].
      Int m;
      const Rat scaled = iv.hi * lead;
      mpz_fdiv_q(m.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
      Rat candidate(m, lead);
      candidate.canonicalize();
      if (candidate > iv.lo && g.Evaluate(candidate) == 0) roots.push_back(candidate);
      continue;
    }
    const Rat mid = (iv.lo + iv.hi) / 2;
    const int vmid = Variations(chain, mid);
    stack.push_back({iv.lo, mid, iv.vlo, vmid});
    stack.push_back({mid, iv.hi, vmid, iv.vhi});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

void RequireContracting(const MatQ& a, const char* name) {
  for (const Eigenvalue& e : Spectrum(a).eigenvalues) {
    if (e.value >= 1) {
      throw DomainError(std::string(name) + " is not contracting: eigenvalue " +
                        ToString(e.value));
    }
  }
}

// Smith normal form of x I - A over Q[x]; returns the monic diagonal.
std::vector<PolyQ> SmithDiagonal(const MatQ& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<PolyQ>> m(n, std::vector<PolyQ>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      PolyQ entry = PolyQ::Monomial(-a(i, j), 0);
      if (i == j) entry = entry + PolyQ::Monomial(Rat(1), 1);
      m[i][j] = entry;
    }
  }
  auto row_sub = [&](std::size_t target, std::size_t source, const PolyQ& q, std::size_t from) {
    for (std::size_t j = from; j < n; ++j) m[target][j] = m[target][j] - q * m[source][j];
  };
  auto col_sub = [&](std::size_t target, std::size_t source, const PolyQ& q, std::size_t from) {
    for (std::size_t i = from; i < n; ++i) m[i][target] = m[i][target] - q * m[i][source];
  };

  std::vector<PolyQ> diagonal;
  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      // Pivot of minimal degree in the trailing block.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          if (m[i][j].IsZero()) continue;
          if (pi == n || m[i][j].Degree() < m[pi][pj].Degree()) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == n) break;
      std::swap(m[k], m[pi]);
      for (std::size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][pj]);

      bool cleared = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m[i][k].IsZero()) continue;
        const PolyDivision d = DivMod(m[i][k], m[k][k]);
        row_sub(i, k, d.quotient, k);
        if (!m[i][k].IsZero()) cleared = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m[k][j].IsZero()) continue;
        const PolyDivision d = DivMod(m[k][j], m[k][k]);
        col_sub(j, k, d.quotient, k);
        if (!m[k][j].IsZero()) cleared = false;
      }
      if (!cleared) continue;

      // The pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (!DivMod(m[i][j], m[k][k]).remainder.IsZero()) {
            for (std::size_t c = k; c < n; ++c) m[k][c] = m[k][c] + m[i][c];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diagonal.push_back(m[k][k].IsZero() ? PolyQ() : m[k][k].Monic());
  }
  return diagonal;
}

MatQ Companion(const PolyQ& monic) {
  const std::size_t d = static_cast<std::size_t>(monic.Degree());
  MatQ c(d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -monic.coefficients[i];
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyQ

PolyQ::PolyQ(std::vector<Rat> c) : coefficients(std::move(c)) { Trim(); }

PolyQ PolyQ::Monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> coeffs(degree + 1, Rat(0));
  coeffs[degree] = c;
  return PolyQ(std::move(coeffs));
}

void PolyQ::Trim() {
  while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
}

Rat PolyQ::Evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyQ PolyQ::Derivative() const {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < coefficients.size(); ++i) {
    d.push_back(coefficients[i] * static_cast<long>(i));
  }
  return PolyQ(std::move(d));
}

PolyQ PolyQ::Monic() const {
  if (IsZero()) return *this;
  std::vector<Rat> c = coefficients;
  const Rat lead = Leading();
  for (Rat& x : c) x /= lead;
  return PolyQ(std::move(c));
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
  std::vector<Rat> c(std::max(a.coefficients.size(), b.coefficients.size()), Rat(0));
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) c[i] += a.coefficients[i];
  for (std::size_t i = 0; i < b.coefficients.size(); ++i) c[i] += b.coefficients[i];
  return PolyQ(std::move(c));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
  std::vector<Rat> c(std::max(a.coefficients.size(), b.coefficients.size()), Rat(0));
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) c[i] += a.coefficients[i];
  for (std::size_t i = 0; i < b.coefficients.size(); ++i) c[i] -= b.coefficients[i];
  return PolyQ(std::move(c));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.IsZero() || b.IsZero()) return PolyQ();
  std::vector<Rat> c(a.coefficients.size() + b.coefficients.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
      c[i + j] += a.coefficients[i] * b.coefficients[j];
    }
  }
  return PolyQ(std::move(c));
}

std::string PolyQ::ToString() const {
  if (IsZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = Degree(); i >= 0; --i) {
    const Rat& c = coefficients[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Rat mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << focal::ToString(mag);
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

PolyDivision DivMod(const PolyQ& a, const PolyQ& b) {
  if (b.IsZero()) throw DomainError("polynomial division by zero");
  std::vector<Rat> rem = a.coefficients;
  const long db = b.Degree();
  const long da = a.Degree();
  if (da < db) return {PolyQ(), a};
  std::vector<Rat> quot(static_cast<std::size_t>(da - db + 1), Rat(0));
  for (long i = da; i >= db; --i) {
    const Rat f = rem[static_cast<std::size_t>(i)] / b.Leading();
    quot[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (long j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= f * b.coefficients[static_cast<std::size_t>(j)];
    }
  }
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ Gcd(const PolyQ& a, const PolyQ& b) {
  PolyQ x = a, y = b;
  while (!y.IsZero()) {
    PolyQ r = DivMod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.Monic();
}

// ---------------------------------------------------------------------------
// MatQ

MatQ::MatQ(std::size_t dim) : dim_(dim), data_(dim * dim, Rat(0)) {}

MatQ MatQ::Identity(std::size_t dim) {
  MatQ m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

MatQ MatQ::Diagonal(const std::vector<Rat>& diagonal) {
  MatQ m(diagonal.size());
  for (std::size_t i = 0; i < diagonal.size(); ++i) m(i, i) = diagonal[i];
  return m;
}

MatQ MatQ::FromRows(const std::vector<std::vector<Rat>>& rows) {
  MatQ m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DomainError("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix dimension mismatch");
  const std::size_t n = a.dim_;
  MatQ c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

MatQ operator+(const MatQ& a, const MatQ& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix dimension mismatch");
  MatQ c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

MatQ operator-(const MatQ& a, const MatQ& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix dimension mismatch");
  MatQ c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

MatQ operator*(const Rat& s, const MatQ& a) {
  MatQ c = a;
  for (Rat& x : c.data_) x *= s;
  return c;
}

bool MatQ::IsDiagonal() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i != j && (*this)(i, j) != 0) return false;
    }
  }
  return true;
}

std::vector<std::vector<Rat>> MatQ::Rows() const {
  Grid rows(dim_, std::vector<Rat>(dim_));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) rows[i][j] = (*this)(i, j);
  }
  return rows;
}

std::string MatQ::ToString() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < dim_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < dim_; ++j) out << (j ? ", " : "") << focal::ToString((*this)(i, j));
    out << "]";
  }
  out << "]";
  return out.str();
}

Rat Det(const MatQ& a) {
  Grid m = ToGrid(a);
  const std::size_t n = a.dim();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::size_t Rank(const MatQ& a) {
  Grid m = ToGrid(a);
  return RowReduce(m).size();
}

MatQ Inverse(const MatQ& a) {
  const std::size_t n = a.dim();
  Grid m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  const std::vector<std::size_t> pivots = RowReduce(m);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw DomainError("matrix is singular");
  }
  MatQ inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = m[i][n + j];
  }
  return inv;
}

PolyQ CharPoly(const MatQ& a) {
  // Faddeev-LeVerrier: exact over Q.
  const std::size_t n = a.dim();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  MatQ m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * MatQ::Identity(n);
    const MatQ am = a * m;
    Rat trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return PolyQ(std::move(c));
}

MatQ MatPower(const MatQ& a, long n) {
  if (n < 0) return MatPower(Inverse(a), -n);
  MatQ result = MatQ::Identity(a.dim());
  MatQ base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Spectra

int Eigenvalue::Multiplicity() const {
  int total = 0;
  for (int b : jordan_blocks) total += b;
  return total;
}

bool SpectralData::IsDiagonalizable() const {
  for (const Eigenvalue& e : eigenvalues) {
    for (int b : e.jordan_blocks) {
      if (b != 1) return false;
    }
  }
  return true;
}

SpectralData Spectrum(const MatQ& a) {
  SpectralData out;
  const std::size_t n = a.dim();
  if (n == 0) return out;
  const PolyQ f = CharPoly(a);
  if (f.coefficients.front() == 0) {
    throw NonRationalSpectrum("zero eigenvalue; characteristic polynomial " + f.ToString());
  }
  const PolyQ square_free = DivMod(f, Gcd(f, f.Derivative())).quotient;

  std::size_t found = 0;
  for (const Rat& root : PositiveRationalRoots(square_free)) {
    // Algebraic multiplicity.
    const PolyQ linear(std::vector<Rat>{-root, Rat(1)});
    PolyQ rest = f;
    int multiplicity = 0;
    while (true) {
      PolyDivision d = DivMod(rest, linear);
      if (!d.remainder.IsZero()) break;
      rest = std::move(d.quotient);
      ++multiplicity;
    }
    // Blocks of size >= j number rank(N^{j-1}) - rank(N^j), N = A - root I.
    const MatQ nil = a - root * MatQ::Identity(n);
    std::vector<long> ranks{static_cast<long>(n)};
    MatQ power = MatQ::Identity(n);
    for (int j = 1; j <= multiplicity; ++j) {
      power = power * nil;
      ranks.push_back(static_cast<long>(Rank(power)));
    }
    ranks.push_back(ranks.back());
    Eigenvalue e{root, {}};
    for (int j = multiplicity; j >= 1; --j) {
      const long at_least_j = ranks[j - 1] - ranks[j];
      const long at_least_next = ranks[j] - ranks[j + 1];
      for (long c = 0; c < at_least_j - at_least_next; ++c) e.jordan_blocks.push_back(j);
    }
    found += static_cast<std::size_t>(multiplicity);
    out.eigenvalues.push_back(std::move(e));
  }
  if (found != n) {
    throw NonRationalSpectrum("characteristic polynomial " + f.ToString() +
                              " does not split into positive rational roots");
  }
  return out;
}

bool IsContracting(const MatQ& a) {
  for (const Eigenvalue& e : Spectrum(a).eigenvalues) {
    if (e.value <= 0 || e.value >= 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Similarity

std::vector<PolyQ> InvariantFactors(const MatQ& a) {
  std::vector<PolyQ> factors;
  for (PolyQ& p : SmithDiagonal(a)) {
    if (p.Degree() >= 1) factors.push_back(std::move(p));
  }
  std::sort(factors.begin(), factors.end(),
            [](const PolyQ& x, const PolyQ& y) { return x.Degree() < y.Degree(); });
  return factors;
}

MatQ FrobeniusForm(const MatQ& a) {
  MatQ out(a.dim());
  std::size_t offset = 0;
  for (const PolyQ& f : InvariantFactors(a)) {
    const MatQ block = Companion(f);
    for (std::size_t i = 0; i < block.dim(); ++i) {
      for (std::size_t j = 0; j < block.dim(); ++j) out(offset + i, offset + j) = block(i, j);
    }
    offset += block.dim();
  }
  return out;
}

std::optional<MatQ> Conjugate(const MatQ& a, const MatQ& b) {
  if (a.dim() != b.dim()) throw DomainError("conjugate: dimension mismatch");
  const std::size_t n = a.dim();
  if (a == b) return MatQ::Identity(n);
  if (InvariantFactors(a) != InvariantFactors(b)) return std::nullopt;

  // Equal Frobenius forms: the solutions of P A = B P contain an invertible
  // matrix, and invertible ones are Zariski-dense in that space.
  const std::size_t unknowns = n * n;
  Grid system(unknowns, std::vector<Rat>(unknowns, Rat(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Rat>& row = system[r * n + c];
      for (std::size_t k = 0; k < n; ++k) {
        row[r * n + k] += a(k, c);
        row[k * n + c] -= b(r, k);
      }
    }
  }
  const auto basis = Nullspace(std::move(system), unknowns);
  std::mt19937_64 rng(0x5eedf0ca1ULL);
  std::uniform_int_distribution<long> coeff(-40, 40);
  for (int attempt = 0; attempt < 256; ++attempt) {
    MatQ p(n);
    for (std::size_t v = 0; v < basis.size(); ++v) {
      const long c = attempt == 0 ? 1 : coeff(rng);
      if (c == 0) continue;
      for (std::size_t idx = 0; idx < unknowns; ++idx) p(idx / n, idx % n) += c * basis[v][idx];
    }
    if (Det(p) == 0) continue;
    if (p * a == b * p) return p;
  }
  throw std::logic_error("conjugate: equal invariant factors but no invertible witness found");
}

std::optional<PowerConjugacy> FindPowerConjugacy(const MatQ& a1, const MatQ& a2,
                                                 const Int& k1, const Int& k2) {
  RequireContracting(a1, "A1");
  RequireContracting(a2, "A2");
  const auto pair = CommonPower(k1, k2);
  if (!pair) return std::nullopt;
  if (a1.dim() != a2.dim()) return std::nullopt;
  // Only the minimal pair (n1, n2) needs testing. Every solution of
  // k1^m1 = k2^m2 is (j n1, j n2). If A1^{j n1} ~ A2^{j n2}, write
  // X = A1^{n1}, Y = A2^{n2}; both have positive real spectra, and on such
  // matrices X -> X^j is injective on similarity classes: the eigenvalues
  // lambda^j determine lambda (unique positive j-th root) and the Jordan
  // structure of X^j equals that of X (lambda != 0). Hence X ~ Y.
  const auto [n1, n2] = *pair;
  auto witness = Conjugate(MatPower(a1, n1), MatPower(a2, n2));
  if (!witness) return std::nullopt;
  return PowerConjugacy{n1, n2, std::move(*witness)};
}

std::optional<OneParamScale> OneParamPower(const MatQ& a1, const MatQ& a2) {
  RequireContracting(a1, "A1");
  RequireContracting(a2, "A2");
  if (a1.dim() != a2.dim() || a1.dim() == 0) return std::nullopt;
  const SpectralData s1 = Spectrum(a1);
  const SpectralData s2 = Spectrum(a2);
  if (s1.eigenvalues.size() != s2.eigenvalues.size()) return std::nullopt;
  // lambda -> lambda^t is increasing for t > 0, so the pairing follows the
  // sorted order.
  std::optional<LogRatio> t;
  for (std::size_t i = 0; i < s1.eigenvalues.size(); ++i) {
    const Eigenvalue& e1 = s1.eigenvalues[i];
    const Eigenvalue& e2 = s2.eigenvalues[i];
    if (e1.jordan_blocks != e2.jordan_blocks) return std::nullopt;
    LogRatio ti(1 / e2.value, 1 / e1.value);
    if (!t) {
      t = ti;
      continue;
    }
    const LogCompare cmp = LogRatioEq(*t, ti);
    if (cmp.verdict == Certainty::kNotEqual) return std::nullopt;
    if (cmp.verdict == Certainty::kUndecided) {
      throw UndecidedError("one_param_power: cannot certify " + t->ToString() +
                           " = " + ti.ToString());
    }
  }
  return OneParamScale{*t, t->RationalValue()};
}

}  // namespace focal
