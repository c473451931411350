#include "swsurg/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "swsurg/errors.hpp"

namespace swsurg {

ValidationError::ValidationError(std::vector<std::string> failures)
    : std::runtime_error([&] {
        std::string msg = "validation failed:";
        for (const auto& f : failures) msg += " [" + f + "]";
        return msg;
      }()),
      failures_(std::move(failures)) {}

ParseError::ParseError(const std::string& what, std::string location)
    : std::runtime_error(location + ": " + what), location_(std::move(location)) {}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix product: inner dimensions differ");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

// ------------------------------------------------------------ LatticeVector

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long v : coords) coords_.emplace_back(v);
}

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t index) {
  LatticeVector v(rank);
  v[index] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  if (o.size() != size()) throw InvalidInput("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  if (o.size() != size()) throw InvalidInput("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

LatticeVector LatticeVector::extended(std::size_t extra) const {
  LatticeVector v(*this);
  v.coords_.resize(size() + extra);
  return v;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << coords_[i].get_str();
  os << ')';
  return os.str();
}

// ----------------------------------------------------------- IntegerLattice

IntegerLattice::IntegerLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw InvalidInput("gram matrix is not square");
  if (!gram_.is_symmetric()) throw InvalidInput("gram matrix fails symmetry");
}

IntegerLattice IntegerLattice::hyperbolic() { return IntegerLattice(IntMatrix{{0, 1}, {1, 0}}); }

IntegerLattice IntegerLattice::diagonal(std::initializer_list<long> entries) {
  IntMatrix g(entries.size(), entries.size());
  std::size_t i = 0;
  for (long e : entries) {
    g(i, i) = e;
    ++i;
  }
  return IntegerLattice(std::move(g));
}

IntegerLattice IntegerLattice::minus_e8() {
  // Dynkin diagram: chain 0-1-2-3-4-5-6 with node 7 attached to node 4.
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  auto link = [&](std::size_t a, std::size_t b) { g(a, b) = g(b, a) = 1; };
  for (std::size_t i = 0; i + 1 < 7; ++i) link(i, i + 1);
  link(4, 7);
  return IntegerLattice(std::move(g));
}

IntegerLattice IntegerLattice::direct_sum(const IntegerLattice& other) const {
  const std::size_t n = rank(), m = other.rank();
  IntMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = gram_(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = other.gram_(i, j);
  return IntegerLattice(std::move(g));
}

// --------------------------------------------------------------- operations

namespace {

void require_length(const IntegerLattice& lattice, const LatticeVector& v) {
  if (v.size() != lattice.rank())
    throw InvalidInput("vector of length " + std::to_string(v.size()) +
                       " does not match lattice rank " + std::to_string(lattice.rank()));
}

bool is_odd(const Integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

Integer pair(const IntegerLattice& lattice, const LatticeVector& x, const LatticeVector& y) {
  require_length(lattice, x);
  require_length(lattice, y);
  const IntMatrix& g = lattice.gram();
  Integer total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < y.size(); ++j) row += g(i, j) * y[j];
    total += x[i] * row;
  }
  return total;
}

bool is_characteristic(const IntegerLattice& lattice, const LatticeVector& k) {
  require_length(lattice, k);
  const IntMatrix& g = lattice.gram();
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    Integer ki = 0;
    for (std::size_t j = 0; j < k.size(); ++j) ki += g(i, j) * k[j];
    if (is_odd(ki) != is_odd(g(i, i))) return false;
  }
  return true;
}

Integer divisibility(const IntegerLattice& lattice, const LatticeVector& s) {
  require_length(lattice, s);
  const IntMatrix& g = lattice.gram();
  Integer d = 0;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    Integer si = 0;
    for (std::size_t j = 0; j < s.size(); ++j) si += g(i, j) * s[j];
    d = gcd(d, si);
  }
  return d;
}

bool is_primitive(const LatticeVector& s) {
  if (s.is_zero()) throw InvalidInput("primitivity of the zero vector is undefined");
  Integer d = 0;
  for (const auto& c : s.coords()) d = gcd(d, c);
  return d == 1;
}

IntMatrix restricted_gram(const IntegerLattice& lattice, const std::vector<LatticeVector>& gens) {
  IntMatrix g(gens.size(), gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) g(i, j) = g(j, i) = pair(lattice, gens[i], gens[j]);
  return g;
}

SublatticeBasis orthogonal_complement(const IntegerLattice& lattice, const SublatticeBasis& sub) {
  const std::size_t n = lattice.rank();
  SublatticeBasis out;
  out.label = sub.label.empty() ? "complement" : sub.label + "-perp";
  if (sub.generators.empty()) {
    for (std::size_t i = 0; i < n; ++i) out.generators.push_back(LatticeVector::unit(n, i));
    return out;
  }
  // Row i of the constraint matrix is g_i^T G.
  IntMatrix constraints(sub.generators.size(), n);
  for (std::size_t i = 0; i < sub.generators.size(); ++i) {
    require_length(lattice, sub.generators[i]);
    for (std::size_t j = 0; j < n; ++j) constraints(i, j) = pair(lattice, sub.generators[i], LatticeVector::unit(n, j));
  }
  out.generators = hermite_rows(integer_kernel(constraints));
  return out;
}

Signature signature(const IntegerLattice& lattice) {
  const std::size_t n = lattice.rank();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = lattice.gram()(i, j);

  auto swap_index = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    std::swap(a[p], a[q]);
    for (auto& row : a) std::swap(row[p], row[q]);
  };
  // Congruence move: basis vector p += basis vector q.
  auto add_index = [&](std::size_t p, std::size_t q) {
    for (std::size_t j = 0; j < n; ++j) a[p][j] += a[q][j];
    for (std::size_t i = 0; i < n; ++i) a[i][p] += a[i][q];
  };

  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n && pivot == n; ++i)
      if (a[i][i] != 0) pivot = i;
    if (pivot == n) {
      // All remaining diagonal entries vanish; an off-diagonal entry a_pq
      // gives a nonzero diagonal 2 a_pq after e_p += e_q.
      for (std::size_t p = k; p < n && pivot == n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
          if (a[p][q] != 0) {
            add_index(p, q);
            pivot = p;
            break;
          }
    }
    if (pivot == n) {
      sig.null = n - k;
      break;
    }
    swap_index(k, pivot);
    const mpq_class d = a[k][k];
    (d > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const mpq_class f = a[i][k] / d;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t j = k; j < n; ++j) a[j][i] = a[i][j];
    }
  }
  return sig;
}

bool is_unimodular(const IntegerLattice& lattice) {
  const SmithForm snf = smith_normal_form(lattice.gram());
  if (snf.rank() != lattice.rank()) return false;
  for (const auto& d : snf.invariant_factors())
    if (d != 1) return false;
  return true;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<LatticeVector> hermite_rows(std::vector<LatticeVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t top = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < n && top < rows.size(); ++col) {
    // Euclid on column `col` among rows top..end.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        rows[r] -= q * rows[top];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0) rows[top] *= Integer(-1);
    for (std::size_t r = 0; r < top; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
      rows[r] -= q * rows[top];
    }
    pivot_cols.push_back(col);
    ++top;
  }
  rows.resize(top);
  return rows;
}

std::optional<std::vector<Integer>> solve_in_hermite_basis(const std::vector<LatticeVector>& basis,
                                                           const LatticeVector& v) {
  LatticeVector residual = v;
  std::vector<Integer> coeffs(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t col = 0;
    while (col < basis[i].size() && basis[i][col] == 0) ++col;
    if (col == basis[i].size()) throw InvalidInput("zero row in Hermite basis");
    if (!mpz_divisible_p(residual[col].get_mpz_t(), basis[i][col].get_mpz_t())) return std::nullopt;
    coeffs[i] = residual[col] / basis[i][col];
    residual -= coeffs[i] * basis[i];
  }
  if (!residual.is_zero()) return std::nullopt;
  return coeffs;
}

std::vector<LatticeVector> integer_kernel(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  std::vector<LatticeVector> kernel;
  for (std::size_t j = r; j < m.cols(); ++j) {
    LatticeVector v(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) v[i] = snf.right(i, j);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace swsurg
