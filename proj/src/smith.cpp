#include <optional>
#include <utility>

#include "swsurg/lattice.hpp"

namespace swsurg {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the block [t.., t..]; row-major scan keeps the
// first minimum, which is the lowest row then the lowest column.
std::optional<Position> smallest_in_block(const IntMatrix& a, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t r = t; r < a.rows(); ++r)
    for (std::size_t c = t; c < a.cols(); ++c) {
      if (a(r, c) == 0) continue;
      if (!best || abs(a(r, c)) < abs(a(best->row, best->col))) best = Position{r, c};
    }
  return best;
}

Integer truncated_quotient(const Integer& n, const Integer& d) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

class Reducer {
 public:
  explicit Reducer(const IntMatrix& m)
      : a_(m), left_(IntMatrix::identity(m.rows())), right_(IntMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t steps = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      auto pivot = smallest_in_block(a_, t);
      if (!pivot) break;
      move_to(*pivot, t);
      reduce_cross(t);
      if (a_(t, t) < 0) {
        a_.negate_row(t);
        left_.negate_row(t);
      }
    }
    return SmithForm{std::move(a_), std::move(left_), std::move(right_)};
  }

 private:
  void swap_rows(std::size_t i, std::size_t j) {
    a_.swap_rows(i, j);
    left_.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a_.swap_cols(i, j);
    right_.swap_cols(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    a_.add_row_multiple(dst, src, f);
    left_.add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    a_.add_col_multiple(dst, src, f);
    right_.add_col_multiple(dst, src, f);
  }

  void move_to(Position p, std::size_t t) {
    swap_rows(t, p.row);
    swap_cols(t, p.col);
  }

  // Clears row t and column t outside the pivot, and makes the pivot divide
  // every entry of the remaining block.
  void reduce_cross(std::size_t t) {
    while (true) {
      for (std::size_t r = t + 1; r < a_.rows(); ++r)
        if (a_(r, t) != 0) add_row(r, t, -truncated_quotient(a_(r, t), a_(t, t)));
      for (std::size_t c = t + 1; c < a_.cols(); ++c)
        if (a_(t, c) != 0) add_col(c, t, -truncated_quotient(a_(t, c), a_(t, t)));

      // Remainders left in the cross are smaller than the pivot.
      std::optional<Position> smaller;
      auto consider = [&](std::size_t r, std::size_t c) {
        if (a_(r, c) == 0) return;
        if (!smaller || abs(a_(r, c)) < abs(a_(smaller->row, smaller->col))) smaller = Position{r, c};
      };
      for (std::size_t r = t + 1; r < a_.rows(); ++r) consider(r, t);
      for (std::size_t c = t + 1; c < a_.cols(); ++c) consider(t, c);
      if (smaller) {
        move_to(*smaller, t);
        continue;
      }

      bool divides_all = true;
      for (std::size_t r = t + 1; r < a_.rows() && divides_all; ++r)
        for (std::size_t c = t + 1; c < a_.cols(); ++c)
          if (!mpz_divisible_p(a_(r, c).get_mpz_t(), a_(t, t).get_mpz_t())) {
            add_row(t, r, 1);
            divides_all = false;
            break;
          }
      if (divides_all) return;
    }
  }

  IntMatrix a_;
  IntMatrix left_;
  IntMatrix right_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return Reducer(m).run(); }

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < n && diagonal(i, i) != 0; ++i) out.push_back(diagonal(i, i));
  return out;
}

std::size_t SmithForm::rank() const { return invariant_factors().size(); }

}  // namespace swsurg
