#include "braidcx/chain_complex.hpp"

#include <map>
#include <set>

#include "braidcx/error.hpp"

namespace braidcx {

namespace {

using Triplet = Eigen::Triplet<int>;

BoundaryMatrix make(std::size_t rows, std::size_t cols, const std::vector<Triplet>& entries) {
  BoundaryMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  m.setFromTriplets(entries.begin(), entries.end());
  m.prune(0, 0);
  return m;
}

}  // namespace

std::vector<BoundaryMatrix> boundary_matrices(const DeltaComplex& complex) {
  std::vector<BoundaryMatrix> out;
  if (complex.empty()) return out;
  std::vector<Triplet> entries;
  for (std::size_t v = 0; v < complex.count(0); ++v) entries.emplace_back(0, static_cast<int>(v), 1);
  out.push_back(make(1, complex.count(0), entries));
  for (int d = 1; d <= complex.dimension(); ++d) {
    entries.clear();
    const auto& cells = complex.cells(d);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (std::size_t i = 0; i < cells[c].faces.size(); ++i)
        entries.emplace_back(static_cast<int>(cells[c].faces[i]), static_cast<int>(c), i % 2 ? -1 : 1);
    out.push_back(make(complex.count(d - 1), cells.size(), entries));
  }
  return out;
}

ChainComplex augmented_chain_complex(const DeltaComplex& complex) {
  ChainComplex chain;
  chain.min_degree = -1;
  chain.ranks.push_back(1);
  chain.boundaries.push_back(BoundaryMatrix(0, 1));
  for (auto& m : boundary_matrices(complex)) {
    chain.ranks.push_back(static_cast<std::size_t>(m.cols()));
    chain.boundaries.push_back(std::move(m));
  }
  return chain;
}

ChainComplex relative_chain_complex(const DeltaComplex& complex, const DeltaComplex& sub) {
  const int top = complex.dimension();
  std::vector<std::vector<long>> slot(static_cast<std::size_t>(std::max(top + 1, 0)));
  for (int d = 0; d <= top; ++d) slot[static_cast<std::size_t>(d)].assign(complex.count(d), 0);
  for (int d = 0; d <= sub.dimension(); ++d)
    for (const auto& cell : sub.cells(d)) {
      const auto ref = complex.find(cell.id);
      if (!ref || ref->dim != d) throw DomainError("relative complex: cell '" + cell.id + "' is not a cell of X");
      slot[static_cast<std::size_t>(d)][ref->index] = -1;
    }
  // Face-closure of A inside X.
  for (int d = 1; d <= top; ++d)
    for (std::size_t c = 0; c < complex.count(d); ++c)
      if (slot[static_cast<std::size_t>(d)][c] < 0)
        for (std::size_t f : complex.cells(d)[c].faces)
          if (slot[static_cast<std::size_t>(d - 1)][f] >= 0)
            throw DomainError("relative complex: A is not closed under faces");
  std::vector<std::size_t> ranks;
  for (int d = 0; d <= top; ++d) {
    long next = 0;
    for (auto& s : slot[static_cast<std::size_t>(d)])
      if (s >= 0) s = next++;
    ranks.push_back(static_cast<std::size_t>(next));
  }
  ChainComplex chain;
  chain.min_degree = 0;
  chain.ranks = ranks;
  if (top < 0) return chain;
  chain.boundaries.push_back(BoundaryMatrix(0, static_cast<Eigen::Index>(ranks[0])));
  for (int d = 1; d <= top; ++d) {
    std::vector<Triplet> entries;
    const auto& cells = complex.cells(d);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const long col = slot[static_cast<std::size_t>(d)][c];
      if (col < 0) continue;
      for (std::size_t i = 0; i < cells[c].faces.size(); ++i) {
        const long row = slot[static_cast<std::size_t>(d - 1)][cells[c].faces[i]];
        if (row >= 0) entries.emplace_back(static_cast<int>(row), static_cast<int>(col), i % 2 ? -1 : 1);
      }
    }
    chain.boundaries.push_back(
        make(ranks[static_cast<std::size_t>(d - 1)], ranks[static_cast<std::size_t>(d)], entries));
  }
  return chain;
}

bool boundary_squares_to_zero(const ChainComplex& chain) {
  for (std::size_t k = 1; k < chain.boundaries.size(); ++k) {
    const BoundaryMatrix product = chain.boundaries[k - 1] * chain.boundaries[k];
    for (Eigen::Index j = 0; j < product.outerSize(); ++j)
      for (BoundaryMatrix::InnerIterator it(product, j); it; ++it)
        if (it.value() != 0) return false;
  }
  return true;
}

std::vector<Integer> invariant_factors(const BoundaryMatrix& matrix) {
  const Eigen::Index nrows = matrix.rows(), ncols = matrix.cols();
  std::vector<std::map<Eigen::Index, Integer>> rows(static_cast<std::size_t>(nrows));
  std::vector<std::set<Eigen::Index>> cols(static_cast<std::size_t>(ncols));
  for (Eigen::Index j = 0; j < matrix.outerSize(); ++j)
    for (BoundaryMatrix::InnerIterator it(matrix, j); it; ++it)
      if (it.value() != 0) {
        rows[static_cast<std::size_t>(it.row())][j] = it.value();
        cols[static_cast<std::size_t>(j)].insert(it.row());
      }

  std::size_t units = 0;
  for (;;) {
    Eigen::Index br = -1, bc = -1;
    std::size_t best = 0;
    for (Eigen::Index r = 0; r < nrows && !(br >= 0 && best == 0); ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      for (const auto& [c, v] : row) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = (row.size() - 1) * (cols[static_cast<std::size_t>(c)].size() - 1);
        if (br < 0 || cost < best) {
          br = r;
          bc = c;
          best = cost;
          if (cost == 0) break;
        }
      }
    }
    if (br < 0) break;
    auto& pivot_row = rows[static_cast<std::size_t>(br)];
    const Integer pivot = pivot_row.at(bc);
    std::vector<Eigen::Index> others;
    for (Eigen::Index r : cols[static_cast<std::size_t>(bc)])
      if (r != br) others.push_back(r);
    for (Eigen::Index r : others) {
      auto& target = rows[static_cast<std::size_t>(r)];
      const Integer factor = target.at(bc) * pivot;
      for (const auto& [c, v] : pivot_row) {
        auto it = target.find(c);
        if (it == target.end()) {
          target.emplace(c, -factor * v);
          cols[static_cast<std::size_t>(c)].insert(r);
        } else {
          it->second -= factor * v;
          if (it->second == 0) {
            target.erase(it);
            cols[static_cast<std::size_t>(c)].erase(r);
          }
        }
      }
    }
    for (const auto& entry : pivot_row) cols[static_cast<std::size_t>(entry.first)].erase(br);
    pivot_row.clear();
    ++units;
  }

  std::vector<Eigen::Index> live_rows, live_cols;
  std::map<Eigen::Index, Eigen::Index> col_slot;
  for (Eigen::Index r = 0; r < nrows; ++r)
    if (!rows[static_cast<std::size_t>(r)].empty()) live_rows.push_back(r);
  for (Eigen::Index c = 0; c < ncols; ++c)
    if (!cols[static_cast<std::size_t>(c)].empty()) {
      col_slot[c] = static_cast<Eigen::Index>(live_cols.size());
      live_cols.push_back(c);
    }
  std::vector<Integer> out(units, Integer(1));
  if (live_rows.empty()) return out;
  IntegerMatrix block = IntegerMatrix::Zero(static_cast<Eigen::Index>(live_rows.size()),
                                            static_cast<Eigen::Index>(live_cols.size()));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [c, v] : rows[static_cast<std::size_t>(live_rows[i])])
      block(static_cast<Eigen::Index>(i), col_slot.at(c)) = v;
  const auto snf = smith_normal_form(std::move(block));
  out.insert(out.end(), snf.diagonal.begin(), snf.diagonal.end());
  return out;
}

std::size_t rank_mod_p(const BoundaryMatrix& matrix, unsigned p) {
  using u64 = unsigned long long;
  const auto nrows = static_cast<std::size_t>(matrix.rows());
  const auto ncols = static_cast<std::size_t>(matrix.cols());
  std::vector<std::vector<u64>> a(nrows, std::vector<u64>(ncols, 0));
  for (Eigen::Index j = 0; j < matrix.outerSize(); ++j)
    for (BoundaryMatrix::InnerIterator it(matrix, j); it; ++it) {
      const long long v = it.value() % static_cast<long long>(p);
      a[static_cast<std::size_t>(it.row())][static_cast<std::size_t>(j)] = static_cast<u64>(v < 0 ? v + p : v);
    }
  auto power = [p](u64 b, u64 e) {
    u64 r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
    std::size_t r = rank;
    while (r < nrows && a[r][c] == 0) ++r;
    if (r == nrows) continue;
    std::swap(a[r], a[rank]);
    const u64 inv = power(a[rank][c], p - 2);
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      if (a[i][c] == 0) continue;
      const u64 f = a[i][c] * inv % p;
      for (std::size_t k = c; k < ncols; ++k) a[i][k] = (a[i][k] + (p - f) * a[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

IntegerMatrix to_dense(const BoundaryMatrix& matrix) {
  IntegerMatrix out = IntegerMatrix::Zero(matrix.rows(), matrix.cols());
  for (Eigen::Index j = 0; j < matrix.outerSize(); ++j)
    for (BoundaryMatrix::InnerIterator it(matrix, j); it; ++it) out(it.row(), j) = it.value();
  return out;
}

}  // namespace braidcx
