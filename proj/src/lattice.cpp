#include "quivermod/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace quivermod {

IntMatrix identity_int(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& a, std::size_t cols) {
  IntMatrix t(cols, IntVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b.front().size() : 0;
  IntMatrix out(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

IntVector row_times(const IntVector& x, const IntMatrix& a) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  IntVector out(cols, 0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] += x[k] * a[k][j];
  }
  return out;
}

IntVector apply_matrix(const IntMatrix& a, const IntVector& x) {
  IntVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], x);
  return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  IntVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

IntVector scale(const Integer& s, const IntVector& a) {
  IntVector out = a;
  for (auto& x : out) x *= s;
  return out;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_nonnegative(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

// row_i -= q * row_j
void row_axpy(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
  for (std::size_t k = 0; k < m[i].size(); ++k) m[i][k] -= q * m[j][k];
}

// col_i -= q * col_j
void col_axpy(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
  for (auto& row : m) row[i] -= q * row[j];
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols) {
  const std::size_t rows = a.size();
  SmithForm f;
  f.diagonal = a;
  f.left = identity_int(rows);
  f.right = identity_int(cols);
  IntMatrix& d = f.diagonal;
  std::size_t t = 0;
  while (t < std::min(rows, cols)) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (d[i][j] == 0) continue;
        if (!pivot || abs_value(d[i][j]) < abs_value(d[pivot->first][pivot->second])) pivot = {{i, j}};
      }
    if (!pivot) break;
    swap_rows(d, t, pivot->first);
    swap_rows(f.left, t, pivot->first);
    swap_cols(d, t, pivot->second);
    swap_cols(f.right, t, pivot->second);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        const Integer q = d[i][t] / d[t][t];
        row_axpy(d, i, t, q);
        row_axpy(f.left, i, t, q);
        if (d[i][t] != 0) {
          clean = false;
          swap_rows(d, t, i);
          swap_rows(f.left, t, i);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        const Integer q = d[t][j] / d[t][t];
        col_axpy(d, j, t, q);
        col_axpy(f.right, j, t, q);
        if (d[t][j] != 0) {
          clean = false;
          swap_cols(d, t, j);
          swap_cols(f.right, t, j);
        }
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into row t and repeat.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d[i][j] % d[t][t] != 0) {
            row_axpy(d, t, i, Integer(-1));
            row_axpy(f.left, t, i, Integer(-1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : f.left[t]) x = -x;
    }
    f.invariant_factors.push_back(d[t][t]);
    ++t;
  }
  f.rank = t;
  return f;
}

std::size_t integer_rank(const IntMatrix& a, std::size_t cols) { return smith_normal_form(a, cols).rank; }

IntMatrix hermite_normal_form(const IntMatrix& a, std::size_t cols) {
  IntMatrix h = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < h.size(); ++c) {
    // Euclid down the column until only row r is nonzero.
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < h.size(); ++i) {
        if (h[i][c] != 0 && (!best || abs_value(h[i][c]) < abs_value(h[*best][c]))) best = i;
      }
      if (!best) break;
      swap_rows(h, r, *best);
      bool done = true;
      for (std::size_t i = r + 1; i < h.size(); ++i) {
        if (h[i][c] == 0) continue;
        row_axpy(h, i, r, h[i][c] / h[r][c]);
        if (h[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0) {
      for (auto& x : h[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = h[i][c] / h[r][c];
      if (h[i][c] - q * h[r][c] < 0) q -= 1;
      row_axpy(h, i, r, q);
    }
    ++r;
  }
  h.resize(r);
  return h;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols) {
  const SmithForm f = smith_normal_form(a, cols);
  IntMatrix out;
  for (std::size_t j = f.rank; j < cols; ++j) {
    IntVector v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = f.right[i][j];
    out.push_back(std::move(v));
  }
  return hermite_normal_form(out, cols);
}

namespace {

// Exact inverse of a unimodular integer matrix via rational-free adjugate-style
// elimination: solve with the SNF machinery.
IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  // Gauss-Jordan over Z with unit pivots is possible because det = ±1; use
  // SNF: U M V = I, so M^{-1} = V U.
  const SmithForm f = smith_normal_form(m, n);
  if (f.rank != n) throw std::logic_error("matrix is not unimodular");
  for (const auto& d : f.invariant_factors) {
    if (d != 1) throw std::logic_error("matrix is not unimodular");
  }
  return multiply(f.right, f.left);
}

}  // namespace

Saturation saturate(const IntMatrix& rows, std::size_t cols) {
  const SmithForm f = smith_normal_form(rows, cols);
  Saturation s;
  s.rank = f.rank;
  s.coordinates = f.right;
  s.basis = unimodular_inverse(f.right);
  for (const auto& d : f.invariant_factors) s.index *= d;
  return s;
}

std::optional<IntVector> solve_integer(const IntMatrix& basis, std::size_t cols, const IntVector& target) {
  const std::size_t k = basis.size();
  if (k == 0) return is_zero(target) ? std::optional<IntVector>(IntVector{}) : std::nullopt;
  const SmithForm f = smith_normal_form(basis, cols);
  const IntVector tv = row_times(target, f.right);
  IntVector y(k, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    if (i < f.rank) {
      if (tv[i] % f.invariant_factors[i] != 0) return std::nullopt;
      y[i] = tv[i] / f.invariant_factors[i];
    } else if (tv[i] != 0) {
      return std::nullopt;
    }
  }
  return row_times(y, f.left);
}

namespace {

bool leq(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Integer total(const IntVector& v) {
  Integer s = 0;
  for (const auto& x : v) s += x;
  return s;
}

bool graded_lex_desc(const IntVector& a, const IntVector& b) {
  const Integer ta = total(a), tb = total(b);
  if (ta != tb) return ta < tb;
  return a > b;
}

}  // namespace

IntMatrix hilbert_basis_kernel(const IntMatrix& a, std::size_t cols) {
  const std::size_t rows = a.size();
  IntMatrix columns(cols, IntVector(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) columns[j][i] = a[i][j];

  IntMatrix basis;
  std::set<IntVector> frontier;
  for (std::size_t j = 0; j < cols; ++j) {
    IntVector e(cols, 0);
    e[j] = 1;
    frontier.insert(std::move(e));
  }
  while (!frontier.empty()) {
    std::vector<std::pair<IntVector, IntVector>> open;  // (x, A x)
    for (const IntVector& x : frontier) {
      IntVector ax = apply_matrix(a, x);
      if (is_zero(ax)) {
        basis.push_back(x);
      } else {
        open.emplace_back(x, std::move(ax));
      }
    }
    std::set<IntVector> next;
    for (const auto& [x, ax] : open) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (dot(ax, columns[j]) >= 0) continue;
        IntVector y = x;
        y[j] += 1;
        const bool dominated = std::any_of(basis.begin(), basis.end(), [&](const IntVector& b) { return leq(b, y); });
        if (!dominated) next.insert(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  std::sort(basis.begin(), basis.end(), graded_lex_desc);
  return basis;
}

IntMatrix fibre(const IntMatrix& a, std::size_t cols, const IntVector& degree, const IntVector& target,
                const Integer& total_degree) {
  IntMatrix out;
  IntVector c(cols, 0);
  std::function<void(std::size_t, const Integer&)> rec = [&](std::size_t j, const Integer& remaining) {
    if (j == cols) {
      if (remaining == 0 && apply_matrix(a, c) == target) out.push_back(c);
      return;
    }
    const Integer max = remaining / degree[j];
    for (Integer k = max; k >= 0; --k) {
      c[j] = k;
      rec(j + 1, remaining - k * degree[j]);
    }
    c[j] = 0;
  };
  rec(0, total_degree);
  return out;  // lexicographically descending by construction
}

std::vector<Binomial> toric_ideal_generators(const IntMatrix& a, std::size_t cols, const IntVector& degree) {
  for (const auto& d : degree) {
    if (d <= 0) throw std::invalid_argument("grading must be positive");
  }
  const std::size_t rows = a.size();
  IntMatrix lawrence(rows, IntVector(2 * cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      lawrence[i][j] = a[i][j];
      lawrence[i][cols + j] = -a[i][j];
    }
  // Graver degrees: A x for Hilbert basis elements (x, y) of the Lawrence kernel
  // other than the trivial (e_j, e_j).
  std::map<std::pair<Integer, IntVector>, IntVector> degrees;  // (total degree, A x) -> x
  for (const IntVector& h : hilbert_basis_kernel(lawrence, 2 * cols)) {
    IntVector x(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(cols));
    IntVector y(h.begin() + static_cast<std::ptrdiff_t>(cols), h.end());
    if (x == y) continue;
    degrees.emplace(std::make_pair(dot(x, degree), apply_matrix(a, x)), x);
  }
  std::vector<Binomial> gens;
  for (const auto& [key, sample] : degrees) {
    const IntMatrix f = fibre(a, cols, degree, key.second, key.first);
    std::vector<std::size_t> parent(f.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
      return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    std::map<IntVector, std::size_t> index;
    for (std::size_t i = 0; i < f.size(); ++i) index[f[i]] = i;
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (const auto& [p, q] : gens) {
        for (const auto& [from, to] : {std::make_pair(&p, &q), std::make_pair(&q, &p)}) {
          if (!leq(*from, f[i])) continue;
          const IntVector moved = add(subtract(f[i], *from), *to);
          const auto it = index.find(moved);
          if (it != index.end()) parent[find(i)] = find(it->second);
        }
      }
    }
    // Representatives: the lexicographically largest member of each component
    // (fibre is sorted descending, so the first member seen).
    std::vector<std::size_t> reps;
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (seen.insert(find(i)).second) reps.push_back(i);
    }
    for (std::size_t r = 1; r < reps.size(); ++r) {
      gens.emplace_back(f[reps[0]], f[reps[r]]);
      parent[find(reps[r])] = find(reps[0]);
    }
  }
  return gens;
}

IntMatrix cone_facets(const IntMatrix& generators, std::size_t dim) {
  std::set<IntVector> unique(generators.begin(), generators.end());
  unique.erase(IntVector(dim, 0));
  const IntMatrix gens(unique.begin(), unique.end());
  if (integer_rank(gens, dim) != dim) throw std::invalid_argument("cone is not full-dimensional");
  std::set<IntVector> facets;
  const std::size_t k = gens.size();
  const std::size_t choose = dim - 1;
  std::vector<std::size_t> idx(choose);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    IntMatrix sub;
    for (auto i : idx) sub.push_back(gens[i]);
    if (integer_rank(sub, dim) == choose) {
      const IntMatrix ker = integer_kernel(sub, dim);
      IntVector n = primitive(ker.front());
      bool pos = true, neg = true;
      for (const auto& g : gens) {
        const Integer s = dot(n, g);
        if (s < 0) pos = false;
        if (s > 0) neg = false;
      }
      if (pos) facets.insert(n);
      if (neg) facets.insert(scale(Integer(-1), n));
    }
    if (choose == 0) break;
    std::size_t i = choose;
    while (i > 0 && idx[i - 1] == k - choose + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < choose; ++j) idx[j] = idx[j - 1] + 1;
  }
  return IntMatrix(facets.begin(), facets.end());
}

}  // namespace quivermod
