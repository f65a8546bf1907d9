#include "quivermod/representation.hpp"

#include <algorithm>
#include <string>

#include "quivermod/errors.hpp"

namespace quivermod {

namespace {

std::size_t dim_at(const DimensionVector& d, VertexId v) { return static_cast<std::size_t>(d[v]); }

}  // namespace

Representation::Representation(PresentationPtr quiver, DimensionVector dimension, std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), dimension_(std::move(dimension)), maps_(std::move(maps)) {
  if (!quiver_) throw QuiverError(ErrorCode::PresentationMismatch, "null presentation");
  if (dimension_.size() != quiver_->vertex_count()) {
    throw QuiverError(ErrorCode::VertexMismatch, "dimension vector does not match the vertex count");
  }
  if (maps_.size() != quiver_->arrow_count()) {
    throw QuiverError(ErrorCode::BadMatrixShape, "expected one matrix per arrow");
  }
  for (ArrowId a = 0; a < maps_.size(); ++a) {
    const Arrow& arrow = quiver_->arrow(a);
    if (maps_[a].rows() != dim_at(dimension_, arrow.head) || maps_[a].cols() != dim_at(dimension_, arrow.tail)) {
      throw QuiverError(ErrorCode::BadMatrixShape,
                        "matrix for arrow '" + arrow.name + "' has shape " + std::to_string(maps_[a].rows()) + "x" +
                            std::to_string(maps_[a].cols()));
    }
  }
}

Representation Representation::zero(PresentationPtr quiver, DimensionVector dimension) {
  std::vector<Matrix> maps;
  for (const Arrow& a : quiver->arrows()) {
    maps.emplace_back(dim_at(dimension, a.head), dim_at(dimension, a.tail));
  }
  return Representation(std::move(quiver), std::move(dimension), std::move(maps));
}

Representation Representation::simple(PresentationPtr quiver, VertexId vertex) {
  std::vector<std::int64_t> d(quiver->vertex_count(), 0);
  d.at(vertex) = 1;
  return zero(std::move(quiver), DimensionVector(std::move(d)));
}

Representation Representation::thin(PresentationPtr quiver, DimensionVector dimension,
                                    const std::vector<Rational>& scalars) {
  if (!dimension.is_thin()) throw QuiverError(ErrorCode::NotThin, "dimension vector is not thin");
  if (scalars.size() != quiver->arrow_count()) throw QuiverError(ErrorCode::BadMatrixShape, "one scalar per arrow");
  std::vector<Matrix> maps;
  for (ArrowId a = 0; a < scalars.size(); ++a) {
    const Arrow& arrow = quiver->arrow(a);
    Matrix m(dim_at(dimension, arrow.head), dim_at(dimension, arrow.tail));
    if (!m.empty()) {
      m(0, 0) = scalars[a];
    } else if (scalars[a] != 0) {
      throw QuiverError(ErrorCode::BadMatrixShape, "nonzero scalar on arrow '" + arrow.name + "' with unsupported endpoint");
    }
    maps.push_back(std::move(m));
  }
  return Representation(std::move(quiver), std::move(dimension), std::move(maps));
}

Rational Representation::thin_scalar(ArrowId a) const {
  const Matrix& m = maps_.at(a);
  return m.empty() ? Rational(0) : m(0, 0);
}

Representation Representation::base_changed(const std::vector<Matrix>& g) const {
  if (g.size() != dimension_.size()) throw QuiverError(ErrorCode::VertexMismatch, "one group element per vertex");
  std::vector<Matrix> g_inv;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (g[v].rows() != dim_at(dimension_, v) || g[v].cols() != dim_at(dimension_, v)) {
      throw QuiverError(ErrorCode::BadMatrixShape, "base change has wrong size at vertex " + std::to_string(v));
    }
    auto inv = inverse(g[v]);
    if (!inv) throw QuiverError(ErrorCode::BadMatrixShape, "base change is singular at vertex " + std::to_string(v));
    g_inv.push_back(std::move(*inv));
  }
  std::vector<Matrix> maps;
  for (ArrowId a = 0; a < maps_.size(); ++a) {
    const Arrow& arrow = quiver_->arrow(a);
    maps.push_back(g[arrow.head] * maps_[a] * g_inv[arrow.tail]);
  }
  return Representation(quiver_, dimension_, std::move(maps));
}

bool operator==(const Representation& a, const Representation& b) {
  return same_presentation(a, b) && a.dimension_ == b.dimension_ && a.maps_ == b.maps_;
}

bool same_presentation(const Representation& m, const Representation& n) {
  return m.quiver_ptr() == n.quiver_ptr() || m.quiver() == n.quiver();
}

Representation direct_sum(const Representation& m, const Representation& n) {
  if (!same_presentation(m, n)) throw QuiverError(ErrorCode::PresentationMismatch, "direct sum across presentations");
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < m.dimension().size(); ++i) d.push_back(m.dimension()[i] + n.dimension()[i]);
  std::vector<Matrix> maps;
  for (ArrowId a = 0; a < m.maps().size(); ++a) {
    const Matrix& x = m.map(a);
    const Matrix& y = n.map(a);
    Matrix s(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) s(r, c) = x(r, c);
    for (std::size_t r = 0; r < y.rows(); ++r)
      for (std::size_t c = 0; c < y.cols(); ++c) s(x.rows() + r, x.cols() + c) = y(r, c);
    maps.push_back(std::move(s));
  }
  return Representation(m.quiver_ptr(), DimensionVector(std::move(d)), std::move(maps));
}

bool is_intertwiner(const Representation& from, const Representation& to, const Intertwiner& psi) {
  const QuiverPresentation& q = from.quiver();
  if (psi.components.size() != q.vertex_count()) return false;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (psi.components[v].rows() != dim_at(to.dimension(), v) ||
        psi.components[v].cols() != dim_at(from.dimension(), v)) {
      return false;
    }
  }
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    if (to.map(a) * psi.components[arrow.tail] != psi.components[arrow.head] * from.map(a)) return false;
  }
  return true;
}

std::optional<Matrix> evaluate_path(const Representation& m, const Path& p) {
  if (!m.quiver().owns(p)) throw QuiverError(ErrorCode::ForeignPath, "path does not belong to this quiver");
  if (p.is_zero()) return std::nullopt;
  Matrix acc = Matrix::identity(dim_at(m.dimension(), p.tail()));
  for (ArrowId a : p.arrows()) acc = m.map(a) * acc;
  return acc;
}

RelationCheck satisfies_relations(const Representation& m) {
  const auto& rels = m.quiver().relations();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const Relation& rel = rels[r];
    const Path& first = rel.terms.front().path;
    Matrix sum(dim_at(m.dimension(), first.head()), dim_at(m.dimension(), first.tail()));
    for (const RelationTerm& t : rel.terms) {
      sum = sum + t.coefficient * *evaluate_path(m, t.path);
    }
    if (!sum.is_zero()) return {false, r, std::move(sum)};
  }
  return {};
}

std::vector<Intertwiner> hom_space(const Representation& m, const Representation& n) {
  if (!same_presentation(m, n)) throw QuiverError(ErrorCode::PresentationMismatch, "hom between different presentations");
  const QuiverPresentation& q = m.quiver();
  const std::size_t nv = q.vertex_count();
  // Unknowns: entries of each ψ_v, row-major, vertex after vertex.
  std::vector<std::size_t> offset(nv + 1, 0);
  for (VertexId v = 0; v < nv; ++v) offset[v + 1] = offset[v] + dim_at(n.dimension(), v) * dim_at(m.dimension(), v);
  const std::size_t unknowns = offset[nv];
  const auto var = [&](VertexId v, std::size_t r, std::size_t c) { return offset[v] + r * dim_at(m.dimension(), v) + c; };

  std::vector<std::vector<Rational>> rows;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    const Matrix& phi = m.map(a);
    const Matrix& chi = n.map(a);
    const std::size_t out_rows = dim_at(n.dimension(), arrow.head);
    const std::size_t out_cols = dim_at(m.dimension(), arrow.tail);
    for (std::size_t r = 0; r < out_rows; ++r) {
      for (std::size_t c = 0; c < out_cols; ++c) {
        std::vector<Rational> row(unknowns);
        // (χ ψ_t)[r][c] - (ψ_h φ)[r][c]
        for (std::size_t k = 0; k < chi.cols(); ++k) row[var(arrow.tail, k, c)] += chi(r, k);
        for (std::size_t k = 0; k < phi.rows(); ++k) row[var(arrow.head, r, k)] -= phi(k, c);
        rows.push_back(std::move(row));
      }
    }
  }
  Matrix system(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < unknowns; ++j) system(i, j) = rows[i][j];

  std::vector<Intertwiner> basis;
  for (const Matrix& v : nullspace(system)) {
    Intertwiner psi;
    for (VertexId x = 0; x < nv; ++x) {
      Matrix comp(dim_at(n.dimension(), x), dim_at(m.dimension(), x));
      for (std::size_t r = 0; r < comp.rows(); ++r)
        for (std::size_t c = 0; c < comp.cols(); ++c) comp(r, c) = v(var(x, r, c), 0);
      psi.components.push_back(std::move(comp));
    }
    basis.push_back(std::move(psi));
  }
  return basis;
}

namespace {

bool invertible_everywhere(const std::vector<Intertwiner>& basis, const std::vector<Integer>& point, std::size_t nv) {
  for (VertexId v = 0; v < nv; ++v) {
    Matrix combo(basis.front().components[v].rows(), basis.front().components[v].cols());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (point[j] != 0) combo = combo + Rational(point[j]) * basis[j].components[v];
    }
    if (determinant(combo) == 0) return false;
  }
  return true;
}

}  // namespace

bool is_isomorphic(const Representation& m, const Representation& n) {
  if (!same_presentation(m, n)) throw QuiverError(ErrorCode::PresentationMismatch, "different presentations");
  if (m.dimension() != n.dimension()) return false;
  const std::size_t nv = m.quiver().vertex_count();
  if (m.dimension().total() == 0) return true;
  const auto basis = hom_space(m, n);
  if (basis.empty()) return false;
  const std::size_t k = basis.size();

  // det(Σ t_j ψ^(j)) multiplied over vertices is a polynomial of degree D = Σ d(i)
  // in each t_j; if nonzero it cannot vanish on all of {0..D}^k.
  const auto degree = static_cast<std::size_t>(m.dimension().total());

  std::vector<std::vector<Integer>> probes;
  probes.emplace_back(k, Integer(1));
  {
    std::vector<Integer> p(k), q(k);
    for (std::size_t j = 0; j < k; ++j) {
      p[j] = j + 1;
      q[j] = (j + 1) * (j + 1) + 1;
    }
    probes.push_back(p);
    probes.push_back(q);
  }
  for (const auto& p : probes) {
    if (invertible_everywhere(basis, p, nv)) return true;
  }
  std::vector<Integer> point(k, 0);
  while (true) {
    if (invertible_everywhere(basis, point, nv)) return true;
    std::size_t j = 0;
    while (j < k && point[j] == degree) point[j++] = 0;
    if (j == k) break;
    point[j] += 1;
  }
  return false;
}

SubRepresentation subrep_from_spans(const Representation& m, const std::vector<Matrix>& spans) {
  const QuiverPresentation& q = m.quiver();
  if (spans.size() != q.vertex_count()) throw QuiverError(ErrorCode::NotSubrep, "one span per vertex required");
  std::vector<std::int64_t> d;
  for (VertexId v = 0; v < spans.size(); ++v) {
    if (spans[v].rows() != dim_at(m.dimension(), v) || rank(spans[v]) != spans[v].cols()) {
      throw QuiverError(ErrorCode::NotSubrep, "span at vertex " + std::to_string(v) + " is not a basis of a subspace");
    }
    d.push_back(static_cast<std::int64_t>(spans[v].cols()));
  }
  std::vector<Matrix> maps;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    const Matrix image = m.map(a) * spans[arrow.tail];
    auto coords = solve(spans[arrow.head], image);
    if (!coords) throw QuiverError(ErrorCode::NotSubrep, "span is not stable under arrow '" + arrow.name + "'");
    maps.push_back(std::move(*coords));
  }
  return {Representation(m.quiver_ptr(), DimensionVector(std::move(d)), std::move(maps)), Intertwiner{spans}};
}

SubRepresentation subrep_generated_by(const Representation& m, const std::vector<VertexVector>& generators) {
  const QuiverPresentation& q = m.quiver();
  std::vector<Matrix> spans;
  for (VertexId v = 0; v < q.vertex_count(); ++v) spans.emplace_back(dim_at(m.dimension(), v), 0);
  for (const VertexVector& g : generators) {
    if (g.vertex >= q.vertex_count() || g.vector.cols() != 1 || g.vector.rows() != dim_at(m.dimension(), g.vertex)) {
      throw QuiverError(ErrorCode::BadVectorShape, "generator does not fit its vertex space");
    }
    spans[g.vertex] = column_space_basis(hstack(spans[g.vertex], g.vector));
  }
  // Dimensions only grow, so at most Σ d(i) productive rounds.
  bool changed = true;
  while (changed) {
    changed = false;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      const Arrow& arrow = q.arrow(a);
      if (spans[arrow.tail].cols() == 0) continue;
      const Matrix image = m.map(a) * spans[arrow.tail];
      Matrix grown = column_space_basis(hstack(spans[arrow.head], image));
      if (grown.cols() != spans[arrow.head].cols()) {
        spans[arrow.head] = std::move(grown);
        changed = true;
      }
    }
  }
  return subrep_from_spans(m, spans);
}

Representation quotient_rep(const Representation& m, const Intertwiner& inclusion) {
  const QuiverPresentation& q = m.quiver();
  if (inclusion.components.size() != q.vertex_count()) throw QuiverError(ErrorCode::NotSubrep, "inclusion has wrong arity");
  std::vector<Matrix> full_bases;  // [B | C] per vertex
  std::vector<std::size_t> sub_dims;
  std::vector<std::int64_t> quotient_dims;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    const Matrix& b = inclusion.components[v];
    const std::size_t n = dim_at(m.dimension(), v);
    if (b.rows() != n || rank(b) != b.cols()) {
      throw QuiverError(ErrorCode::NotSubrep, "inclusion is not injective at vertex " + std::to_string(v));
    }
    Matrix basis = b;
    for (std::size_t j = 0; j < n && basis.cols() < n; ++j) {
      Matrix e(n, 1);
      e(j, 0) = 1;
      Matrix trial = hstack(basis, e);
      if (rank(trial) == trial.cols()) basis = std::move(trial);
    }
    sub_dims.push_back(b.cols());
    quotient_dims.push_back(static_cast<std::int64_t>(n - b.cols()));
    full_bases.push_back(std::move(basis));
  }
  std::vector<Matrix> maps;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    if (!solve(inclusion.components[arrow.head], m.map(a) * inclusion.components[arrow.tail])) {
      throw QuiverError(ErrorCode::NotSubrep, "image is not stable under arrow '" + arrow.name + "'");
    }
    const Matrix& src = full_bases[arrow.tail];
    std::vector<std::size_t> complement;
    for (std::size_t j = sub_dims[arrow.tail]; j < src.cols(); ++j) complement.push_back(j);
    const Matrix image = m.map(a) * src.columns(complement);
    const Matrix coords = *solve(full_bases[arrow.head], image);
    maps.push_back(coords.rows_range(sub_dims[arrow.head], coords.rows()));
  }
  return Representation(m.quiver_ptr(), DimensionVector(std::move(quotient_dims)), std::move(maps));
}

}  // namespace quivermod
