#include "swe/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>

namespace swe {

namespace {

std::vector<double> linspace_edges(double a, double b, int n) {
  // Fill mirrored halves so that symmetric domains get exactly symmetric grid
  // lines (x_{n-i} == -x_i when b == -a); keeps reflected stencils bitwise
  // identical.
  std::vector<double> v(n + 1);
  const double h = (b - a) / n;
  for (int i = 0; i <= n / 2; ++i) v[i] = a + i * h;
  for (int i = n / 2 + 1; i <= n; ++i) v[i] = b - (n - i) * h;
  return v;
}

}  // namespace

MacMesh MacMesh::build_uniform(int nx, int ny, const Rect& domain) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("mesh: nx, ny must be >= 1");
  if (!(domain.x1 > domain.x0) || !(domain.y1 > domain.y0))
    throw std::invalid_argument("mesh: degenerate domain");
  MacMesh m;
  m.nx_ = nx;
  m.ny_ = ny;
  m.x_ = linspace_edges(domain.x0, domain.x1, nx);
  m.y_ = linspace_edges(domain.y0, domain.y1, ny);
  // store one width per axis so uniform really means uniform measures
  m.dx_.assign(nx, (domain.x1 - domain.x0) / nx);
  m.dy_.assign(ny, (domain.y1 - domain.y0) / ny);
  m.finalize(nullptr);
  return m;
}

MacMesh MacMesh::build_masked(int nx, int ny, const Rect& domain,
                              const std::vector<Rect>& excluded) {
  MacMesh m = build_uniform(nx, ny, domain);
  if (!excluded.empty()) m.finalize(&excluded);
  return m;
}

MacMesh MacMesh::build_nonuniform(std::vector<double> x_coords,
                                  std::vector<double> y_coords) {
  if (x_coords.size() < 2 || y_coords.size() < 2)
    throw std::invalid_argument("mesh: need at least two grid lines per axis");
  for (std::size_t i = 0; i + 1 < x_coords.size(); ++i)
    if (!(x_coords[i + 1] > x_coords[i]))
      throw std::invalid_argument("mesh: x coordinates not strictly increasing");
  for (std::size_t j = 0; j + 1 < y_coords.size(); ++j)
    if (!(y_coords[j + 1] > y_coords[j]))
      throw std::invalid_argument("mesh: y coordinates not strictly increasing");
  MacMesh m;
  m.nx_ = static_cast<int>(x_coords.size()) - 1;
  m.ny_ = static_cast<int>(y_coords.size()) - 1;
  m.x_ = std::move(x_coords);
  m.y_ = std::move(y_coords);
  m.dx_.resize(m.nx_);
  m.dy_.resize(m.ny_);
  for (int i = 0; i < m.nx_; ++i) m.dx_[i] = m.x_[i + 1] - m.x_[i];
  for (int j = 0; j < m.ny_; ++j) m.dy_[j] = m.y_[j + 1] - m.y_[j];
  m.finalize(nullptr);
  return m;
}

void MacMesh::finalize(const std::vector<Rect>* excluded) {
  xc_.resize(nx_);
  yc_.resize(ny_);
  for (int i = 0; i < nx_; ++i) xc_[i] = x_[i] + 0.5 * dx_[i];
  for (int j = 0; j < ny_; ++j) yc_[j] = y_[j] + 0.5 * dy_[j];

  active_.assign(static_cast<std::size_t>(nx_) * ny_, 1);
  if (excluded) {
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i)
        for (const Rect& r : *excluded)
          if (r.contains(xc_[i], yc_[j])) {
            active_[cell_index(i, j)] = 0;
            break;
          }
  }

  active_cells_ = 0;
  active_area_ = 0.0;
  mesh_size_ = 0.0;
  regularity_ = 0.0;
  min_extent_ = std::min(*std::min_element(dx_.begin(), dx_.end()),
                         *std::min_element(dy_.begin(), dy_.end()));
  for (int j = 0; j < ny_; ++j)
    for (int i = 0; i < nx_; ++i) {
      if (!active(i, j)) continue;
      ++active_cells_;
      const double area = cell_area(i, j);
      active_area_ += area;
      const double diam2 = dx_[i] * dx_[i] + dy_[j] * dy_[j];
      mesh_size_ = std::max(mesh_size_, std::sqrt(diam2));
      regularity_ = std::max(regularity_, diam2 / area);
    }
  if (active_cells_ == 0) throw std::invalid_argument("mesh: mask excludes every cell");

  classify_edges();
  if (excluded) check_connectivity();
}

void MacMesh::classify_edges() {
  xkind_.assign(n_xedges(), EdgeKind::Dead);
  ykind_.assign(n_yedges(), EdgeKind::Dead);
  xdual_.assign(n_xedges(), 0.0);
  ydual_.assign(n_yedges(), 0.0);
  for (int j = 0; j < ny_; ++j)
    for (int i = 0; i <= nx_; ++i) {
      const bool l = cell_valid(i - 1, j), r = cell_valid(i, j);
      const int e = xedge_index(i, j);
      xkind_[e] = (l && r) ? EdgeKind::Interior
                           : ((l || r) ? EdgeKind::Boundary : EdgeKind::Dead);
      xdual_[e] = (l ? 0.5 * dx_[i - 1] * dy_[j] : 0.0) +
                  (r ? 0.5 * dx_[i] * dy_[j] : 0.0);
    }
  for (int j = 0; j <= ny_; ++j)
    for (int i = 0; i < nx_; ++i) {
      const bool b = cell_valid(i, j - 1), t = cell_valid(i, j);
      const int e = yedge_index(i, j);
      ykind_[e] = (b && t) ? EdgeKind::Interior
                           : ((b || t) ? EdgeKind::Boundary : EdgeKind::Dead);
      ydual_[e] = (b ? 0.5 * dx_[i] * dy_[j - 1] : 0.0) +
                  (t ? 0.5 * dx_[i] * dy_[j] : 0.0);
    }
}

void MacMesh::check_connectivity() const {
  // Masks may split the domain; that is legal input, but worth a warning.
  std::vector<std::uint8_t> seen(active_.size(), 0);
  int start = -1;
  for (std::size_t c = 0; c < active_.size(); ++c)
    if (active_[c]) {
      start = static_cast<int>(c);
      break;
    }
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  int reached = 0;
  while (!q.empty()) {
    const int c = q.front();
    q.pop();
    ++reached;
    const int i = c % nx_, j = c / nx_;
    const int di[4] = {-1, 1, 0, 0}, dj[4] = {0, 0, -1, 1};
    for (int k = 0; k < 4; ++k) {
      const int ii = i + di[k], jj = j + dj[k];
      if (!cell_valid(ii, jj)) continue;
      const int cc = cell_index(ii, jj);
      if (!seen[cc]) {
        seen[cc] = 1;
        q.push(cc);
      }
    }
  }
  if (reached != active_cells_)
    std::fprintf(stderr,
                 "mesh: warning: mask disconnects the domain "
                 "(%d of %d active cells reachable)\n",
                 reached, active_cells_);
}

double MacMesh::xperp_measure(int i, int j) const {
  // Dual edge of the X dual mesh along grid line y_j at x_i; halves of the
  // horizontal edges tau = (i-1,j), tau2 = (i,j) contribute when their dual
  // cell is nonempty.
  double m = 0.0;
  if (i - 1 >= 0 && ydual_[yedge_index(i - 1, j)] > 0.0) m += 0.5 * dx_[i - 1];
  if (i < nx_ && ydual_[yedge_index(i, j)] > 0.0) m += 0.5 * dx_[i];
  return m;
}

double MacMesh::yperp_measure(int i, int j) const {
  double m = 0.0;
  if (j - 1 >= 0 && xdual_[xedge_index(i, j - 1)] > 0.0) m += 0.5 * dy_[j - 1];
  if (j < ny_ && xdual_[xedge_index(i, j)] > 0.0) m += 0.5 * dy_[j];
  return m;
}

void MacMesh::for_each_dual_edge(
    Orientation which, const std::function<void(const DualEdge&)>& fn) const {
  DualEdge e;
  e.mesh = which;
  if (which == Orientation::X) {
    // parallel: one per cell, separating the dual cells of its two X edges
    e.parallel = true;
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) {
        if (!active(i, j)) continue;
        e.measure = dy_[j];
        e.ai = i; e.aj = j; e.bi = i + 1; e.bj = j;
        e.ti = i; e.tj = j; e.t2i = i + 1; e.t2j = j;
        fn(e);
      }
    e.parallel = false;
    for (int j = 0; j <= ny_; ++j)
      for (int i = 0; i <= nx_; ++i) {
        const double m = xperp_measure(i, j);
        if (m <= 0.0) continue;
        e.measure = m;
        e.ai = i; e.aj = j - 1; e.bi = i; e.bj = j;  // dual cells below/above
        e.ti = i - 1; e.tj = j; e.t2i = i; e.t2j = j;            // Y edges
        fn(e);
      }
  } else {
    e.parallel = true;
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) {
        if (!active(i, j)) continue;
        e.measure = dx_[i];
        e.ai = i; e.aj = j; e.bi = i; e.bj = j + 1;
        e.ti = i; e.tj = j; e.t2i = i; e.t2j = j + 1;
        fn(e);
      }
    e.parallel = false;
    for (int j = 0; j <= ny_; ++j)
      for (int i = 0; i <= nx_; ++i) {
        const double m = yperp_measure(i, j);
        if (m <= 0.0) continue;
        e.measure = m;
        e.ai = i - 1; e.aj = j; e.bi = i; e.bj = j;  // dual cells left/right
        e.ti = i; e.tj = j - 1; e.t2i = i; e.t2j = j;            // X edges
        fn(e);
      }
  }
}

std::vector<DualEdge> MacMesh::dual_edges(Orientation which) const {
  std::vector<DualEdge> out;
  for_each_dual_edge(which, [&](const DualEdge& e) { out.push_back(e); });
  return out;
}

}  // namespace swe
