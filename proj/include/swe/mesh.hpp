#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace swe {

// Edge orientation: X edges are normal to e1 (they carry u1), Y edges are
// normal to e2 (they carry u2).
enum class Orientation { X = 0, Y = 1 };

enum class EdgeKind : std::uint8_t {
  Dead = 0,      // no active cell on either side
  Boundary = 1,  // exactly one active side (domain wall or mask wall)
  Interior = 2,  // active cells on both sides
};

struct Rect {
  double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;

  bool contains(double x, double y) const {
    return x > x0 && x < x1 && y > y0 && y < y1;
  }
};

// One edge of a dual mesh.  "parallel" means the dual edge is parallel to the
// primal edges whose dual cells it separates and lies inside a single primal
// cell; otherwise it lies along a primal grid line and spans halves of the two
// primal edges tau/tau2.
struct DualEdge {
  Orientation mesh = Orientation::X;  // which dual mesh it belongs to
  bool parallel = true;
  double measure = 0.0;
  // dual cells (as primal-edge lattice indices); b invalid for wall edges
  int ai = -1, aj = -1, bi = -1, bj = -1;
  // primal edges referenced by the flux formula: the two averaged edges in the
  // parallel case, tau/tau2 in the perpendicular case (-1 when absent)
  int ti = -1, tj = -1, t2i = -1, t2j = -1;
};

// Staggered (MAC) rectangular mesh: scalar unknowns live on cells, the i-th
// velocity component on the edges normal to e^(i).  Cells excluded by a mask
// stay in the index space but are flagged inactive; every edge touching an
// inactive or missing cell is a boundary (wall) edge.
class MacMesh {
public:
  static MacMesh build_uniform(int nx, int ny, const Rect& domain);
  static MacMesh build_masked(int nx, int ny, const Rect& domain,
                              const std::vector<Rect>& excluded);
  static MacMesh build_nonuniform(std::vector<double> x_coords,
                                  std::vector<double> y_coords);

  int nx() const { return nx_; }
  int ny() const { return ny_; }

  const std::vector<double>& x() const { return x_; }
  const std::vector<double>& y() const { return y_; }
  double dx(int i) const { return dx_[i]; }
  double dy(int j) const { return dy_[j]; }
  double xc(int i) const { return xc_[i]; }
  double yc(int j) const { return yc_[j]; }

  int cell_index(int i, int j) const { return j * nx_ + i; }
  bool active(int i, int j) const { return active_[cell_index(i, j)] != 0; }
  bool cell_valid(int i, int j) const {
    return i >= 0 && i < nx_ && j >= 0 && j < ny_ && active(i, j);
  }
  double cell_area(int i, int j) const { return dx_[i] * dy_[j]; }
  const std::vector<std::uint8_t>& active_mask() const { return active_; }
  int active_cells() const { return active_cells_; }
  double active_area() const { return active_area_; }

  // --- edge lattices -------------------------------------------------------
  // X edges: (nx+1) x ny, index (i,j); edge i lies on grid line x_i.
  // Y edges: nx x (ny+1), index (i,j); edge j lies on grid line y_j.
  int n_xedges() const { return (nx_ + 1) * ny_; }
  int n_yedges() const { return nx_ * (ny_ + 1); }
  int xedge_index(int i, int j) const { return j * (nx_ + 1) + i; }
  int yedge_index(int i, int j) const { return j * nx_ + i; }

  EdgeKind xedge_kind(int i, int j) const { return xkind_[xedge_index(i, j)]; }
  EdgeKind yedge_kind(int i, int j) const { return ykind_[yedge_index(i, j)]; }
  bool xedge_interior(int i, int j) const {
    return xedge_kind(i, j) == EdgeKind::Interior;
  }
  bool yedge_interior(int i, int j) const {
    return yedge_kind(i, j) == EdgeKind::Interior;
  }

  double xedge_length(int j) const { return dy_[j]; }
  double yedge_length(int i) const { return dx_[i]; }

  // |D_sigma| (sum of active half-cells), and the half areas |D_{K,sigma}|.
  double xedge_dual_area(int i, int j) const { return xdual_[xedge_index(i, j)]; }
  double yedge_dual_area(int i, int j) const { return ydual_[yedge_index(i, j)]; }
  double xedge_half_area(int i, int j, bool left) const {
    const int ci = left ? i - 1 : i;
    return cell_valid(ci, j) ? 0.5 * dx_[ci] * dy_[j] : 0.0;
  }
  double yedge_half_area(int i, int j, bool below) const {
    const int cj = below ? j - 1 : j;
    return cell_valid(i, cj) ? 0.5 * dx_[i] * dy_[cj] : 0.0;
  }

  // Edge mass centers.
  double xedge_x(int i) const { return x_[i]; }
  double xedge_y(int j) const { return yc_[j]; }
  double yedge_x(int i) const { return xc_[i]; }
  double yedge_y(int j) const { return y_[j]; }

  // --- dual edges ----------------------------------------------------------
  // X dual mesh: "parallel" dual edges sit inside each primal cell (one per
  // cell, normal e1, measure dy[j]); "perpendicular" dual edges lie on the
  // horizontal grid lines, lattice (nx+1) x (ny+1), normal e2, measure
  // (|tau| + |tau2|)/2 built from the active halves.  The Y dual mesh is the
  // transpose.  Kernels address these lattices directly; the enumeration below
  // materialises the topology for inspection and tests.
  int xperp_index(int i, int j) const { return j * (nx_ + 1) + i; }
  int yperp_index(int i, int j) const { return j * (nx_ + 1) + i; }
  double xperp_measure(int i, int j) const;  // dual edge at (x_i, y_j)
  double yperp_measure(int i, int j) const;  // dual edge at (x_i, y_j)

  void for_each_dual_edge(Orientation which,
                          const std::function<void(const DualEdge&)>& fn) const;
  std::vector<DualEdge> dual_edges(Orientation which) const;

  // --- global metrics ------------------------------------------------------
  double mesh_size() const { return mesh_size_; }    // delta_M = max diam(K)
  double regularity() const { return regularity_; }  // theta_M = max diam^2/|K|
  double min_cell_extent() const { return min_extent_; }

private:
  MacMesh() = default;
  void finalize(const std::vector<Rect>* excluded);
  void classify_edges();
  void check_connectivity() const;

  int nx_ = 0, ny_ = 0;
  std::vector<double> x_, y_, dx_, dy_, xc_, yc_;
  std::vector<std::uint8_t> active_;
  std::vector<EdgeKind> xkind_, ykind_;
  std::vector<double> xdual_, ydual_;
  int active_cells_ = 0;
  double active_area_ = 0.0;
  double mesh_size_ = 0.0;
  double regularity_ = 0.0;
  double min_extent_ = 0.0;
};

}  // namespace swe
