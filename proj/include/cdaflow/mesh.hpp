#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace cdaflow {

struct Vec2 {
  double x = 0.0, y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

enum class BoundaryTag { wall, lid, inflow, outflow, obstacle };

const char* to_string(BoundaryTag tag);

struct BoundaryEdge {
  int v0 = -1, v1 = -1;
  BoundaryTag tag = BoundaryTag::wall;
};

/// Conforming triangulation with tagged boundary edges. Cells store CCW
/// vertex triples; h_max is the maximum element diameter.
struct Mesh {
  std::vector<Vec2> vertices;
  std::vector<std::array<int, 3>> cells;
  std::vector<BoundaryEdge> boundary_edges;
  double h_max = 0.0;

  // Grid lines used by the structured builders. Kept so the coarse overlay
  // can report which H values align with this mesh. Empty for meshes that
  // did not come from a tensor grid.
  std::vector<double> grid_lines_x, grid_lines_y;
  bool barycentric_refined = false;

  double cell_area(int c) const;
  Vec2 centroid(int c) const;
  double total_area() const;
};

/// Uniform n x n triangulation of the unit square, 2n^2 cells.
/// The y=1 side is tagged lid, all other sides wall.
Mesh build_unit_square(int n);

/// Splits every cell into 3 by inserting its barycenter. Boundary edges are
/// unchanged. Required before building Scott-Vogelius spaces.
Mesh barycentric_refine(const Mesh& mesh);

/// Structured triangulation of the 2.2 x 0.41 channel minus the 0.1 x 0.1
/// block at (0.2, 0.2). nx is the number of columns along the channel and
/// must be a multiple of 22 so the block boundary lies on grid lines.
/// Tags: inflow at x=0, outflow at x=2.2, wall top/bottom, obstacle on the
/// block perimeter.
Mesh build_channel_with_block(int nx);

/// Checks positive cell areas, the interior-edge=2 / boundary-edge=1
/// incidence invariant, and that the tagged boundary matches the
/// topological boundary. Throws std::runtime_error on violation.
void validate_mesh(const Mesh& mesh);

/// Axis-aligned coarse observation grid of cell size H anchored at the
/// domain corner, clipped to the domain. Coarse cells that contain no fluid
/// (e.g. inside the channel block) are dropped; the remaining cells are
/// numbered compactly in row-major (x fastest) order.
struct CoarseOverlay {
  double H = 0.0;
  double x0 = 0.0, y0 = 0.0;
  int nx = 0, ny = 0;  // coarse grid extents before compaction
  std::vector<int> cell_of_fine;                 // fine cell -> compact id
  std::vector<double> coarse_measures;           // fluid area per compact cell
  std::vector<std::array<int, 2>> coarse_index;  // compact id -> (ix, iy)

  int n_cells() const { return static_cast<int>(coarse_measures.size()); }
  bool full_rectangle() const { return n_cells() == nx * ny; }
};

/// Builds the overlay, verifying that every fine cell lies inside exactly
/// one coarse cell. A misaligned H is rejected with a message listing the
/// admissible values for this mesh.
CoarseOverlay build_coarse_overlay(const Mesh& mesh, double H);

/// H values for which build_coarse_overlay succeeds on this mesh, derived
/// from the generating grid lines. Empty if the mesh has no grid metadata.
std::vector<double> admissible_overlay_sizes(const Mesh& mesh);

}  // namespace cdaflow
