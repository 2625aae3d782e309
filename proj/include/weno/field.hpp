#pragma once
// Cell averages on a uniform 1D or 2D grid with three ghost layers.
#include <cstddef>
#include <string>
#include <vector>

namespace weno {

enum class Boundary { periodic, outflow };

struct Grid {
  int nx = 0;
  int ny = 1;  // 1 means a 1D grid (no ghost rows)
  double x_min = 0, x_max = 1;
  double y_min = 0, y_max = 1;
  Boundary bc = Boundary::periodic;

  bool is_2d() const { return ny > 1; }
  double dx() const { return (x_max - x_min) / nx; }
  double dy() const { return (y_max - y_min) / ny; }
};

class Field {
 public:
  static constexpr int ghost = 3;

  Field() = default;
  Field(int ncomp, const Grid& grid);

  int ncomp() const { return ncomp_; }
  const Grid& grid() const { return grid_; }
  int nx() const { return grid_.nx; }
  int ny() const { return grid_.ny; }
  double dx() const { return grid_.dx(); }
  double dy() const { return grid_.dy(); }
  double xc(int i) const { return grid_.x_min + (i + 0.5) * dx(); }
  double yc(int j) const { return grid_.y_min + (j + 0.5) * dy(); }

  /// i in [-3, nx+3), j in [-3, ny+3) on 2D grids and j = 0 on 1D grids.
  double& operator()(int c, int i, int j = 0) { return data_[index(c, i, j)]; }
  double operator()(int c, int i, int j = 0) const { return data_[index(c, i, j)]; }

  /// Row stride along x is 1; along y it is row_stride().
  std::ptrdiff_t row_stride() const { return sx_; }
  std::size_t index(int c, int i, int j) const {
    return static_cast<std::size_t>(c) * plane_ + static_cast<std::size_t>(j + gy_) * sx_ +
           static_cast<std::size_t>(i + ghost);
  }

  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

  /// Sum of a component over interior cells (fixed order).
  double interior_sum(int c) const;
  bool interior_finite() const;

 private:
  int ncomp_ = 0;
  Grid grid_;
  int gy_ = 0;
  std::size_t sx_ = 0, plane_ = 0;
  std::vector<double> data_;
};

/// Fills ghost layers by periodic wrap or zeroth-order extrapolation.
void apply_bc(Field& f);

/// CSV snapshot: x[,y] then one column per component.
void write_field_csv(const Field& f, const std::string& path, const std::vector<std::string>& names);

}  // namespace weno
