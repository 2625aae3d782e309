#include "weno/field.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <stdexcept>

#include "weno/errors.hpp"

namespace weno {

Field::Field(int ncomp, const Grid& grid) : ncomp_(ncomp), grid_(grid) {
  if (ncomp < 1) throw UsageError("field needs at least one component");
  if (grid.nx < 7 || (grid.ny != 1 && grid.ny < 7))
    throw UsageError("grid needs at least 7 cells per dimension");
  if (!(grid.x_max > grid.x_min) || (grid.is_2d() && !(grid.y_max > grid.y_min)))
    throw UsageError("empty domain");
  gy_ = grid.is_2d() ? ghost : 0;
  sx_ = static_cast<std::size_t>(grid.nx + 2 * ghost);
  plane_ = sx_ * static_cast<std::size_t>(grid.ny + 2 * gy_);
  data_.assign(plane_ * static_cast<std::size_t>(ncomp), 0.0);
}

double Field::interior_sum(int c) const {
  double s = 0;
  for (int j = 0; j < ny(); ++j)
    for (int i = 0; i < nx(); ++i) s += (*this)(c, i, j);
  return s;
}

bool Field::interior_finite() const {
  for (int c = 0; c < ncomp_; ++c)
    for (int j = 0; j < ny(); ++j)
      for (int i = 0; i < nx(); ++i)
        if (!std::isfinite((*this)(c, i, j))) return false;
  return true;
}

void apply_bc(Field& f) {
  const int nx = f.nx(), ny = f.ny(), g = Field::ghost;
  const bool periodic = f.grid().bc == Boundary::periodic;
  for (int c = 0; c < f.ncomp(); ++c) {
    for (int j = 0; j < ny; ++j) {
      for (int k = 1; k <= g; ++k) {
        f(c, -k, j) = periodic ? f(c, nx - k, j) : f(c, 0, j);
        f(c, nx - 1 + k, j) = periodic ? f(c, k - 1, j) : f(c, nx - 1, j);
      }
    }
    if (!f.grid().is_2d()) continue;
    // Ghost rows include the x-ghost columns so corners are filled too.
    for (int i = -g; i < nx + g; ++i) {
      for (int k = 1; k <= g; ++k) {
        f(c, i, -k) = periodic ? f(c, i, ny - k) : f(c, i, 0);
        f(c, i, ny - 1 + k) = periodic ? f(c, i, k - 1) : f(c, i, ny - 1);
      }
    }
  }
}

void write_field_csv(const Field& f, const std::string& path, const std::vector<std::string>& names) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << std::setprecision(17);
  os << "x";
  if (f.grid().is_2d()) os << ",y";
  for (int c = 0; c < f.ncomp(); ++c)
    os << "," << (c < static_cast<int>(names.size()) ? names[c] : "u" + std::to_string(c));
  os << "\n";
  for (int j = 0; j < f.ny(); ++j) {
    for (int i = 0; i < f.nx(); ++i) {
      os << f.xc(i);
      if (f.grid().is_2d()) os << "," << f.yc(j);
      for (int c = 0; c < f.ncomp(); ++c) os << "," << f(c, i, j);
      os << "\n";
    }
  }
}

}  // namespace weno
