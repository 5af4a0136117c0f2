#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <vector>

namespace crysp {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Crystal lattice: three independent period vectors and the cell they span.
/// Immutable after construction; build through from_periods().
struct Lattice {
  Mat3 periods = Mat3::Identity();      // columns a1, a2, a3
  Mat3 inv_periods = Mat3::Identity();  // cached inverse (fractional <-> Cartesian)
  double volume = 1.0;                  // |det[a1 a2 a3]|

  /// Throws DegenerateLattice when |det| < 1e-12 relative to scale^3.
  static Lattice from_periods(const Vec3& a1, const Vec3& a2, const Vec3& a3);

  Vec3 a(int k) const { return periods.col(k); }
  Vec3 cartesian(const Vec3& frac) const { return periods * frac; }
  Vec3 fractional(const Vec3& x) const { return inv_periods * x; }
  /// Cell scale |T^3|^(1/3), the length unit for relative tolerances.
  double scale() const;
};

/// Reciprocal lattice, b_k . a_k' = 2 pi delta_kk'.
struct DualLattice {
  Mat3 periods = Mat3::Identity();  // columns b1, b2, b3
  Vec3 b(int k) const { return periods.col(k); }
};

DualLattice dual_basis(const Lattice& lat);

/// Plane-wave index set k = n1 b1 + n2 b2 + n3 b3 over centered integer
/// ranges ceil(-n/2) .. ceil(n/2)-1 per axis, stored in FFT order: along one
/// axis of length n the storage index i maps to the integer frequency
///   i            for i <  ceil(n/2)
///   i - n        otherwise,
/// and the flat index of (i1,i2,i3) is (i1*n2 + i2)*n3 + i3 (z fastest).
/// The zero mode always sits at flat index 0.
struct KGrid {
  std::array<int, 3> dims{};
  std::vector<Vec3> kvecs;      // Cartesian k, FFT storage order
  std::vector<double> k2;       // |k|^2 cache, same order
  std::size_t zero_index = 0;

  std::size_t size() const { return kvecs.size(); }
  std::size_t flat(int i1, int i2, int i3) const {
    return (static_cast<std::size_t>(i1) * dims[1] + i2) * dims[2] + i3;
  }

  static int freq_of_index(int i, int n) { return i < (n + 1) / 2 ? i : i - n; }
  static int index_of_freq(int m, int n) { return m >= 0 ? m : m + n; }

  /// Centered integer triple of a flat index.
  std::array<int, 3> freqs(std::size_t flat_index) const;
  /// Flat index of the negated mode, or size() when -k is not representable
  /// (the unpaired edge modes of even dimensions).
  std::size_t conj_index(std::size_t flat_index) const;
};

/// Requires all dims >= 2.
KGrid make_kgrid(const DualLattice& dual, const std::array<int, 3>& dims);

/// Fractional coordinates of x reduced to [0,1)^3; x and its wrap differ by
/// a lattice vector.
Vec3 wrap_to_cell(const Lattice& lat, const Vec3& x);

/// Geodesic distance on the torus R^3 / Gamma between Cartesian points.
double torus_distance(const Lattice& lat, const Vec3& x, const Vec3& y);

}  // namespace crysp
