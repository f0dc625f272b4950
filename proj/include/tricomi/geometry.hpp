#pragma once

// Characteristic coordinates, source data, region classification and the
// branch angle of z relative to a source point (0, b), b <= 0.

#include <complex>
#include <cstdint>
#include <string_view>

namespace tricomi::geometry {

using cplx = std::complex<double>;

struct PhysPoint {
  double x;
  double y;
};

// l = 3x + 2(-y)^{3/2}, m = 3x - 2(-y)^{3/2}; l >= m on y <= 0.
struct CharPoint {
  double l;
  double m;
};

struct Source {
  double b;   // source ordinate, b <= 0
  double a;   // (+-a, 0) are the feet of the source characteristics
  double l0;  // source in characteristic coordinates is (l0, -l0)
};

enum class RegionTag : std::uint8_t {
  DI,
  DII,
  DIII,
  DIV,
  OnSourceCharacteristic,
  OnReflectedCharacteristic,
  OnAxis,
  DPlus,
  DMinus,
  OnOriginCharacteristic,
};

// Bit set of open regions whose closure contains a point.
enum RegionBit : std::uint8_t {
  kBitDI = 1u << 0,
  kBitDII = 1u << 1,
  kBitDIII = 1u << 2,
  kBitDIV = 1u << 3,
  kBitDPlus = 1u << 4,
  kBitDMinus = 1u << 5,
};

struct Region {
  RegionTag tag;
  std::uint8_t adjacent;  // RegionBit mask; a single bit for interior points
};

// z = rho e^{i theta} with theta = arg z in [0, pi].
struct BranchData {
  cplx z;
  double rho;
  double theta;
};

std::string_view region_name(RegionTag tag);
bool is_interior(RegionTag tag);
std::uint8_t region_bit(RegionTag tag);

// Image under x -> -x: swaps DIII and DIV, fixes every other tag.
RegionTag mirror(RegionTag tag);

CharPoint to_char(PhysPoint p);
PhysPoint from_char(CharPoint q);
Source source_from_b(double b);

double default_eps(const Source& s);

// eps < 0 selects default_eps(s).
Region classify(PhysPoint p, const Source& s, double eps = -1.0);

BranchData branch_data(PhysPoint p, const Source& s);

// zeta via characteristic coordinates for y <= 0 and conj(z)/z for y > 0.
cplx zeta(PhysPoint p, const Source& s);
// zeta as the ratio of the two physical-coordinate quadratics.
cplx zeta_physical(PhysPoint p, const Source& s);
double zeta_char(CharPoint q, const Source& s);

double origin_discriminant(PhysPoint p);

}  // namespace tricomi::geometry
