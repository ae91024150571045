#include "zomd/seed_stream.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace zomd {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer (Stafford mix13).
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

SeedStream::SeedStream(std::uint64_t root, std::uint64_t stream)
    : root_(root), stream_(stream) {
  base_ = mix(mix(root + kGamma) ^ (stream * 0xda942042e4dd58b5ULL + kGamma));
}

SeedStream SeedStream::fork(std::uint64_t child) const {
  return SeedStream(base_, child * 0x2545f4914f6cdd1dULL + 0x9e3779b9ULL);
}

std::uint64_t SeedStream::next_u64() {
  return mix(base_ + (++counter_) * kGamma);
}

double SeedStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeedStream::next_double_open() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double SeedStream::next_gaussian() {
  const double u1 = next_double_open();
  const double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::string format_point(const Vec& v, int max_coords) {
  std::ostringstream os;
  os << "(";
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n && i < max_coords; ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  if (n > max_coords) os << ", ...";
  os << ")";
  return os.str();
}

double lp_norm(const Vec& v, double p) {
  if (v.size() == 0) return 0.0;
  const double m = v.cwiseAbs().maxCoeff();
  if (m == 0.0) return 0.0;
  if (std::isinf(p)) return m;
  if (p == 1.0) return v.cwiseAbs().sum();
  if (p == 2.0) return v.norm();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    acc += std::pow(std::abs(v[i]) / m, p);
  }
  return m * std::pow(acc, 1.0 / p);
}

double dual_exponent(double p) {
  if (p == 1.0) return kInfExponent;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

}  // namespace zomd
