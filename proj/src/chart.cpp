#include "sj/chart.hpp"

namespace sj {

const char* to_string(Space s) {
  switch (s) {
    case Space::Hn: return "hn";
    case Space::Hnm: return "hnm";
    case Space::Disk: return "disk";
  }
  return "?";
}

int Chart::ix(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  if (b >= n) fail(ErrorCode::IndexOutOfRange, "chart index out of range");
  // Upper triangle row-major: rows before a contribute n + (n-1) + ... .
  return static_cast<int>(a * n - a * (a - 1) / 2 + (b - a));
}

std::vector<std::string> Chart::coordinate_names() const {
  const bool disk = space == Space::Disk;
  std::vector<std::string> names(dim());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const std::string ij = std::to_string(a + 1) + std::to_string(b + 1);
      names[static_cast<std::size_t>(ix(a, b))] = (disk ? "re_w" : "x") + ij;
      names[static_cast<std::size_t>(iy(a, b))] = (disk ? "im_w" : "y") + ij;
    }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const std::string kl = std::to_string(k + 1) + std::to_string(l + 1);
      names[static_cast<std::size_t>(iu(k, l))] = (disk ? "re_eta" : "u") + kl;
      names[static_cast<std::size_t>(iv(k, l))] = (disk ? "im_eta" : "v") + kl;
    }
  return names;
}

std::vector<double> coords(const SiegelPoint& p) {
  return pack(Chart::siegel(p.n()), p.omega(), CMat(0, p.n()));
}

std::vector<double> coords(const JacobiPoint& p) {
  return pack(Chart::jacobi(p.n(), p.m()), p.omega(), p.Z());
}

std::vector<double> coords(const DiskPoint& p) {
  return pack(Chart::disk(p.n(), p.m()), p.W(), p.eta());
}

SiegelPoint siegel_point_at(const Chart& chart, std::span<const double> c) {
  return SiegelPoint::from_omega(unpack<double>(chart, c).first);
}

JacobiPoint jacobi_point_at(const Chart& chart, std::span<const double> c) {
  auto mats = unpack<double>(chart, c);
  return JacobiPoint::from_complex(mats.first, mats.second);
}

DiskPoint disk_point_at(const Chart& chart, std::span<const double> c) {
  auto mats = unpack<double>(chart, c);
  return DiskPoint::make(mats.first, mats.second);
}

ChartMats<Jet> unpack_jets(const Chart& chart, std::span<const Jet> vars) {
  return unpack<Jet>(chart, vars);
}

}  // namespace sj
