#pragma once

#include "oracles.hpp"

#include "rooftop/exact.hpp"

namespace support {

inline rooftop::LatticeVector lattice(const oracle::Vec& v) {
  rooftop::LatticeVector out;
  for (oracle::i64 x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

inline std::vector<rooftop::LatticeVector> lattice(const oracle::Mat& m) {
  std::vector<rooftop::LatticeVector> out;
  for (const oracle::Vec& v : m) out.push_back(lattice(v));
  return out;
}

inline oracle::Vec machine(const rooftop::LatticeVector& v) {
  oracle::Vec out;
  for (const rooftop::Integer& x : v) out.push_back(x.get_si());
  return out;
}

inline oracle::Mat machine(const std::vector<rooftop::LatticeVector>& m) {
  oracle::Mat out;
  for (const auto& v : m) out.push_back(machine(v));
  return out;
}

inline rooftop::IntMatrix matrix(const oracle::Mat& m) {
  return rooftop::IntMatrix::from_rows(lattice(m), m.empty() ? 0 : m[0].size());
}

}  // namespace support
