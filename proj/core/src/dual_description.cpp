// Double description method with lineality tracking. Extreme-ray adjacency is
// decided combinatorially from tight-constraint sets, so no LP is needed.

#include "rooftop/polyhedral.hpp"

#include <algorithm>
#include <cstdint>

namespace rooftop {

namespace {

class Bits {
public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void resize(std::size_t n) { words_.resize((n + 63) / 64, 0); }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  LatticeVector v;
  Bits tight;
};

// Drops the component along span(lineality) so that rays get a canonical
// representative modulo the lineality space.
LatticeVector reduce_modulo(const LatticeVector& r, const std::vector<LatticeVector>& lineality) {
  if (lineality.empty()) return r;
  const std::size_t k = lineality.size();
  IntMatrix gram(k, k);
  LatticeVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(lineality[i], lineality[j]);
    rhs[i] = dot(lineality[i], r);
  }
  auto c = solve(gram, rhs);
  RationalVector out = to_rational(r);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < r.size(); ++t) out[t] -= (*c)[i] * lineality[i][t];
  return primitive_multiple(out);
}

}  // namespace

Generators dual_generators(std::size_t rank, const std::vector<LatticeVector>& constraints) {
  std::vector<LatticeVector> lin;
  for (std::size_t i = 0; i < rank; ++i) lin.push_back(unit_vector(rank, i));
  std::vector<Ray> rays;
  std::size_t processed = 0;

  for (const LatticeVector& a : constraints) {
    if (a.size() != rank) throw DimensionError("constraint has " + std::to_string(a.size()) + " coordinates, expected " + std::to_string(rank));
    if (rooftop::is_zero(a)) continue;
    const std::size_t bit = processed++;
    for (Ray& r : rays) r.tight.resize(processed);

    auto hit = std::find_if(lin.begin(), lin.end(), [&](const LatticeVector& l) { return dot(a, l) != 0; });
    if (hit != lin.end()) {
      LatticeVector l = *hit;
      Integer al = dot(a, l);
      if (al < 0) {
        l = -l;
        al = -al;
      }
      std::vector<LatticeVector> next_lin;
      for (auto it = lin.begin(); it != lin.end(); ++it) {
        if (it == hit) continue;
        Integer av = dot(a, *it);
        next_lin.push_back(av == 0 ? *it : primitive(scaled(*it, al) - scaled(l, av)));
      }
      for (Ray& r : rays) {
        Integer ar = dot(a, r.v);
        if (ar != 0) r.v = primitive(scaled(r.v, al) - scaled(l, ar));
        r.tight.set(bit);
      }
      Ray fresh{l, Bits(processed)};
      for (std::size_t i = 0; i < bit; ++i) fresh.tight.set(i);
      rays.push_back(std::move(fresh));
      lin = std::move(next_lin);
      continue;
    }

    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i].v);
      if (value[i] > 0) pos.push_back(i);
      else if (value[i] < 0) neg.push_back(i);
    }
    std::vector<Ray> next;
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        Bits common = rays[p].tight & rays[n].tight;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == n) continue;
          if (common.subset_of(rays[o].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh{primitive(scaled(rays[n].v, value[p]) - scaled(rays[p].v, value[n])), common};
        fresh.tight.set(bit);
        next.push_back(std::move(fresh));
      }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] < 0) continue;
      if (value[i] == 0) rays[i].tight.set(bit);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  Generators out;
  out.lineality = saturated_span(lin, rank);
  for (const Ray& r : rays) out.rays.push_back(reduce_modulo(r.v, out.lineality));
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

}  // namespace rooftop
