#include "rooftop/fan_isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace rooftop {

namespace {

using Mask = std::vector<std::uint64_t>;

// shared[i][j] = number of maximal cones containing rays i and j.
std::vector<std::vector<std::size_t>> shared_cones(const Fan& f) {
  const std::size_t n = f.rays().size();
  const std::size_t words = (f.size() + 63) / 64;
  std::vector<Mask> member(n, Mask(words, 0));
  for (std::size_t k = 0; k < f.size(); ++k)
    for (std::size_t i : f.maximal_cones()[k]) member[i][k / 64] |= std::uint64_t{1} << (k % 64);
  std::vector<std::vector<std::size_t>> out(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t w = 0; w < words; ++w)
        out[i][j] += static_cast<std::size_t>(std::popcount(member[i][w] & member[j][w]));
  return out;
}

std::multiset<std::size_t> cone_sizes(const Fan& f) {
  std::multiset<std::size_t> out;
  for (const RaySet& c : f.maximal_cones()) out.insert(c.size());
  return out;
}

std::set<RaySet> image_cones(const Fan& a, const std::vector<std::size_t>& perm) {
  std::set<RaySet> out;
  for (const RaySet& c : a.maximal_cones()) {
    RaySet img;
    for (std::size_t i : c) img.push_back(perm[i]);
    std::sort(img.begin(), img.end());
    out.insert(std::move(img));
  }
  return out;
}

class Search {
public:
  Search(const Fan& a, const Fan& b, const IsomorphismOptions& opt)
      : a_(a), b_(b), opt_(opt), sa_(shared_cones(a)), sb_(shared_cones(b)),
        perm_(a.rays().size(), 0), used_(b.rays().size(), false), target_cones_(b.maximal_cones().begin(), b.maximal_cones().end()) {
    // Rays that raise the rank come first, so the map is pinned down after
    // rank-many choices.
    std::vector<LatticeVector> basis;
    for (std::size_t i = 0; i < a.rays().size(); ++i) {
      basis.push_back(a.rays()[i]);
      if (rank(basis, a.rank()) == basis.size()) order_.push_back(i);
      else basis.pop_back();
    }
  }

  std::optional<IntMatrix> run() { return extend(0); }

private:
  int label(const std::vector<int>& labels, std::size_t i) const { return labels.empty() ? 0 : labels[i]; }

  bool fits(std::size_t i, std::size_t j, std::size_t depth) const {
    if (used_[j] || label(opt_.source_labels, i) != label(opt_.target_labels, j)) return false;
    if (sa_[i][i] != sb_[j][j]) return false;
    for (std::size_t k = 0; k < depth; ++k) {
      std::size_t p = order_[k];
      if (sa_[i][p] != sb_[j][perm_[p]]) return false;
    }
    return true;
  }

  std::optional<IntMatrix> extend(std::size_t depth) {
    if (depth == order_.size()) return complete();
    const std::size_t i = order_[depth];
    for (std::size_t j = 0; j < b_.rays().size(); ++j) {
      if (!fits(i, j, depth)) continue;
      std::vector<LatticeVector> images;
      for (std::size_t k = 0; k < depth; ++k) images.push_back(b_.rays()[perm_[order_[k]]]);
      images.push_back(b_.rays()[j]);
      if (rank(images, b_.rank()) != images.size()) continue;
      perm_[i] = j;
      used_[j] = true;
      auto found = extend(depth + 1);
      used_[j] = false;
      if (found) return found;
    }
    return std::nullopt;
  }

  // The basis rays are assigned; solve for the map and test everything else.
  std::optional<IntMatrix> complete() {
    const std::size_t d = a_.rank();
    IntMatrix src(d, d), dst(d, d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t t = 0; t < d; ++t) {
        src(k, t) = a_.rays()[order_[k]][t];
        dst(k, t) = b_.rays()[perm_[order_[k]]][t];
      }
    // map * src^T = dst^T, so each row r of map solves src * r = column of dst.
    IntMatrix map(d, d);
    for (std::size_t row = 0; row < d; ++row) {
      auto sol = solve(src, dst.column(row));
      if (!sol) return std::nullopt;
      for (std::size_t t = 0; t < d; ++t) {
        if ((*sol)[t].get_den() != 1) return std::nullopt;
        map(row, t) = (*sol)[t].get_num();
      }
    }
    if (!is_unimodular(map)) return std::nullopt;

    std::vector<std::size_t> perm = perm_;
    std::vector<bool> used = used_;
    for (std::size_t i = 0; i < a_.rays().size(); ++i) {
      if (std::find(order_.begin(), order_.end(), i) != order_.end()) continue;
      auto j = b_.ray_index(map * a_.rays()[i]);
      if (!j || used[*j] || label(opt_.source_labels, i) != label(opt_.target_labels, *j)) return std::nullopt;
      perm[i] = *j;
      used[*j] = true;
    }
    if (image_cones(a_, perm) != target_cones_) return std::nullopt;
    if (opt_.accept && !opt_.accept(map)) return std::nullopt;
    return map;
  }

  const Fan& a_;
  const Fan& b_;
  const IsomorphismOptions& opt_;
  std::vector<std::vector<std::size_t>> sa_, sb_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> perm_;
  std::vector<bool> used_;
  std::set<RaySet> target_cones_;
};

}  // namespace

std::optional<IntMatrix> find_fan_isomorphism(const Fan& a, const Fan& b, const IsomorphismOptions& options) {
  if (!options.source_labels.empty() && options.source_labels.size() != a.rays().size())
    throw DimensionError("one label per source ray expected");
  if (!options.target_labels.empty() && options.target_labels.size() != b.rays().size())
    throw DimensionError("one label per target ray expected");
  if (a.rank() != b.rank() || a.rays().size() != b.rays().size() || a.size() != b.size()) return std::nullopt;
  if (cone_sizes(a) != cone_sizes(b)) return std::nullopt;
  if (a.rays().empty()) {
    IntMatrix id = IntMatrix::identity(a.rank());
    if (a.maximal_cones() == b.maximal_cones() && (!options.accept || options.accept(id))) return id;
    return std::nullopt;
  }
  // The search pins the map down on a basis, so non-spanning fans are not
  // handled and reported as not isomorphic.
  if (rank(a.rays(), a.rank()) != a.rank() || rank(b.rays(), b.rank()) != b.rank()) return std::nullopt;
  return Search(a, b, options).run();
}

bool verify_fan_isomorphism(const IntMatrix& map, const Fan& a, const Fan& b) {
  if (a.rank() != b.rank() || map.rows() != a.rank() || map.cols() != a.rank()) return false;
  if (a.rank() > 0 && !is_unimodular(map)) return false;
  if (a.rays().size() != b.rays().size()) return false;
  std::vector<std::size_t> perm;
  std::vector<bool> hit(b.rays().size(), false);
  for (const LatticeVector& r : a.rays()) {
    auto j = b.ray_index(map * r);
    if (!j || hit[*j]) return false;
    hit[*j] = true;
    perm.push_back(*j);
  }
  std::set<RaySet> want(b.maximal_cones().begin(), b.maximal_cones().end());
  return image_cones(a, perm) == want;
}

}  // namespace rooftop
