#include "fmop/conormal.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace fmop {

namespace {

Mat conormal_basis_uncached(const FinSet& j, const ConormalContext& ctx) {
  const int d = ctx.d;
  const int n = j.size();
  Mat b(d * (n - 1), d * n, ctx.field);
  int row = 0;
  for (int t = 1; t < n; ++t)       // j ≠ min(J), in sorted order
    for (int a = 0; a < d; ++a) {
      b.at(row, t * d + a) = 1;
      b.at(row, a) = ctx.field.neg(1);  // −e_{min(J),a}
      ++row;
    }
  return b;
}

}  // namespace

Mat conormal_basis(const FinSet& j, const ConormalContext& ctx) {
  if (j.labels.empty())
    throw std::invalid_argument("conormal_basis: empty set");
  using Key = std::tuple<std::vector<int>, int, int>;
  static std::map<Key, Mat> cache;
  static std::shared_mutex mtx;
  Key key{j.labels, ctx.d, ctx.field.p};
  {
    std::shared_lock lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Mat b = conormal_basis_uncached(j, ctx);
  std::unique_lock lock(mtx);
  return cache.emplace(key, std::move(b)).first->second;
}

Mat ambient_map(const SetMap& f, const ConormalContext& ctx) {
  const int d = ctx.d;
  Mat m(d * f.codomain.size(), d * f.domain.size(), ctx.field);
  for (int s = 0; s < f.domain.size(); ++s) {
    int t = f.codomain.index_of(f(f.domain.labels[s]));
    for (int a = 0; a < d; ++a)
      m.at(t * d + a, s * d + a) =
          (m.at(t * d + a, s * d + a) + 1) % ctx.field.p;
  }
  return m;
}

Mat pushforward(const SetMap& f, const ConormalContext& ctx) {
  Mat amb = ambient_map(f, ctx);
  Mat bd = conormal_basis(f.domain, ctx);
  Mat bc = conormal_basis(f.codomain, ctx);
  Mat out(bc.rows(), bd.rows(), ctx.field);
  for (int t = 0; t < bd.rows(); ++t) {
    // the conormal condition (block sum zero) is preserved by fiber
    // summation, so the image always lies in the codomain kernel
    auto w = amb.apply(bd.row(t));
    auto coeffs = coordinates_in(bc, w);
    if (!coeffs)
      throw std::logic_error("pushforward: image escaped the conormal kernel");
    for (int r = 0; r < bc.rows(); ++r) out.at(r, t) = (*coeffs)[r];
  }
  return out;
}

bool verify_acute(const AcuteSquare& square, const ConormalContext& ctx) {
  Mat inc = pushforward(square.inclusion(), ctx);
  Mat quo = pushforward(square.quotient(), ctx);
  if (rank(inc) != inc.cols()) return false;   // first map injective
  if (rank(quo) != quo.rows()) return false;   // second map surjective
  return image(inc) == kernel(quo);            // exactness in the middle
}

}  // namespace fmop
