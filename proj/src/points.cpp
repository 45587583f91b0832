#include "eip/points.hpp"

#include <sstream>

namespace eip {

ProjPoint::ProjPoint(const PrimeField& field, std::span<const Scalar> coords)
    : coords_(coords.begin(), coords.end()) {
  std::size_t lead = 0;
  for (auto& c : coords_) c %= field.p();
  while (lead < coords_.size() && coords_[lead] == 0) ++lead;
  if (lead == coords_.size()) throw ParameterError("projective point with all coordinates zero");
  const Scalar iv = field.inv(coords_[lead]);
  for (auto& c : coords_) c = field.mul(c, iv);
}

namespace {
Vector reduced(const PrimeField& field, std::initializer_list<std::int64_t> coords) {
  Vector v;
  for (auto c : coords) v.push_back(field.reduce(c));
  return v;
}
}  // namespace

ProjPoint::ProjPoint(const PrimeField& field, std::initializer_list<std::int64_t> coords)
    : ProjPoint(field, reduced(field, coords)) {}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

std::vector<ProjPoint> projective_points(const PrimeField& field, int r) {
  if (r < 1) throw ParameterError("projective space needs r >= 1");
  const Scalar p = field.p();
  std::vector<ProjPoint> out;
  // Leading 1 at position `lead`, zeros before it, anything after, enumerated
  // lexicographically; leads further right come first in lex order.
  for (int lead = r - 1; lead >= 0; --lead) {
    const auto tail = static_cast<std::size_t>(r - 1 - lead);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < tail; ++k) total *= p;
    Vector v(static_cast<std::size_t>(r), 0);
    v[static_cast<std::size_t>(lead)] = 1;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (std::size_t k = 0; k < tail; ++k) {
        v[static_cast<std::size_t>(r) - 1 - k] = static_cast<Scalar>(c % p);
        c /= p;
      }
      out.emplace_back(field, v);
    }
  }
  return out;
}

std::vector<ProjPoint> sample_points(const PrimeField& field, int r, std::size_t count,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Scalar> dist(0, field.p() - 1);
  std::vector<ProjPoint> out;
  out.reserve(count);
  Vector v(static_cast<std::size_t>(r));
  while (out.size() < count) {
    bool nonzero = false;
    for (auto& c : v) {
      c = dist(rng);
      nonzero = nonzero || c != 0;
    }
    if (nonzero) out.emplace_back(field, v);
  }
  return out;
}

ProjPoint transform(const Matrix& g, const ProjPoint& alpha) {
  return ProjPoint(g.field(), apply(g, alpha.coords()));
}

}  // namespace eip
