#include "ooc3d/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ooc3d {
namespace {

BigInt pow_big(const BigInt& b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

BigInt divide_exact(const BigInt& a, const BigInt& b) {
  if (b == 0 || a % b != 0) {
    throw std::logic_error("inexact division in a counting formula");
  }
  return a / b;
}

}  // namespace

std::uint64_t theta(unsigned k, std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  std::uint64_t t = 1;
  for (unsigned i = 0; i < k; ++i) {
    std::uint64_t m = 0;
    if (__builtin_mul_overflow(t, q, &m) || __builtin_add_overflow(m, 1, &t)) {
      throw std::overflow_error("theta(" + std::to_string(k) + ", " +
                                std::to_string(q) + ") exceeds 64 bits");
    }
  }
  return t;
}

BigInt theta_big(unsigned k, const BigInt& q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  BigInt t = 1;
  for (unsigned i = 0; i < k; ++i) t = t * q + 1;
  return t;
}

BigInt gaussian_coefficient(unsigned n, unsigned j, std::uint64_t q) {
  if (j > n) throw std::invalid_argument("q-binomial requires j <= n");
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  const BigInt Q = q;
  BigInt num = 1, den = 1;
  for (unsigned i = 0; i < j; ++i) {
    num *= pow_big(Q, n) - pow_big(Q, i);
    den *= pow_big(Q, j) - pow_big(Q, i);
  }
  return divide_exact(num, den);
}

BigInt num_lines(unsigned k, std::uint64_t q) {
  if (k < 1) throw std::invalid_argument("lines require dimension >= 1");
  const BigInt Q = q;
  return divide_exact(theta_big(k, Q) * theta_big(k - 1, Q), Q + 1);
}

namespace {

std::shared_ptr<const Field> make_ground_field(std::uint64_t q,
                                               std::uint64_t cap) {
  const auto pp = PrimePower::factor(q);
  if (!pp) {
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  }
  return std::make_shared<const Field>(make_field(pp->p, pp->e, cap));
}

std::uint64_t projective_point_count(unsigned k, std::uint64_t q) {
  if (k < 1) throw std::invalid_argument("projective dimension must be >= 1");
  return theta(k, q);
}

}  // namespace

ProjectiveSpace::ProjectiveSpace(std::uint64_t q, unsigned k,
                                 std::uint64_t field_cap)
    : q_(q),
      k_(k),
      n_(projective_point_count(k, q)),
      ground_(make_ground_field(q, field_cap)),
      ambient_(Field::extension(ground_, k + 1, field_cap)) {
  if (ambient_.group_order() != n_ * ground_->group_order()) {
    throw std::logic_error("ambient field order mismatch");
  }
}

std::uint64_t ProjectiveSpace::point_of(Field::Elem a) const {
  return ambient_.log(a) % n_;
}

Field::Elem ProjectiveSpace::element_of(std::uint64_t point) const {
  if (point >= n_) throw std::invalid_argument("point index out of range");
  return ambient_.exp(point);
}

std::vector<std::uint64_t> ProjectiveSpace::point_coordinates(
    std::uint64_t point) const {
  const auto digits = ambient_.coeffs(element_of(point));
  std::size_t j0 = 0;
  while (digits[j0] == 0) ++j0;  // a nonzero element has a nonzero digit
  const Field::Elem s = ground_->inv(digits[j0]);
  std::vector<std::uint64_t> out(digits.size());
  for (std::size_t j = 0; j < digits.size(); ++j) {
    out[j] = ground_->mul(digits[j], s);
  }
  return out;
}

std::uint64_t ProjectiveSpace::point_index(
    const std::vector<std::uint64_t>& coords) const {
  if (coords.size() != k_ + 1) {
    throw std::invalid_argument("coordinate vector has wrong length");
  }
  std::vector<Field::Elem> c(coords.size());
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] >= q_) throw std::invalid_argument("coordinate out of range");
    c[j] = static_cast<Field::Elem>(coords[j]);
  }
  const Field::Elem e = ambient_.from_coeffs(c);
  if (e == 0) throw std::invalid_argument("zero vector is not a point");
  return point_of(e);
}

Flat ProjectiveSpace::line_through(std::uint64_t p, std::uint64_t r) const {
  if (p >= n_ || r >= n_) throw std::invalid_argument("point index out of range");
  if (p == r) throw std::invalid_argument("two distinct points are required");
  const Field::Elem e1 = element_of(p);
  const Field::Elem e2 = element_of(r);
  PointSet pts;
  pts.reserve(q_ + 1);
  pts.push_back(r);
  for (Field::Elem c = 0; c < q_; ++c) {
    pts.push_back(point_of(ambient_.add(e1, ambient_.mul(c, e2))));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() != q_ + 1) {
    throw std::logic_error("line does not have q+1 points");
  }
  return Flat{1, std::move(pts)};
}

Flat ProjectiveSpace::span(const PointSet& points) const {
  if (points.empty()) throw std::invalid_argument("span of an empty set");
  std::vector<char> in_span(ambient_.order(), 0);
  std::vector<Field::Elem> members{0};
  in_span[0] = 1;
  unsigned basis = 0;
  for (const std::uint64_t pt : points) {
    const Field::Elem e = element_of(pt);
    if (in_span[e]) continue;
    ++basis;
    const std::size_t old_size = members.size();
    members.reserve(old_size * q_);
    for (Field::Elem c = 1; c < q_; ++c) {
      const Field::Elem ce = ambient_.mul(c, e);
      for (std::size_t s = 0; s < old_size; ++s) {
        const Field::Elem v = ambient_.add(members[s], ce);
        members.push_back(v);
        in_span[v] = 1;
      }
    }
  }
  PointSet pts;
  pts.reserve((members.size() - 1) / (q_ - 1));
  for (const Field::Elem v : members) {
    if (v != 0) pts.push_back(point_of(v));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() != theta(basis - 1, q_)) {
    throw std::logic_error("span size is not a flat cardinality");
  }
  return Flat{basis - 1, std::move(pts)};
}

Spread ProjectiveSpace::singer_spread(unsigned d) const {
  if (d > k_) throw std::invalid_argument("flat dimension exceeds the space");
  if ((k_ + 1) % (d + 1) != 0) {
    throw std::invalid_argument(
        "a spread of " + std::to_string(d) + "-flats requires (d+1) | (k+1)");
  }
  const std::uint64_t td = theta(d, q_);
  if (n_ % td != 0) throw std::logic_error("theta divisibility violated");
  const std::uint64_t t = n_ / td;
  Spread spread;
  spread.flat_dimension = d;
  spread.elements.reserve(t);
  for (std::uint64_t r = 0; r < t; ++r) {
    PointSet pts;
    pts.reserve(td);
    for (std::uint64_t j = 0; j < td; ++j) pts.push_back(r + j * t);
    Flat f = span(pts);
    if (f.dimension != d || f.points != pts) {
      throw std::logic_error("spread coset is not a d-flat");
    }
    spread.elements.push_back(std::move(f));
  }
  return spread;
}

std::vector<PointSet> ProjectiveSpace::enumerate_lines(
    std::uint64_t max_points) const {
  if (n_ > max_points) {
    throw std::runtime_error(
        "point count " + std::to_string(n_) +
        " exceeds the enumeration cap " + std::to_string(max_points) +
        "; raise the cap to proceed");
  }
  std::vector<PointSet> lines;
  std::vector<std::uint32_t> stamp(n_, 0);
  std::uint32_t gen = 0;
  for (std::uint64_t p = 0; p + 1 < n_; ++p) {
    ++gen;
    for (std::uint64_t r = p + 1; r < n_; ++r) {
      if (stamp[r] == gen) continue;
      PointSet line = line_through(p, r).points;
      for (const std::uint64_t x : line) {
        if (x > p) stamp[x] = gen;
      }
      if (line[0] == p) lines.push_back(std::move(line));
    }
  }
  return lines;
}

}  // namespace ooc3d
