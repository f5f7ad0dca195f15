#include "rts/secrecy.hpp"

#include <algorithm>
#include <set>

#include "rts/error.hpp"
#include "rts/rng.hpp"

namespace rts::scheme {

namespace {

using Histogram = std::vector<std::pair<std::uint64_t, std::uint64_t>>;  // (view code, count)

Histogram tally(std::vector<std::uint64_t> codes) {
  std::sort(codes.begin(), codes.end());
  Histogram h;
  for (auto c : codes) {
    if (!h.empty() && h.back().first == c)
      ++h.back().second;
    else
      h.emplace_back(c, 1);
  }
  return h;
}

// Sum of |a(v) - b(v)| over all views.
std::uint64_t l1_distance(const Histogram& a, const Histogram& b) {
  std::uint64_t total = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      total += a[i++].second;
    } else if (i == a.size() || b[j].first < a[i].first) {
      total += b[j++].second;
    } else {
      total += a[i].second > b[j].second ? a[i].second - b[j].second : b[j].second - a[i].second;
      ++i;
      ++j;
    }
  }
  return total;
}

}  // namespace

SecrecyReport secrecy_probe(const design::Design& design, unsigned sigma, std::span<const std::size_t> players,
                            const field::FieldSpec& field, std::uint64_t trials, std::uint64_t seed) {
  const std::uint32_t q = field.size();
  if (q > kSecrecyMaxField) throw Error(ErrorCode::TooLarge, "secrecy probe needs |F| <= 16");
  if (q < design.v() + 1) throw Error(ErrorCode::InvalidArgument, "field too small for the design's points");
  if (sigma < 1 || sigma > design.v()) throw Error(ErrorCode::InvalidArgument, "sigma out of range");

  std::set<design::Point> held;
  for (auto p : players) {
    if (p >= design.b()) throw Error(ErrorCode::InvalidArgument, "no player " + std::to_string(p));
    for (auto x : design.block(p)) held.insert(x);
  }
  // With sigma or more points the view is a bijective image of the first
  // sigma of them, so encoding those suffices.
  std::vector<field::FieldSpec::Rank> xs;
  for (auto x : held) {
    if (xs.size() == sigma) break;
    xs.push_back(x + 1);
  }

  std::uint64_t space = 1;
  bool exhaustive = true;
  for (unsigned j = 0; j < sigma; ++j) {
    space *= q;
    if (space > kSecrecyExhaustiveGuard) exhaustive = false;
  }
  const std::uint64_t per_secret = exhaustive ? space / q : trials;
  if (per_secret == 0) throw Error(ErrorCode::InvalidArgument, "trials must be positive");

  std::vector<field::FieldSpec::Rank> coeffs(sigma, 0);
  auto view_code = [&]() {
    std::uint64_t code = 0;
    for (auto x : xs) {
      field::FieldSpec::Rank y = 0;
      for (std::size_t j = sigma; j-- > 0;) y = field.add(field.mul(y, x), coeffs[j]);
      code = code * q + y;
    }
    return code;
  };

  std::vector<Histogram> views;
  views.reserve(q);
  for (field::FieldSpec::Rank secret = 0; secret < q; ++secret) {
    std::vector<std::uint64_t> codes;
    codes.reserve(per_secret);
    coeffs[0] = secret;
    for (std::uint64_t n = 0; n < per_secret; ++n) {
      if (exhaustive) {
        std::uint64_t m = n;
        for (unsigned j = 1; j < sigma; ++j) {
          coeffs[j] = static_cast<field::FieldSpec::Rank>(m % q);
          m /= q;
        }
      } else {
        Rng rng = Rng::stream(seed, secret * per_secret + n);
        for (unsigned j = 1; j < sigma; ++j) coeffs[j] = static_cast<field::FieldSpec::Rank>(rng.below(q));
      }
      codes.push_back(view_code());
    }
    views.push_back(tally(std::move(codes)));
  }

  std::uint64_t worst = 0;
  for (std::size_t a = 0; a < views.size(); ++a)
    for (std::size_t b = a + 1; b < views.size(); ++b) worst = std::max(worst, l1_distance(views[a], views[b]));

  SecrecyReport report;
  report.exhaustive = exhaustive;
  report.trials_per_secret = per_secret;
  report.view_size = held.size();
  report.max_distance = Rational(worst) / Rational(2 * per_secret);
  return report;
}

}  // namespace rts::scheme
