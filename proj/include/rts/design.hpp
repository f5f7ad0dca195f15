#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rts::design {

using Point = std::uint32_t;
using Block = std::vector<Point>;

struct Certification {
  unsigned t = 0;
  std::uint64_t lambda = 0;
  bool operator==(const Certification&) const = default;
};

/// Points 0..v-1 and a list of uniform-size, strictly increasing blocks.
/// Structural invariants are enforced at construction (InvariantViolation);
/// the (t, lambda) certificate is only attached by certify().
class Design {
 public:
  Design(std::size_t v, std::vector<Block> blocks);

  std::size_t v() const noexcept { return v_; }
  std::size_t b() const noexcept { return blocks_.size(); }
  std::size_t k() const noexcept { return blocks_.front().size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_.at(i); }
  const std::optional<Certification>& certified() const noexcept { return certified_; }

  bool contains(std::size_t block_index, Point x) const;

  /// Blocks containing x, ascending.
  std::vector<std::size_t> blocks_through(Point x) const;

  bool operator==(const Design& other) const { return v_ == other.v_ && blocks_ == other.blocks_; }

 private:
  friend Design certify(Design design, unsigned t, std::uint64_t lambda);

  std::size_t v_;
  std::vector<Block> blocks_;
  std::optional<Certification> certified_;
};

struct ValidationResult {
  bool certified = false;
  unsigned t = 0;
  std::uint64_t lambda = 0;
  std::uint64_t subsets_checked = 0;
  /// First t-subset (lexicographic order) whose count differs from lambda.
  std::optional<Block> offending;
  std::uint64_t offending_count = 0;
};

inline constexpr std::uint64_t kValidateGuard = 10'000'000;

/// Exhaustive count of containing blocks for every t-subset of points.
/// Throws InvalidArgument unless 1 <= t <= k, TooLarge if C(v,t) > 10^7.
ValidationResult validate(const Design& design, unsigned t, std::uint64_t lambda);

/// Checks `samples` uniformly drawn t-subsets (seeded) instead of all of them.
ValidationResult validate_sampled(const Design& design, unsigned t, std::uint64_t lambda,
                                  std::uint64_t samples, std::uint64_t seed);

/// Validates exhaustively and attaches the certificate; throws InvariantViolation on failure.
Design certify(Design design, unsigned t, std::uint64_t lambda);

/// Largest t (with its lambda) for which the design is a t-design, searching
/// t = 1..k while C(v,t) stays within the validation guard.
std::optional<Certification> detect_certification(const Design& design);

/// Parameters of a t-(v,k,lambda) design.
struct DesignParams {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  unsigned t = 0;
  std::uint64_t lambda = 1;

  /// From a certified design; throws InvalidArgument if uncertified.
  static DesignParams of(const Design& design);

  /// r_i = lambda * C(v-i, t-i) / C(k-i, t-i); throws NotAdmissible when not integral.
  std::uint64_t replication(unsigned i) const;
  /// b = lambda * C(v,t) / C(k,t).
  std::uint64_t blocks() const;
  /// True iff every r_i (1 <= i <= t) is integral.
  bool admissible() const;
};

inline std::uint64_t replication(const DesignParams& params, unsigned i) { return params.replication(i); }

/// Plain-text design format: "v b k" header, then b blocks of k ascending
/// 0-based points. Lines starting with '#' are comments.
Design load_design(const std::string& text);
std::string store_design(const Design& design);

Design read_design_file(const std::string& path);
void write_design_file(const Design& design, const std::string& path);

}  // namespace rts::design
