#include "rts/design.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "rts/error.hpp"
#include "rts/numeric.hpp"
#include "rts/rng.hpp"

namespace rts::design {

namespace {

std::string block_string(const Block& block) {
  std::string out = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(block[i]);
  }
  return out + "}";
}

// Table of C(n, j) for n <= v, j <= t, saturated.
std::vector<std::vector<std::uint64_t>> binomial_table(std::size_t v, unsigned t) {
  std::vector<std::vector<std::uint64_t>> c(v + 1, std::vector<std::uint64_t>(t + 1, 0));
  for (std::size_t n = 0; n <= v; ++n) {
    c[n][0] = 1;
    for (unsigned j = 1; j <= t && j <= n; ++j) {
      const std::uint64_t a = c[n - 1][j - 1], b = c[n - 1][j];
      c[n][j] = (a > UINT64_MAX - b) ? UINT64_MAX : a + b;
    }
  }
  return c;
}

std::vector<std::uint32_t> subset_counts(const Design& design, unsigned t,
                                         const std::vector<std::vector<std::uint64_t>>& c) {
  std::vector<std::uint32_t> counts(c[design.v()][t], 0);
  std::vector<std::size_t> idx(t);
  for (const Block& block : design.blocks()) {
    // Walk the t-subsets of the block, adding the colex rank of each.
    for (unsigned i = 0; i < t; ++i) idx[i] = i;
    const std::size_t k = block.size();
    for (;;) {
      std::uint64_t rank = 0;
      for (unsigned i = 0; i < t; ++i) rank += c[block[idx[i]]][i + 1];
      ++counts[rank];
      int pos = static_cast<int>(t) - 1;
      while (pos >= 0 && idx[pos] == k - t + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (unsigned i = pos + 1; i < t; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return counts;
}

}  // namespace

Design::Design(std::size_t v, std::vector<Block> blocks) : v_(v), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error(ErrorCode::InvariantViolation, "design has no blocks");
  const std::size_t k = blocks_.front().size();
  if (k < 2 || k >= v_)
    throw Error(ErrorCode::InvariantViolation,
                "block size " + std::to_string(k) + " must satisfy 2 <= k < v = " + std::to_string(v_));
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& block = blocks_[i];
    if (block.size() != k)
      throw Error(ErrorCode::InvariantViolation, "block " + std::to_string(i) + " has size " +
                                                     std::to_string(block.size()) + ", expected " +
                                                     std::to_string(k));
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (block[j] >= v_)
        throw Error(ErrorCode::InvariantViolation,
                    "block " + std::to_string(i) + " has point " + std::to_string(block[j]) + " >= v");
      if (j > 0 && block[j - 1] >= block[j])
        throw Error(ErrorCode::InvariantViolation, "block " + std::to_string(i) + " is not strictly increasing");
    }
  }
}

bool Design::contains(std::size_t block_index, Point x) const {
  const Block& block = blocks_.at(block_index);
  return std::binary_search(block.begin(), block.end(), x);
}

std::vector<std::size_t> Design::blocks_through(Point x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (contains(i, x)) out.push_back(i);
  return out;
}

ValidationResult validate(const Design& design, unsigned t, std::uint64_t lambda) {
  if (t < 1 || t > design.k())
    throw Error(ErrorCode::InvalidArgument, "t = " + std::to_string(t) + " must satisfy 1 <= t <= k");
  const auto c = binomial_table(design.v(), t);
  const std::uint64_t total = c[design.v()][t];
  if (total > kValidateGuard)
    throw Error(ErrorCode::TooLarge, "C(v,t) = " + std::to_string(total) + " exceeds 10^7");

  const auto counts = subset_counts(design, t, c);

  ValidationResult result;
  result.t = t;
  result.lambda = lambda;
  result.subsets_checked = total;
  result.certified = true;

  // Lexicographic scan so the reported failure is the first one in that order.
  Block subset(t);
  for (unsigned i = 0; i < t; ++i) subset[i] = i;
  const std::size_t v = design.v();
  for (;;) {
    std::uint64_t rank = 0;
    for (unsigned i = 0; i < t; ++i) rank += c[subset[i]][i + 1];
    if (counts[rank] != lambda) {
      result.certified = false;
      result.offending = subset;
      result.offending_count = counts[rank];
      break;
    }
    int pos = static_cast<int>(t) - 1;
    while (pos >= 0 && subset[pos] == v - t + pos) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (unsigned i = pos + 1; i < t; ++i) subset[i] = subset[i - 1] + 1;
  }
  return result;
}

ValidationResult validate_sampled(const Design& design, unsigned t, std::uint64_t lambda,
                                  std::uint64_t samples, std::uint64_t seed) {
  if (t < 1 || t > design.k())
    throw Error(ErrorCode::InvalidArgument, "t = " + std::to_string(t) + " must satisfy 1 <= t <= k");
  const std::size_t words = (design.b() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> incidence(design.v(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < design.b(); ++i)
    for (Point x : design.block(i)) incidence[x][i / 64] |= std::uint64_t{1} << (i % 64);

  ValidationResult result;
  result.t = t;
  result.lambda = lambda;
  result.certified = true;
  std::vector<std::uint64_t> acc(words);
  for (std::uint64_t s = 0; s < samples; ++s) {
    Rng rng = Rng::stream(seed, s);
    Block subset;
    while (subset.size() < t) {
      const Point x = static_cast<Point>(rng.below(design.v()));
      if (std::find(subset.begin(), subset.end(), x) == subset.end()) subset.push_back(x);
    }
    std::sort(subset.begin(), subset.end());
    acc = incidence[subset[0]];
    for (unsigned i = 1; i < t; ++i)
      for (std::size_t w = 0; w < words; ++w) acc[w] &= incidence[subset[i]][w];
    std::uint64_t count = 0;
    for (auto w : acc) count += static_cast<std::uint64_t>(std::popcount(w));
    ++result.subsets_checked;
    if (count != lambda) {
      result.certified = false;
      result.offending = subset;
      result.offending_count = count;
      break;
    }
  }
  return result;
}

Design certify(Design design, unsigned t, std::uint64_t lambda) {
  const ValidationResult r = validate(design, t, lambda);
  if (!r.certified)
    throw Error(ErrorCode::InvariantViolation, "not a " + std::to_string(t) + "-design with lambda " +
                                                   std::to_string(lambda) + ": subset " +
                                                   block_string(*r.offending) + " lies in " +
                                                   std::to_string(r.offending_count) + " blocks");
  design.certified_ = Certification{t, lambda};
  return design;
}

std::optional<Certification> detect_certification(const Design& design) {
  std::optional<Certification> best;
  for (unsigned t = 1; t <= design.k(); ++t) {
    const auto c = binomial_table(design.v(), t);
    if (c[design.v()][t] > kValidateGuard) break;
    const auto counts = subset_counts(design, t, c);
    const std::uint32_t lambda = counts.front();
    if (lambda == 0 || !std::all_of(counts.begin(), counts.end(), [&](auto n) { return n == lambda; })) break;
    best = Certification{t, lambda};
  }
  return best;
}

DesignParams DesignParams::of(const Design& design) {
  if (!design.certified()) throw Error(ErrorCode::InvalidArgument, "design is not certified");
  return DesignParams{design.v(), design.k(), design.certified()->t, design.certified()->lambda};
}

std::uint64_t DesignParams::replication(unsigned i) const {
  if (i < 1 || i > t)
    throw Error(ErrorCode::InvalidArgument, "replication index " + std::to_string(i) + " outside [1, t]");
  const BigInt num = BigInt(lambda) * binomial(v - i, t - i);
  const BigInt den = binomial(k - i, t - i);
  if (den == 0 || num % den != 0)
    throw Error(ErrorCode::NotAdmissible, "r_" + std::to_string(i) + " = " + num.str() + "/" + den.str() +
                                              " is not an integer");
  return static_cast<std::uint64_t>(num / den);
}

std::uint64_t DesignParams::blocks() const {
  const BigInt num = BigInt(lambda) * binomial(v, t);
  const BigInt den = binomial(k, t);
  if (den == 0 || num % den != 0) throw Error(ErrorCode::NotAdmissible, "block count is not an integer");
  return static_cast<std::uint64_t>(num / den);
}

bool DesignParams::admissible() const {
  try {
    for (unsigned i = 1; i <= t; ++i) (void)replication(i);
    (void)blocks();
    return true;
  } catch (const Error&) {
    return false;
  }
}

Design load_design(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto parse_error = [&](const std::string& what) {
    return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
  };
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      return true;
    }
    return false;
  };
  auto parse_ints = [&](const std::string& s) {
    std::istringstream ls(s);
    std::vector<long long> values;
    std::string token;
    while (ls >> token) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        throw parse_error("expected integer, got '" + token + "'");
      }
      if (used != token.size() || value < 0) throw parse_error("expected nonnegative integer, got '" + token + "'");
      values.push_back(value);
    }
    return values;
  };

  if (!next_content_line()) throw parse_error("missing header");
  const auto header = parse_ints(line);
  if (header.size() != 3) throw parse_error("header must be 'v b k'");
  const auto v = static_cast<std::size_t>(header[0]);
  const auto b = static_cast<std::size_t>(header[1]);
  const auto k = static_cast<std::size_t>(header[2]);
  std::vector<Block> blocks;
  blocks.reserve(b);
  for (std::size_t i = 0; i < b; ++i) {
    if (!next_content_line()) throw parse_error("expected " + std::to_string(b) + " blocks, found " + std::to_string(i));
    const auto values = parse_ints(line);
    if (values.size() != k)
      throw Error(ErrorCode::InvariantViolation, "line " + std::to_string(line_no) + ": block has " +
                                                     std::to_string(values.size()) + " points, expected " +
                                                     std::to_string(k));
    Block block;
    for (auto x : values) {
      if (static_cast<std::size_t>(x) >= v)
        throw Error(ErrorCode::InvariantViolation,
                    "line " + std::to_string(line_no) + ": point " + std::to_string(x) + " >= v = " + std::to_string(v));
      block.push_back(static_cast<Point>(x));
    }
    blocks.push_back(std::move(block));
  }
  if (next_content_line()) throw parse_error("unexpected content after " + std::to_string(b) + " blocks");
  return Design(v, std::move(blocks));
}

std::string store_design(const Design& design) {
  std::string out = std::to_string(design.v()) + " " + std::to_string(design.b()) + " " +
                    std::to_string(design.k()) + "\n";
  for (const Block& block : design.blocks()) {
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(block[j]);
    }
    out += '\n';
  }
  return out;
}

Design read_design_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_design(buf.str());
}

void write_design_file(const Design& design, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << store_design(design);
}

}  // namespace rts::design
