#pragma once

#include <cstdint>
#include <string>

#include "rts/design.hpp"

namespace rts::design {

/// Steiner triple system STS(v), 7 <= v <= 99, v = 1 or 3 (mod 6).
/// Bose construction for v = 3 (mod 6), Skolem for v = 1 (mod 6).
/// Point (x, i) of Q x Z_3 is labelled 3x + i; Skolem's extra point is v-1.
Design make_sts(std::uint32_t v);

/// Lines of AG(2, q), q a prime power with q^2 <= 128. Point (i, j) is
/// labelled q*i + j (field ranks). Lines are listed by parallel class:
/// first i = c, then j = m*i + c for each slope m.
Design make_affine_plane(std::uint32_t q);

/// SQS(8) (Boolean quadruples of GF(2)^3) or the unique SQS(10).
Design make_sqs(std::uint32_t v);

/// Inversive plane 3-(q^2+1, q+1, 1): images of GF(q) u {inf} under
/// PGL(2, q^2). GF(q^2) elements keep their field rank, inf is q^2.
/// Blocks are sorted lexicographically.
Design make_inversive_plane(std::uint32_t q);

/// Dispatch by family name: sts, affine, sqs, inversive.
Design make_family(const std::string& family, std::uint32_t order);

}  // namespace rts::design
