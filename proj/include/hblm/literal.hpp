#pragma once

#include <string_view>

#include "hblm/lattice.hpp"
#include "hblm/rings.hpp"

namespace hblm {

/// Parses generator vectors of M written as `pi*f1+eps*f1 ; pi*f2`.
///
/// Generators are separated by ';'. A generator is either a signed sum of
/// terms, each a '*'-product of integer literals, pi, pi^a, w, w^b, eps and
/// exactly one of f1, f2; or a comma-separated list of the 2g coordinates
/// in the standard R-basis, each a signed sum of integers and eps-multiples.
/// Returns the generators as rows (r x 2g). Throws ParseError.
RMatrix parse_generators(const RingCtx& ctx, std::string_view text);

enum class SpanKind { O, R };

/// The O_R-span (default) or the R-span of the parsed generators.
Lattice parse_lattice(const RingCtx& ctx, std::string_view text, SpanKind kind = SpanKind::O);

}  // namespace hblm
