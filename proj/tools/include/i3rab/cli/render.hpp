#pragma once

#include <string>

#include "i3rab/conllx.hpp"

namespace i3rab::cli {

// Indented head -> dependent lines, one per token:
//   ROOT → يأكل (V) [VB]
//     يأكل → الرجل (N) [AGENT]
std::string render_text(const conllx::Sentence& s);

struct SvgOptions {
  bool rtl = false;  // mirror the layout so the first token sits on the right
};

// Standalone SVG: tokens on a baseline in id order, labelled arcs above.
std::string render_svg(const conllx::Sentence& s, const SvgOptions& options = {});

}  // namespace i3rab::cli
