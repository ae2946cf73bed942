#pragma once

#include <string>

#include "i3rab/conllx.hpp"

namespace i3rab::bench {

inline std::string data_path(const std::string& name) { return std::string(I3RAB_DATA_DIR) + "/" + name; }

inline const conllx::Treebank& padt() {
  static const auto tb = conllx::read_treebank_file(data_path("figures.padt.conll"));
  return tb;
}

inline const conllx::Treebank& i3rab() {
  static const auto tb = conllx::read_treebank_file(data_path("figures.i3rab.conll"));
  return tb;
}

// The bundled treebank repeated `copies` times.
inline conllx::Treebank repeated(const conllx::Treebank& tb, int copies) {
  conllx::Treebank out;
  for (int i = 0; i < copies; ++i) out.sentences.insert(out.sentences.end(), tb.sentences.begin(), tb.sentences.end());
  return out;
}

}  // namespace i3rab::bench
