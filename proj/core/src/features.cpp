#include "i3rab/parser.hpp"

namespace i3rab::parser {

namespace {

constexpr std::string_view kNull = "NULL";
constexpr std::string_view kRoot = "ROOT";

struct Slot {
  std::string_view name;
  int id = -1;  // -1 absent, 0 artificial root
};

std::string word_attr(const Sentence& s, int id, std::string_view attr) {
  if (id < 0) return std::string(kNull);
  if (id == 0) return std::string(kRoot);
  const auto& t = s.at(id);
  if (attr == "form") return t.form;
  if (attr == "lemma") return t.lemma;
  if (attr == "cpos") return t.cpostag;
  return t.postag;
}

// Label of the leftmost (or rightmost) dependent attached so far.
std::string dependent_label(const Configuration& c, int id, bool leftmost) {
  if (id < 0) return std::string(kNull);
  int best = -1;
  for (std::size_t d = 1; d < c.heads.size(); ++d) {
    if (c.heads[d] != id) continue;
    const int di = static_cast<int>(d);
    if (best < 0 || (leftmost ? di < best : di > best)) best = di;
  }
  return best < 0 ? std::string(kNull) : c.labels[static_cast<std::size_t>(best)];
}

std::string distance_bucket(int s0, int b0) {
  if (s0 < 0 || b0 < 0) return std::string(kNull);
  const int d = b0 - s0;
  if (d >= 5) return "5+";
  return std::to_string(d);
}

}  // namespace

const std::vector<std::string>& default_templates() {
  static const std::vector<std::string> kTemplates = {
      "bias",
      "s0.form", "s0.lemma", "s0.cpos", "s0.pos", "s0.feats",
      "s1.form", "s1.lemma", "s1.cpos", "s1.pos", "s1.feats",
      "b0.form", "b0.lemma", "b0.cpos", "b0.pos", "b0.feats",
      "b1.form", "b1.lemma", "b1.cpos", "b1.pos", "b1.feats",
      "s0.pos+b0.pos", "s1.pos+s0.pos", "b0.pos+b1.pos", "s0.cpos+b0.cpos",
      "s0.form+b0.pos", "s0.pos+b0.form",
      "s0.ldep", "s0.rdep", "b0.ldep", "s0.pos+s0.ldep+s0.rdep",
      "dist", "s0.headed",
  };
  return kTemplates;
}

std::vector<std::string> extract_features(const Configuration& c, const Sentence& s) {
  const std::size_t depth = c.stack.size();
  const Slot slots[] = {
      {"s0", depth >= 1 ? c.stack[depth - 1] : -1},
      {"s1", depth >= 2 ? c.stack[depth - 2] : -1},
      {"b0", !c.buffer.empty() ? c.buffer[0] : -1},
      {"b1", c.buffer.size() >= 2 ? c.buffer[1] : -1},
  };
  std::vector<std::string> out;
  out.reserve(64);
  out.emplace_back("bias");
  for (const auto& slot : slots) {
    const std::string prefix(slot.name);
    for (const char* attr : {"form", "lemma", "cpos", "pos"}) {
      out.push_back(prefix + "." + attr + "=" + word_attr(s, slot.id, attr));
    }
    if (slot.id > 0) {
      for (const auto& f : s.at(slot.id).feats) out.push_back(prefix + ".feat." + f.key + "=" + f.value);
    } else {
      out.push_back(prefix + ".feats=" + std::string(slot.id == 0 ? kRoot : kNull));
    }
  }
  const int s0 = slots[0].id, s1 = slots[1].id, b0 = slots[2].id, b1 = slots[3].id;
  const auto pos = [&](int id) { return word_attr(s, id, "pos"); };
  const std::string s0_l = dependent_label(c, s0, true);
  const std::string s0_r = dependent_label(c, s0, false);
  out.push_back("s0.pos+b0.pos=" + pos(s0) + "+" + pos(b0));
  out.push_back("s1.pos+s0.pos=" + pos(s1) + "+" + pos(s0));
  out.push_back("b0.pos+b1.pos=" + pos(b0) + "+" + pos(b1));
  out.push_back("s0.cpos+b0.cpos=" + word_attr(s, s0, "cpos") + "+" + word_attr(s, b0, "cpos"));
  out.push_back("s0.form+b0.pos=" + word_attr(s, s0, "form") + "+" + pos(b0));
  out.push_back("s0.pos+b0.form=" + pos(s0) + "+" + word_attr(s, b0, "form"));
  out.push_back("s0.ldep=" + s0_l);
  out.push_back("s0.rdep=" + s0_r);
  out.push_back("b0.ldep=" + dependent_label(c, b0, true));
  out.push_back("s0.pos+s0.ldep+s0.rdep=" + pos(s0) + "+" + s0_l + "+" + s0_r);
  out.push_back("dist=" + distance_bucket(s0, b0));
  out.push_back(std::string("s0.headed=") + (s0 > 0 ? (c.has_head(s0) ? "Y" : "N") : std::string(kNull)));
  return out;
}

}  // namespace i3rab::parser
