#include "i3rab/cli/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "i3rab/strings.hpp"

namespace i3rab::cli {

namespace {

void render_subtree(const conllx::Sentence& s, int id, int depth, std::string& out) {
  if (static_cast<std::size_t>(depth) > s.size()) return;  // cyclic input
  const auto& t = s.at(id);
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += (t.head == 0 ? std::string("ROOT") : s.at(t.head).form) + " → " + t.form + " (" + t.cpostag + ") [" +
         t.deprel + "]\n";
  for (const auto& d : s.tokens) {
    if (d.head == id) render_subtree(s, d.id, depth + 1, out);
  }
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr int kMargin = 20;
constexpr int kLevelHeight = 28;
constexpr int kBaselineGap = 30;

}  // namespace

std::string render_text(const conllx::Sentence& s) {
  std::string out;
  for (const auto& t : s.tokens) {
    if (t.head == 0) render_subtree(s, t.id, 0, out);
  }
  return out;
}

std::string render_svg(const conllx::Sentence& s, const SvgOptions& options) {
  const std::size_t n = s.size();
  std::vector<int> width(n), centre(n);
  int x = kMargin;
  for (std::size_t i = 0; i < n; ++i) {
    const int chars = static_cast<int>(std::max(strings::utf8_length(s.tokens[i].form),
                                                strings::utf8_length(s.tokens[i].deprel)));
    width[i] = std::max(70, chars * 11 + 24);
    centre[i] = x + width[i] / 2;
    x += width[i];
  }
  const int total_width = x + kMargin;
  if (options.rtl) {
    for (auto& c : centre) c = total_width - c;
  }

  int max_span = 1;
  for (const auto& t : s.tokens) {
    max_span = std::max(max_span, t.head == 0 ? 1 : std::abs(t.head - t.id));
  }
  const int top = kMargin + 16;
  const int baseline = top + max_span * kLevelHeight + kBaselineGap;
  const int height = baseline + 50;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(total_width) + "\" height=\"" +
         std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(total_width) + " " + std::to_string(height) +
         "\" font-family=\"'Amiri', 'Noto Naskh Arabic', 'Scheherazade New', 'DejaVu Sans', Arial, sans-serif\">\n";
  out += "  <defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"4\" refY=\"4\" "
         "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#333\"/></marker></defs>\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = s.tokens[i];
    const std::string cx = std::to_string(centre[i]);
    out += "  <text x=\"" + cx + "\" y=\"" + std::to_string(baseline) + "\" font-size=\"16\" text-anchor=\"middle\">" +
           xml_escape(t.form) + "</text>\n";
    out += "  <text x=\"" + cx + "\" y=\"" + std::to_string(baseline + 20) +
           "\" font-size=\"11\" fill=\"#666\" text-anchor=\"middle\">" + xml_escape(t.cpostag) + "</text>\n";
  }

  const int arc_foot = baseline - 18;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = s.tokens[i];
    const int dep_x = centre[i];
    if (t.head == 0) {
      out += "  <line x1=\"" + std::to_string(dep_x) + "\" y1=\"" + std::to_string(top) + "\" x2=\"" +
             std::to_string(dep_x) + "\" y2=\"" + std::to_string(arc_foot) +
             "\" stroke=\"#333\" marker-end=\"url(#arrow)\"/>\n";
      out += "  <text x=\"" + std::to_string(dep_x) + "\" y=\"" + std::to_string(top - 4) +
             "\" font-size=\"11\" text-anchor=\"middle\">ROOT " + xml_escape(t.deprel) + "</text>\n";
      continue;
    }
    const int head_x = centre[static_cast<std::size_t>(t.head - 1)];
    const int lift = std::abs(t.head - t.id) * kLevelHeight;
    const int peak = arc_foot - lift;
    const int mid_x = (head_x + dep_x) / 2;
    out += "  <path d=\"M" + std::to_string(head_x) + "," + std::to_string(arc_foot) + " C" + std::to_string(head_x) +
           "," + std::to_string(peak) + " " + std::to_string(dep_x) + "," + std::to_string(peak) + " " +
           std::to_string(dep_x) + "," + std::to_string(arc_foot) +
           "\" fill=\"none\" stroke=\"#333\" marker-end=\"url(#arrow)\"/>\n";
    out += "  <text x=\"" + std::to_string(mid_x) + "\" y=\"" + std::to_string(arc_foot - lift * 3 / 4 - 4) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + xml_escape(t.deprel) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace i3rab::cli
