#include <algorithm>
#include <cstdlib>

#include "i3rab/parser.hpp"
#include "i3rab/strings.hpp"

namespace i3rab::parser {

namespace {

[[noreturn]] void malformed(const std::string& message, std::size_t line) {
  throw ParserError(ParserErrc::kMalformedModel, "model line " + std::to_string(line) + ": " + message);
}

// Millionths as a fixed six-decimal string ("-0.250000").
std::string format_micro(std::int64_t micro) {
  const bool negative = micro < 0;
  const std::uint64_t mag = negative ? static_cast<std::uint64_t>(-(micro + 1)) + 1 : static_cast<std::uint64_t>(micro);
  std::string frac = std::to_string(mag % 1000000);
  frac.insert(0, 6 - frac.size(), '0');
  return (negative ? "-" : "") + std::to_string(mag / 1000000) + "." + frac;
}

std::optional<std::int64_t> parse_micro(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos || text.size() - dot - 1 != 6 || dot == 0) return std::nullopt;
  std::int64_t value = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i == dot) continue;
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
    value = value * 10 + (text[i] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

std::vector<Transition> ParserModel::transitions() const {
  std::vector<Transition> out;
  out.reserve(labels.size() * 2 + 2);
  out.push_back(Transition::shift());
  for (const auto& l : labels) out.push_back(Transition::left_arc(l));
  for (const auto& l : labels) out.push_back(Transition::right_arc(l));
  out.push_back(Transition::reduce());
  return out;
}

std::string save_model(const ParserModel& m) {
  std::string out = m.version + "\n" + m.schema_digest + "\n";
  out += "templates:\n";
  for (const auto& t : m.templates) out += t + "\n";
  out += "labels:\n";
  for (const auto& l : m.labels) out += l + "\n";
  out += "root_label: " + m.root_label + "\n";
  out += "fallback_label: " + m.fallback_label + "\n";
  out += "punctuation:\n";
  for (const auto& p : m.punctuation) out += p + "\n";
  out += "weights:\n";

  const auto transitions = m.transitions();
  std::vector<std::string> lines;
  for (const auto& [feature, row] : m.weights) {
    for (std::size_t i = 0; i < row.size() && i < transitions.size(); ++i) {
      if (row[i] != 0) lines.push_back(feature + "\t" + transitions[i].to_string() + "\t" + format_micro(row[i]));
    }
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out += l + "\n";
  return out;
}

ParserModel load_model(std::string_view text) {
  const auto lines = strings::lines(text);
  std::size_t i = 0;
  auto next = [&](std::string_view what) -> std::string_view {
    if (i >= lines.size()) malformed("missing " + std::string(what), i + 1);
    return lines[i++];
  };
  auto expect = [&](std::string_view header) {
    if (next(header) != header) malformed("expected '" + std::string(header) + "'", i);
  };
  auto block = [&](std::string_view until) {
    std::vector<std::string> items;
    while (i < lines.size() && !strings::starts_with(lines[i], until)) items.emplace_back(lines[i++]);
    return items;
  };

  ParserModel m;
  if (next("header") != kModelHeader) malformed("not an I3RAB-MODEL v1 file", 1);
  m.schema_digest = std::string(next("schema digest"));
  expect("templates:");
  m.templates = block("labels:");
  expect("labels:");
  m.labels = block("root_label:");
  if (!std::is_sorted(m.labels.begin(), m.labels.end())) malformed("labels are not sorted", i);
  const auto root = next("root_label");
  if (!strings::starts_with(root, "root_label: ")) malformed("expected root_label", i);
  m.root_label = std::string(root.substr(12));
  const auto fallback = next("fallback_label");
  if (!strings::starts_with(fallback, "fallback_label: ")) malformed("expected fallback_label", i);
  m.fallback_label = std::string(fallback.substr(16));
  expect("punctuation:");
  for (auto& p : block("weights:")) m.punctuation.insert(std::move(p));
  expect("weights:");

  const auto transitions = m.transitions();
  std::map<std::string, std::size_t> index;
  for (std::size_t t = 0; t < transitions.size(); ++t) index[transitions[t].to_string()] = t;
  for (; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto fields = strings::split(lines[i], '\t');
    if (fields.size() != 3) malformed("weight lines need three tab-separated fields", i + 1);
    const auto it = index.find(std::string(fields[1]));
    if (it == index.end()) malformed("unknown transition '" + std::string(fields[1]) + "'", i + 1);
    const auto value = parse_micro(fields[2]);
    if (!value) malformed("bad weight '" + std::string(fields[2]) + "'", i + 1);
    auto& row = m.weights[std::string(fields[0])];
    row.resize(transitions.size(), 0);
    row[it->second] = *value;
  }
  return m;
}

void save_model_file(const std::string& path, const ParserModel& m) { strings::write_file(path, save_model(m)); }

ParserModel load_model_file(const std::string& path) { return load_model(strings::read_file(path)); }

}  // namespace i3rab::parser
