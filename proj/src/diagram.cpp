#include "gauss/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "gauss/errors.hpp"

namespace gauss {

namespace {

// Compares the first-occurrence relabeling of `d` read from `start` in
// direction `step` (+1 or -1) against `best`. Returns <0, 0, >0.
// Stops at the first differing position.
int compare_reading(const GaussDiagram& d, int start, int step, std::span<const int> best,
                    std::vector<int>& relabel) {
  const int m = d.slot_count();
  std::fill(relabel.begin(), relabel.end(), -1);
  int next = 0;
  for (int t = 0; t < m; ++t) {
    const int chord = d.chord_at(start + step * t);
    if (relabel[chord] < 0) relabel[chord] = next++;
    const int v = relabel[chord];
    if (v != best[t]) return v < best[t] ? -1 : 1;
  }
  return 0;
}

std::vector<int> read_labels(const GaussDiagram& d, int start, int step) {
  const int m = d.slot_count();
  std::vector<int> relabel(d.chord_count(), -1);
  std::vector<int> out(m);
  int next = 0;
  for (int t = 0; t < m; ++t) {
    const int chord = d.chord_at(start + step * t);
    if (relabel[chord] < 0) relabel[chord] = next++;
    out[t] = relabel[chord];
  }
  return out;
}

GaussDiagram from_label_sequence(std::span<const int> labels) {
  std::vector<int> partner(labels.size(), -1);
  std::map<int, int> first;
  for (int s = 0; s < static_cast<int>(labels.size()); ++s) {
    auto [it, fresh] = first.emplace(labels[s], s);
    if (!fresh) {
      partner[s] = it->second;
      partner[it->second] = s;
    }
  }
  return GaussDiagram::from_partners(std::move(partner));
}

bool is_canonical_reading(const GaussDiagram& d, std::span<const int> labels,
                          std::vector<int>& scratch) {
  const int m = d.slot_count();
  for (int step : {1, -1}) {
    for (int start = 0; start < m; ++start) {
      if (compare_reading(d, start, step, labels, scratch) < 0) return false;
    }
  }
  return true;
}

void extend_labels(int n, std::vector<int>& labels, std::vector<int>& open, int next,
                   std::vector<int>& scratch, std::vector<GaussDiagram>& out) {
  const int m = 2 * n;
  const int pos = static_cast<int>(labels.size());
  if (pos == m) {
    GaussDiagram d = from_label_sequence(labels);
    if (is_canonical_reading(d, labels, scratch)) out.push_back(std::move(d));
    return;
  }
  const int remaining = m - pos;
  // Close an open chord (open is kept sorted ascending).
  for (std::size_t k = 0; k < open.size(); ++k) {
    const int c = open[k];
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(k));
    labels.push_back(c);
    extend_labels(n, labels, open, next, scratch, out);
    labels.pop_back();
    open.insert(open.begin() + static_cast<std::ptrdiff_t>(k), c);
  }
  // Open a new chord if there is still room to close everything.
  if (next < n && static_cast<int>(open.size()) + 2 <= remaining) {
    open.push_back(next);
    labels.push_back(next);
    extend_labels(n, labels, open, next + 1, scratch, out);
    labels.pop_back();
    open.pop_back();
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw PartitionError("bad slot index '" + std::string(s) + "' in pair '" + std::string(context) +
                         "'");
  }
  return value;
}

}  // namespace

GaussDiagram GaussDiagram::from_partners(std::vector<int> partner) {
  const int m = static_cast<int>(partner.size());
  if (m == 0) throw EmptyDiagramError();
  if (m % 2 != 0) throw PartitionError("odd number of slots: " + std::to_string(m));
  for (int s = 0; s < m; ++s) {
    const int p = partner[s];
    if (p < 0 || p >= m) throw PartitionError("slot " + std::to_string(s) + " has no partner");
    if (p == s) throw PartitionError("slot " + std::to_string(s) + " paired with itself");
    if (partner[p] != s) throw PartitionError("slot " + std::to_string(p) + " is paired twice");
  }
  GaussDiagram d;
  d.partner_ = std::move(partner);
  d.label_.assign(m, -1);
  for (int s = 0; s < m; ++s) {
    if (d.label_[s] >= 0) continue;
    const int c = static_cast<int>(d.chords_.size());
    d.label_[s] = c;
    d.label_[d.partner_[s]] = c;
    d.chords_.emplace_back(s, d.partner_[s]);
  }
  return d;
}

GaussDiagram GaussDiagram::rotated(int k) const {
  const int m = slot_count();
  std::vector<int> p(m);
  for (int t = 0; t < m; ++t) p[t] = wrap(partner(t + k) - k);
  return from_partners(std::move(p));
}

GaussDiagram GaussDiagram::reflected() const {
  const int m = slot_count();
  std::vector<int> p(m);
  for (int t = 0; t < m; ++t) p[t] = wrap(-partner(-t));
  return from_partners(std::move(p));
}

std::string chord_name(int chord, int chord_count) {
  if (chord_count <= 26) return std::string(1, static_cast<char>('A' + chord));
  return std::to_string(chord);
}

std::string GaussDiagram::word() const {
  std::string out;
  const bool letters = chord_count() <= 26;
  for (int s = 0; s < slot_count(); ++s) {
    if (!letters && s > 0) out += ' ';
    out += chord_name(label_[s], chord_count());
  }
  return out;
}

std::string GaussDiagram::pair_text() const {
  std::string out;
  for (const auto& [a, b] : chords_) {
    if (!out.empty()) out += ',';
    out += std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

std::string CanonicalWord::text() const {
  const int n = static_cast<int>(labels.size()) / 2;
  std::string out;
  for (std::size_t s = 0; s < labels.size(); ++s) {
    if (n > 26 && s > 0) out += ' ';
    out += chord_name(labels[s], n);
  }
  return out;
}

GaussDiagram CanonicalWord::diagram() const { return from_label_sequence(labels); }

InterlacementGraph::InterlacementGraph(int vertex_count)
    : n_(vertex_count), adj_(static_cast<std::size_t>(vertex_count) * vertex_count, 0) {}

void InterlacementGraph::connect(int a, int b) {
  adj_[static_cast<std::size_t>(a) * n_ + b] = 1;
  adj_[static_cast<std::size_t>(b) * n_ + a] = 1;
}

int InterlacementGraph::degree(int a) const {
  int deg = 0;
  for (int b = 0; b < n_; ++b) deg += adjacent(a, b) ? 1 : 0;
  return deg;
}

std::vector<int> InterlacementGraph::degrees() const {
  std::vector<int> out(n_);
  for (int a = 0; a < n_; ++a) out[a] = degree(a);
  return out;
}

std::vector<std::pair<int, int>> InterlacementGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (adjacent(a, b)) out.emplace_back(a, b);
  return out;
}

std::string InterlacementGraph::to_dot(std::string_view name) const {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int a = 0; a < n_; ++a) os << "  " << chord_name(a, n_) << ";\n";
  for (const auto& [a, b] : edges())
    os << "  " << chord_name(a, n_) << " -- " << chord_name(b, n_) << ";\n";
  os << "}\n";
  return os.str();
}

GaussDiagram parse_word(std::string_view text) {
  text = trim(text);
  std::vector<std::string> tokens;
  const bool spaced = std::any_of(text.begin(), text.end(),
                                  [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (spaced) {
    std::istringstream is{std::string(text)};
    for (std::string tok; is >> tok;) tokens.push_back(tok);
  } else {
    for (char c : text) tokens.emplace_back(1, c);
  }
  if (tokens.empty()) throw EmptyDiagramError();

  // Report offending tokens in order of first appearance.
  std::map<std::string, std::vector<int>> where;
  std::vector<std::string> order;
  for (int s = 0; s < static_cast<int>(tokens.size()); ++s) {
    auto& slots = where[tokens[s]];
    if (slots.empty()) order.push_back(tokens[s]);
    slots.push_back(s);
  }
  for (const auto& tok : order) {
    const auto& slots = where[tok];
    if (slots.size() != 2) throw MalformedWordError(tok, static_cast<int>(slots.size()));
  }
  std::vector<int> partner(tokens.size());
  for (const auto& [tok, slots] : where) {
    partner[slots[0]] = slots[1];
    partner[slots[1]] = slots[0];
  }
  return GaussDiagram::from_partners(std::move(partner));
}

GaussDiagram from_chord_pairs(std::span<const std::pair<int, int>> pairs) {
  if (pairs.empty()) throw EmptyDiagramError();
  const int m = 2 * static_cast<int>(pairs.size());
  std::vector<int> partner(m, -1);
  auto claim = [&](int slot, int other) {
    if (slot < 0 || slot >= m)
      throw PartitionError("slot " + std::to_string(slot) + " out of range 0.." + std::to_string(m - 1));
    if (partner[slot] >= 0) throw PartitionError("slot " + std::to_string(slot) + " repeated");
    partner[slot] = other;
  };
  for (const auto& [a, b] : pairs) {
    if (a == b) throw PartitionError("slot " + std::to_string(a) + " paired with itself");
    claim(a, b);
    claim(b, a);
  }
  return GaussDiagram::from_partners(std::move(partner));
}

GaussDiagram parse_chord_pairs(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw EmptyDiagramError();
  std::vector<std::pair<int, int>> pairs;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos)
      throw PartitionError("expected 'a-b' pair, got '" + std::string(trim(item)) + "'");
    pairs.emplace_back(parse_int(item.substr(0, dash), item), parse_int(item.substr(dash + 1), item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return from_chord_pairs(pairs);
}

GaussDiagram parse_diagram(std::string_view text) {
  if (text.find('-') != std::string_view::npos) return parse_chord_pairs(text);
  return parse_word(text);
}

CanonicalWord canonical_form(const GaussDiagram& d) {
  std::vector<int> best = read_labels(d, 0, 1);
  std::vector<int> scratch(d.chord_count());
  for (int step : {1, -1}) {
    for (int start = 0; start < d.slot_count(); ++start) {
      if (compare_reading(d, start, step, best, scratch) < 0) best = read_labels(d, start, step);
    }
  }
  return CanonicalWord{std::move(best)};
}

InterlacementGraph interlacement_graph(const GaussDiagram& d) {
  const int n = d.chord_count();
  InterlacementGraph g(n);
  for (int x = 0; x < n; ++x) {
    const auto [a, b] = d.chord_slots(x);
    for (int y = x + 1; y < n; ++y) {
      const auto [c, e] = d.chord_slots(y);
      const bool c_inside = a < c && c < b;
      const bool e_inside = a < e && e < b;
      if (c_inside != e_inside) g.connect(x, y);
    }
  }
  return g;
}

bool parity_check(const GaussDiagram& d) {
  const auto g = interlacement_graph(d);
  for (int c = 0; c < g.vertex_count(); ++c)
    if (g.degree(c) % 2 != 0) return false;
  return true;
}

std::vector<GaussDiagram> enumerate_diagrams(int n) {
  std::vector<GaussDiagram> out;
  if (n < 1) return out;
  std::vector<int> labels;
  std::vector<int> open;
  std::vector<int> scratch(n);
  labels.reserve(2 * n);
  extend_labels(n, labels, open, 0, scratch, out);
  return out;
}

}  // namespace gauss
