#include "gprod/normal_form.hpp"

#include <sstream>
#include <unordered_set>

#include "gprod/rational.hpp"

namespace gprod {

std::size_t NormalFormHash::operator()(const NormalForm& g) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Syllable& s : g) {
    h ^= static_cast<std::size_t>(s.vertex) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<Element>{}(s.element) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

GraphProduct::GraphProduct(SimplicialGraph graph, std::vector<VertexGroup> groups)
    : graph_(std::move(graph)), groups_(std::move(groups)) {
  if (groups_.size() != graph_.size()) {
    throw Error("graph product needs exactly one vertex group per vertex");
  }
}

const VertexGroup& GraphProduct::group(Vertex v) const {
  graph_.check_vertex(v);
  return groups_[v];
}

void GraphProduct::check_syllable(const Syllable& s) const {
  if (s.vertex >= groups_.size()) {
    throw Error("unknown vertex index " + std::to_string(s.vertex));
  }
  if (!groups_[s.vertex].is_valid(s.element)) {
    throw Error("element " + std::to_string(s.element) + " does not belong to the group of vertex '" +
                graph_.name(s.vertex) + "'");
  }
}

void GraphProduct::append_reduced(std::vector<Syllable>& word, const Syllable& s) const {
  const VertexGroup& g = groups_[s.vertex];
  if (g.is_identity(s.element)) return;
  for (std::size_t j = word.size(); j-- > 0;) {
    const Vertex u = word[j].vertex;
    if (u == s.vertex) {
      // s commutes leftwards past word[j+1..] and merges with word[j].
      Element merged = g.multiply(word[j].element, s.element);
      if (g.is_identity(merged)) {
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(j));
      } else {
        word[j].element = merged;
      }
      return;
    }
    if (!graph_.adjacent(u, s.vertex)) break;
  }
  word.push_back(s);
}

NormalForm GraphProduct::canonicalize(std::vector<Syllable> reduced) const {
  std::vector<Syllable> out;
  out.reserve(reduced.size());
  std::vector<bool> used(reduced.size(), false);
  for (std::size_t emitted = 0; emitted < reduced.size(); ++emitted) {
    std::size_t best = reduced.size();
    // Unemitted vertices seen so far; a syllable is movable to the front iff
    // it commutes with every one of them.
    VertexSet before;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (used[i]) continue;
      const Vertex v = reduced[i].vertex;
      if (before.is_subset_of(graph_.link(v)) &&
          (best == reduced.size() || v < reduced[best].vertex)) {
        best = i;
      }
      before.insert(v);
    }
    used[best] = true;
    out.push_back(reduced[best]);
  }
  return NormalForm(std::move(out));
}

NormalForm GraphProduct::reduce(std::span<const Syllable> word) const {
  std::vector<Syllable> work;
  work.reserve(word.size());
  for (const Syllable& s : word) {
    check_syllable(s);
    append_reduced(work, s);
  }
  return canonicalize(std::move(work));
}

NormalForm GraphProduct::letter(Vertex v, Element g) const {
  Syllable s{v, g};
  return reduce(std::span<const Syllable>(&s, 1));
}

NormalForm GraphProduct::multiply(const NormalForm& x, const NormalForm& y) const {
  std::vector<Syllable> work = x.syllables();
  for (const Syllable& s : y) {
    check_syllable(s);
    append_reduced(work, s);
  }
  return canonicalize(std::move(work));
}

NormalForm GraphProduct::multiply_syllable(const NormalForm& x, const Syllable& s) const {
  check_syllable(s);
  std::vector<Syllable> work = x.syllables();
  append_reduced(work, s);
  return canonicalize(std::move(work));
}

NormalForm GraphProduct::invert(const NormalForm& x) const {
  std::vector<Syllable> work;
  work.reserve(x.size());
  for (auto it = x.syllables().rbegin(); it != x.syllables().rend(); ++it) {
    work.push_back({it->vertex, groups_[it->vertex].inverse(it->element)});
  }
  // The reverse of a reduced word is reduced.
  return canonicalize(std::move(work));
}

std::size_t GraphProduct::word_length(const NormalForm& x) const {
  std::size_t total = 0;
  for (const Syllable& s : x) total += groups_[s.vertex].word_length(s.element);
  return total;
}

std::vector<Syllable> GraphProduct::generators() const {
  std::vector<Syllable> out;
  for (Vertex v = 0; v < groups_.size(); ++v) {
    for (Element x : groups_[v].generators()) out.push_back({v, x});
  }
  return out;
}

std::vector<std::vector<NormalForm>> GraphProduct::spheres(std::size_t radius,
                                                           std::size_t limit) const {
  const std::vector<Syllable> gens = generators();
  std::unordered_set<NormalForm, NormalFormHash> seen;
  std::vector<std::vector<NormalForm>> out;
  out.push_back({identity()});
  seen.insert(identity());
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<NormalForm> next;
    for (const NormalForm& g : out.back()) {
      for (const Syllable& s : gens) {
        NormalForm h = multiply_syllable(g, s);
        if (seen.insert(h).second) {
          if (seen.size() > limit) {
            throw ResourceError("ball of radius " + std::to_string(radius) + " exceeds " +
                                std::to_string(limit) + " elements");
          }
          next.push_back(std::move(h));
        }
      }
    }
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<NormalForm> GraphProduct::enumerate_ball(std::size_t radius, std::size_t limit) const {
  std::vector<NormalForm> out;
  for (auto& sphere : spheres(radius, limit)) {
    for (auto& g : sphere) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Syllable> GraphProduct::parse_syllables(std::string_view text) const {
  std::vector<Syllable> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "(empty)") continue;
    auto colon = token.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == token.size()) {
      throw Error("malformed syllable '" + token + "', expected vertex:k");
    }
    Vertex v = graph_.index(token.substr(0, colon));
    const VertexGroup& g = groups_[v];
    std::string payload = token.substr(colon + 1);
    if (g.kind() != GroupKind::table && (payload == "0" || payload == "-0" || payload == "+0")) {
      throw Error("syllable exponent must be nonzero in '" + token + "'");
    }
    out.push_back({v, g.parse_element(payload)});
  }
  return out;
}

std::string GraphProduct::format(std::span<const Syllable> word) const {
  if (word.empty()) return "(empty)";
  std::string out;
  for (const Syllable& s : word) {
    if (!out.empty()) out += ' ';
    out += graph_.name(s.vertex);
    out += ':';
    out += groups_[s.vertex].format_element(s.element);
  }
  return out;
}

std::string GraphProduct::format(const NormalForm& x) const {
  return format(std::span<const Syllable>(x.syllables()));
}

}  // namespace gprod
