#include "gprod/vertex_group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>

#include "gprod/rational.hpp"

namespace gprod {

namespace {

std::int64_t parse_integer(std::string_view token) {
  std::int64_t out = 0;
  std::string_view t = token;
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw Error("invalid exponent '" + std::string(token) + "'");
  }
  return out;
}

}  // namespace

VertexGroup VertexGroup::integers() {
  VertexGroup g;
  g.kind_ = GroupKind::integers;
  g.generators_ = {1, -1};
  return g;
}

VertexGroup VertexGroup::cyclic(std::int64_t order) {
  if (order < 2) throw Error("vertex groups are non-trivial: cyclic order must be >= 2");
  VertexGroup g;
  g.kind_ = GroupKind::cyclic;
  g.modulus_ = order;
  g.generators_ = order == 2 ? std::vector<Element>{1} : std::vector<Element>{1, order - 1};
  return g;
}

VertexGroup VertexGroup::table(std::vector<std::string> element_names,
                               const std::vector<std::vector<std::string>>& products,
                               const std::vector<std::string>& generators) {
  const std::size_t n = element_names.size();
  if (n < 2) throw Error("vertex groups are non-trivial: table needs at least 2 elements");
  auto t = std::make_shared<Table>();
  t->names = std::move(element_names);
  auto lookup = [&](const std::string& name) -> Element {
    auto it = std::find(t->names.begin(), t->names.end(), name);
    if (it == t->names.end()) throw Error("unknown table element '" + name + "'");
    return static_cast<Element>(it - t->names.begin());
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (t->names[i] == t->names[j]) throw Error("duplicate table element '" + t->names[i] + "'");
    }
  }
  if (products.size() != n) throw Error("multiplication table must have one row per element");
  t->mul.assign(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (products[i].size() != n) throw Error("multiplication table rows must be complete");
    for (std::size_t j = 0; j < n; ++j) t->mul[i][j] = lookup(products[i][j]);
  }

  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = t->mul[e][x] == static_cast<Element>(x) && t->mul[x][e] == static_cast<Element>(x);
    }
    if (ok) identity = static_cast<Element>(e);
  }
  if (!identity) throw Error("multiplication table has no identity");
  t->identity = *identity;

  t->inv.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (t->mul[x][y] == t->identity && t->mul[y][x] == t->identity) {
        t->inv[x] = static_cast<Element>(y);
        break;
      }
    }
    if (t->inv[x] < 0) throw Error("element '" + t->names[x] + "' has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t->mul[t->mul[a][b]][c] != t->mul[a][t->mul[b][c]]) {
          throw Error("multiplication table is not associative at (" + t->names[a] + "," +
                      t->names[b] + "," + t->names[c] + ")");
        }
      }
    }
  }

  VertexGroup g;
  g.kind_ = GroupKind::table;
  for (const auto& name : generators) {
    Element x = lookup(name);
    if (x == t->identity) throw Error("generator '" + name + "' is the identity");
    if (std::find(g.generators_.begin(), g.generators_.end(), x) == g.generators_.end()) {
      g.generators_.push_back(x);
    }
  }
  for (Element x : g.generators_) {
    if (std::find(g.generators_.begin(), g.generators_.end(), t->inv[x]) == g.generators_.end()) {
      throw Error("generating set is not closed under inverses: missing inverse of '" +
                  t->names[x] + "'");
    }
  }

  // Breadth-first search over the Cayley graph, memoizing word lengths.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  t->length.assign(n, kUnset);
  t->length[t->identity] = 0;
  std::deque<Element> queue{t->identity};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element s : g.generators_) {
      Element y = t->mul[x][s];
      if (t->length[y] == kUnset) {
        t->length[y] = t->length[x] + 1;
        queue.push_back(y);
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (t->length[x] == kUnset) {
      throw Error("generators do not generate the table group (missing '" + t->names[x] + "')");
    }
  }
  g.table_ = std::move(t);
  return g;
}

std::optional<std::uint64_t> VertexGroup::order() const {
  switch (kind_) {
    case GroupKind::integers: return std::nullopt;
    case GroupKind::cyclic: return static_cast<std::uint64_t>(modulus_);
    case GroupKind::table: return table_->names.size();
  }
  return std::nullopt;
}

Element VertexGroup::identity() const {
  return kind_ == GroupKind::table ? table_->identity : 0;
}

bool VertexGroup::is_valid(Element g) const {
  switch (kind_) {
    case GroupKind::integers: return true;
    case GroupKind::cyclic: return g >= 0 && g < modulus_;
    case GroupKind::table: return g >= 0 && static_cast<std::size_t>(g) < table_->names.size();
  }
  return false;
}

Element VertexGroup::multiply(Element a, Element b) const {
  switch (kind_) {
    case GroupKind::integers: return a + b;
    case GroupKind::cyclic: return (a + b) % modulus_;
    case GroupKind::table: return table_->mul[a][b];
  }
  return 0;
}

Element VertexGroup::inverse(Element g) const {
  switch (kind_) {
    case GroupKind::integers: return -g;
    case GroupKind::cyclic: return g == 0 ? 0 : modulus_ - g;
    case GroupKind::table: return table_->inv[g];
  }
  return 0;
}

std::size_t VertexGroup::word_length(Element g) const {
  switch (kind_) {
    case GroupKind::integers: return static_cast<std::size_t>(g < 0 ? -g : g);
    case GroupKind::cyclic: return static_cast<std::size_t>(std::min(g, modulus_ - g));
    case GroupKind::table: return table_->length[g];
  }
  return 0;
}

std::vector<Element> VertexGroup::elements() const {
  if (!is_finite()) throw Error("elements() requires a finite group");
  std::vector<Element> out;
  out.push_back(identity());
  auto n = static_cast<Element>(*order());
  for (Element x = 0; x < n; ++x) {
    if (x != identity()) out.push_back(x);
  }
  return out;
}

std::vector<Element> VertexGroup::ball(std::size_t radius) const {
  std::vector<Element> out;
  if (kind_ == GroupKind::integers) {
    out.push_back(0);
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(radius); ++k) {
      out.push_back(-k);
      out.push_back(k);
    }
    return out;
  }
  for (Element x : elements()) {
    if (word_length(x) <= radius) out.push_back(x);
  }
  std::stable_sort(out.begin(), out.end(), [&](Element a, Element b) {
    return word_length(a) < word_length(b);
  });
  return out;
}

Element VertexGroup::parse_element(std::string_view token) const {
  switch (kind_) {
    case GroupKind::integers: return parse_integer(token);
    case GroupKind::cyclic: {
      std::int64_t k = parse_integer(token) % modulus_;
      return k < 0 ? k + modulus_ : k;
    }
    case GroupKind::table: {
      auto it = std::find(table_->names.begin(), table_->names.end(), token);
      if (it == table_->names.end()) {
        throw Error("unknown group element '" + std::string(token) + "'");
      }
      return static_cast<Element>(it - table_->names.begin());
    }
  }
  return 0;
}

std::string VertexGroup::format_element(Element g) const {
  if (kind_ == GroupKind::table) return table_->names.at(static_cast<std::size_t>(g));
  return std::to_string(g);
}

const std::vector<std::string>& VertexGroup::element_names() const {
  static const std::vector<std::string> kEmpty;
  return table_ ? table_->names : kEmpty;
}

std::vector<std::vector<std::string>> VertexGroup::product_names() const {
  std::vector<std::vector<std::string>> out;
  if (!table_) return out;
  for (const auto& row : table_->mul) {
    auto& r = out.emplace_back();
    for (Element x : row) r.push_back(table_->names[x]);
  }
  return out;
}

std::vector<std::string> VertexGroup::generator_names() const {
  std::vector<std::string> out;
  for (Element x : generators_) out.push_back(format_element(x));
  return out;
}

bool operator==(const VertexGroup& a, const VertexGroup& b) {
  if (a.kind_ != b.kind_ || a.modulus_ != b.modulus_ || a.generators_ != b.generators_) {
    return false;
  }
  if (a.kind_ != GroupKind::table) return true;
  return a.table_->names == b.table_->names && a.table_->mul == b.table_->mul;
}

VertexElement multiply(const VertexElement& a, const VertexElement& b) {
  if (a.group == nullptr || a.group != b.group) {
    throw Error("cannot multiply elements of different vertex groups");
  }
  return {a.group, a.group->multiply(a.value, b.value)};
}

}  // namespace gprod
